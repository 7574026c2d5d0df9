#include "wallx/lie_expr.hpp"

#include <json.hpp>

namespace wallx {

std::string to_string(GenKind k) {
    switch (k) {
        case GenKind::PiJprime: return "PiJ'";
        case GenKind::JK: return "JK";
        case GenKind::J: return "J";
        case GenKind::P: return "P";
    }
    return "?";
}

std::string GeneratorLabel::to_string() const {
    std::string s = wallx::to_string(kind) + "(" + std::to_string(r) + "," + std::to_string(d);
    if (!tag.empty()) s += ";" + tag;
    return s + ")";
}

LieExpr LieExpr::generator(const GeneratorLabel& label) {
    LieExpr e;
    e.terms_.emplace(Word{label}, Rational(1));
    return e;
}

LieExpr LieExpr::nested(const std::vector<GeneratorLabel>& labels) {
    if (labels.empty()) throw domain_error("lie expr: empty bracket");
    LieExpr acc = generator(labels[0]);
    for (size_t i = 1; i < labels.size(); ++i)
        acc = bracket(acc, generator(labels[i]));
    return acc;
}

LieExpr LieExpr::scaled(const Rational& c) const {
    LieExpr r;
    if (!c.is_zero())
        for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
    return r;
}

LieExpr operator+(const LieExpr& a, const LieExpr& b) {
    LieExpr r = a;
    for (const auto& [w, c] : b.terms_) {
        auto [it, inserted] = r.terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

LieExpr LieExpr::bracket(const LieExpr& a, const LieExpr& b) {
    auto ea = freelie::lie_to_assoc(a.terms_);
    auto eb = freelie::lie_to_assoc(b.terms_);
    LieExpr r;
    r.terms_ = freelie::lyndon_decompose(freelie::commutator(ea, eb));
    return r;
}

LieExpr LieExpr::substitute(
    const std::function<LieExpr(const GeneratorLabel&)>& map) const {
    std::function<LieExpr(const Word&)> eval = [&](const Word& w) -> LieExpr {
        if (w.size() == 1) return map(w[0]);
        size_t s = freelie::standard_split(w);
        Word u(w.begin(), w.begin() + s), v(w.begin() + s, w.end());
        return bracket(eval(u), eval(v));
    };
    LieExpr out;
    for (const auto& [w, c] : terms_) out += eval(w).scaled(c);
    return out;
}

namespace {

std::string render_word(const LieExpr::Word& w) {
    if (w.size() == 1) return w[0].to_string();
    size_t s = freelie::standard_split(w);
    LieExpr::Word u(w.begin(), w.begin() + s), v(w.begin() + s, w.end());
    return "[" + render_word(u) + "," + render_word(v) + "]";
}

nlohmann::json word_to_json(const LieExpr::Word& w) {
    if (w.size() == 1) {
        nlohmann::json leaf;
        leaf["kind"] = to_string(w[0].kind);
        leaf["r"] = w[0].r;
        leaf["d"] = w[0].d;
        if (!w[0].tag.empty()) leaf["weight_tag"] = w[0].tag;
        return leaf;
    }
    size_t s = freelie::standard_split(w);
    LieExpr::Word u(w.begin(), w.begin() + s), v(w.begin() + s, w.end());
    return nlohmann::json::array({word_to_json(u), word_to_json(v)});
}

}  // namespace

std::string LieExpr::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (!(a == Rational(1))) out += a.to_string() + " ";
        out += render_word(w);
    }
    return out;
}

std::string LieExpr::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : terms_) {
        nlohmann::json t;
        t["coefficient"] = c.to_string();
        t["bracket"] = word_to_json(w);
        terms.push_back(std::move(t));
    }
    return terms.dump();
}

}  // namespace wallx
