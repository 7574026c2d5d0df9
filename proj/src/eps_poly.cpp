#include "wallx/eps_poly.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace wallx {

EpsPoly EpsPoly::eps(long long exponent) { return term(exponent, Rational(1)); }

EpsPoly EpsPoly::term(long long exponent, const Rational& coeff) {
    if (exponent < 0) throw domain_error("eps poly: negative exponent");
    EpsPoly p;
    if (!coeff.is_zero()) p.terms_.push_back({exponent, coeff});
    return p;
}

bool EpsPoly::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

bool EpsPoly::is_integer() const {
    if (terms_.empty()) return true;
    return is_rational() && terms_[0].second.is_integer();
}

Rational EpsPoly::coefficient(long long exponent) const {
    for (const auto& [e, c] : terms_)
        if (e == exponent) return c;
    return Rational(0);
}

EpsPoly EpsPoly::operator-() const {
    EpsPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) r.terms_.push_back({e, -c});
    return r;
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& o) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            merged.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            merged.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].second + o.terms_[j].second;
            if (!c.is_zero()) merged.push_back({terms_[i].first, c});
            ++i, ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& o) { return *this += -o; }

EpsPoly& EpsPoly::operator*=(const EpsPoly& o) {
    std::map<long long, Rational> acc;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) acc[ea + eb] += ca * cb;
    terms_.clear();
    for (auto& [e, c] : acc)
        if (!c.is_zero()) terms_.push_back({e, c});
    return *this;
}

EpsPoly& EpsPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

EpsPoly& EpsPoly::operator/=(const Rational& c) {
    if (c.is_zero()) throw domain_error("eps poly: division by zero");
    for (auto& t : terms_) t.second /= c;
    return *this;
}

int EpsPoly::sign() const {
    if (terms_.empty()) return 0;
    return terms_.front().second.sign();
}

EpsPoly EpsPoly::substitute_exponent(long long k) const {
    if (k < 1) throw domain_error("eps poly: substitution exponent must be >= 1");
    EpsPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) r.terms_.push_back({e * k, c});
    return r;
}

std::string EpsPoly::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [e, c] : terms_) j.push_back({e, c.to_string()});
    return j.dump();
}

std::string EpsPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
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
        if (e == 0) {
            out += a.to_string();
        } else {
            if (!(a == Rational(1))) out += a.to_string() + "*";
            out += e == 1 ? "e" : "e^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace wallx
