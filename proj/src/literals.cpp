#include "wallx/literals.hpp"

#include <cctype>

namespace wallx {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw parse_error("eps literal: expected digits in '" + s + "'");
        return s.substr(start, i - start);
    }
};

Rational parse_unsigned_rational(Cursor& c) {
    std::string num = c.digits();
    if (c.eat('/')) return Rational::from_string(num + "/" + c.digits());
    return Rational::from_string(num);
}

// term := rational | [rational ['*']] 'e' ['^' digits]
EpsPoly parse_term(Cursor& c) {
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = parse_unsigned_rational(c);
        have_coeff = true;
        c.eat('*');
    }
    if (c.peek() == 'e') {
        c.eat('e');
        long long exp = 1;
        if (c.eat('^')) exp = std::stoll(c.digits());
        return EpsPoly::term(exp, coeff);
    }
    if (!have_coeff) throw parse_error("eps literal: expected term in '" + c.s + "'");
    return EpsPoly(coeff);
}

}  // namespace

Rational parse_rational(const std::string& text) { return Rational::from_string(text); }

EpsPoly parse_eps_poly(const std::string& text) {
    Cursor c{text};
    EpsPoly out;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (c.eat('-')) sign = -1;
        else if (c.eat('+')) sign = 1;
        else if (!first) throw parse_error("eps literal: expected '+' or '-' in '" + text + "'");
        EpsPoly term = parse_term(c);
        out += sign < 0 ? -term : term;
        first = false;
    }
    if (first) throw parse_error("eps literal: empty input");
    return out;
}

ParabolicWeight parse_weights(const std::string& text, long long rank) {
    if (text == "plus") {
        if (rank < 1) throw parse_error("weights: rank required for keyword 'plus'");
        return ParabolicWeight::plus(static_cast<size_t>(rank));
    }
    if (text == "minus") {
        if (rank < 1) throw parse_error("weights: rank required for keyword 'minus'");
        return ParabolicWeight::minus(static_cast<size_t>(rank));
    }
    std::vector<EpsPoly> entries;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string piece =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        entries.push_back(parse_eps_poly(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return ParabolicWeight(std::move(entries));
}

}  // namespace wallx
