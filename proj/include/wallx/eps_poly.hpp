#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wallx/rational.hpp"

namespace wallx {

// Element of the ordered ring Q[eps], eps a positive infinitesimal.
// Terms are kept with strictly increasing exponents and no zero
// coefficients. The total order is lexicographic on the coefficients
// of eps^0, eps^1, ...; it agrees with numeric evaluation at any
// sufficiently small eps > 0.
class EpsPoly {
public:
    using Term = std::pair<long long, Rational>;  // (exponent, coefficient)

    EpsPoly() = default;
    EpsPoly(const Rational& c) { if (!c.is_zero()) terms_.push_back({0, c}); }
    EpsPoly(long long c) : EpsPoly(Rational(c)) {}

    static EpsPoly eps(long long exponent = 1);
    static EpsPoly term(long long exponent, const Rational& coeff);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // True when the value is a plain rational (no eps part).
    bool is_rational() const;
    // True when the value is an integer rational.
    bool is_integer() const;
    Rational coefficient(long long exponent) const;
    long long max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

    EpsPoly operator-() const;
    EpsPoly& operator+=(const EpsPoly& o);
    EpsPoly& operator-=(const EpsPoly& o);
    EpsPoly& operator*=(const EpsPoly& o);
    EpsPoly& operator*=(const Rational& c);
    EpsPoly& operator/=(const Rational& c);

    friend EpsPoly operator+(EpsPoly a, const EpsPoly& b) { return a += b; }
    friend EpsPoly operator-(EpsPoly a, const EpsPoly& b) { return a -= b; }
    friend EpsPoly operator*(EpsPoly a, const EpsPoly& b) { return a *= b; }
    friend EpsPoly operator*(EpsPoly a, const Rational& c) { return a *= c; }
    friend EpsPoly operator*(const Rational& c, EpsPoly a) { return a *= c; }
    friend EpsPoly operator/(EpsPoly a, const Rational& c) { return a /= c; }

    // Sign of the value for infinitesimal eps > 0: the sign of the
    // lowest-exponent coefficient.
    int sign() const;

    friend bool operator==(const EpsPoly& a, const EpsPoly& b) { return a.terms_ == b.terms_; }
    friend std::strong_ordering operator<=>(const EpsPoly& a, const EpsPoly& b) {
        int s = (a - b).sign();
        return s < 0 ? std::strong_ordering::less
             : s > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Substitutes eps -> eps^k, k >= 1. An order embedding of Q[eps].
    EpsPoly substitute_exponent(long long k) const;

    std::string to_string() const;  // e.g. "1 - e + 2*e^3"
    std::string to_json() const;    // list of [exponent, "p/q"] pairs

private:
    std::vector<Term> terms_;
};

}  // namespace wallx
