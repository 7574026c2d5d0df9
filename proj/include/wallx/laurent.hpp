#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wallx/rational.hpp"

namespace wallx {

// Variable order for Laurent expansions: the list is ordered with the
// smallest variable first, i.e. each variable is treated as
// infinitesimally smaller than all variables after it. Iterated
// residues are taken in this order (innermost variable first).
class ExpansionRegion {
public:
    ExpansionRegion() = default;
    explicit ExpansionRegion(std::vector<std::string> vars);

    const std::vector<std::string>& vars() const { return vars_; }
    size_t size() const { return vars_.size(); }
    size_t index_of(const std::string& name) const;

    friend bool operator==(const ExpansionRegion& a, const ExpansionRegion& b) {
        return a.vars_ == b.vars_;
    }

private:
    std::vector<std::string> vars_;
};

// A rational linear combination of region variables and 1; the only
// shape of base admitted for pole expansion.
struct LinearForm {
    Rational constant;
    std::map<std::string, Rational> coeffs;
};

// Multivariate Laurent series with exact rational coefficients and
// explicit exactness bookkeeping.
//
// Every series records, per variable v:
//   trunc[v]: all terms of the true series lying in the box
//             { exponents <= trunc componentwise } are stored exactly
//             (nullopt = unbounded);
//   low[v]:   lower bound on the exponents appearing in the true
//             series (nullopt = unbounded below).
// Arithmetic propagates these bounds conservatively; extraction
// operations refuse (throw truncation_error) rather than return a
// coefficient that could still receive contributions.
class LaurentSeries {
public:
    static constexpr long long kInf = INT64_MAX / 4;
    using Exponents = std::vector<long long>;

    LaurentSeries() = default;
    explicit LaurentSeries(ExpansionRegion region);

    static LaurentSeries constant(const ExpansionRegion& region, const Rational& c);
    static LaurentSeries monomial(const ExpansionRegion& region, const Exponents& e,
                                  const Rational& c);
    static LaurentSeries from_linear_form(const ExpansionRegion& region, const LinearForm& f);

    // Laurent expansion of base^exponent valid in the region. For
    // exponent < 0 the expansion is an infinite series; `order` gives
    // the per-variable exponent box the caller needs (entries beyond
    // the box are not produced). Errors: zero base; a base variable
    // absent from the region.
    static LaurentSeries expand_binomial_pole(const ExpansionRegion& region,
                                              const LinearForm& base, long long exponent,
                                              const std::vector<long long>& order);

    // 1/(1 - exp(scale*var)) = -sum_{n>=0} B_n(0) (scale*var)^{n-1}/n!,
    // exact for exponents of `var` up to `order`.
    static LaurentSeries one_minus_exp_reciprocal(const ExpansionRegion& region,
                                                  const std::string& var,
                                                  const std::string& scale, long long order);

    const ExpansionRegion& region() const { return region_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::optional<long long> trunc(size_t var_index) const { return trunc_[var_index]; }
    std::optional<long long> low(size_t var_index) const { return low_[var_index]; }

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    LaurentSeries scaled(const Rational& c) const;
    LaurentSeries pow(long long n) const;  // n >= 0

    // Multiplicative inverse of a power series with nonzero constant
    // term, exact within the requested per-variable order box.
    // Errors: zero constant term; negative exponents in the input.
    LaurentSeries invert(const std::vector<long long>& order) const;

    // Coefficient of var^{-1}, as a series in the remaining variables.
    LaurentSeries residue(const std::string& var) const;

    // Coefficient of var^k, as a series in the remaining variables.
    LaurentSeries coefficient_of(const std::string& var, long long k) const;

    LaurentSeries derivative(const std::string& var) const;

    // The value of a series over no variables (or with only the zero
    // exponent vector present).
    Rational to_rational() const;

    std::string to_json() const;

private:
    void prune_to_box();
    void require_same_region(const LaurentSeries& o) const;

    ExpansionRegion region_;
    std::map<Exponents, Rational> terms_;
    std::vector<std::optional<long long>> trunc_;
    std::vector<std::optional<long long>> low_;
};

}  // namespace wallx
