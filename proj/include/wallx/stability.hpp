#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wallx/eps_poly.hpp"

namespace wallx {

// Discrete invariants (r, d, f, v) of a parabolic triple; f and v are
// optional so the same type serves bundles (r, d), parabolic bundles
// (r, d, f) and pairs (r, d, v).
struct ClassVec {
    long long r = 0;
    long long d = 0;
    std::optional<std::vector<long long>> f;
    std::optional<long long> v;

    friend ClassVec operator+(const ClassVec& a, const ClassVec& b);
    friend bool operator==(const ClassVec& a, const ClassVec& b) = default;
    friend auto operator<=>(const ClassVec& a, const ClassVec& b) = default;

    bool is_zero() const;
    std::string to_string() const;
    std::string to_json() const;  // {"r":..,"d":..,"f":[..]?,"v":..?}
};

// Non-decreasing weight sequence 0 <= c_1 <= ... <= c_l <= 1 in the
// Q[eps] order.
class ParabolicWeight {
public:
    ParabolicWeight() = default;
    explicit ParabolicWeight(std::vector<EpsPoly> c);

    static ParabolicWeight zero(size_t length);
    // c_i = 1 - eps^{i-1}, i = 1..r
    static ParabolicWeight plus(size_t r);
    // c_i = eps^{r-i}, i = 1..r
    static ParabolicWeight minus(size_t r);

    const std::vector<EpsPoly>& entries() const { return c_; }
    size_t length() const { return c_.size(); }
    const EpsPoly& operator[](size_t i) const { return c_[i]; }

private:
    std::vector<EpsPoly> c_;
};

// A slope: an element of Q[eps], or +infinity (rank-zero classes).
class SlopeValue {
public:
    SlopeValue() : finite_(EpsPoly(0)) {}
    SlopeValue(EpsPoly v) : finite_(std::move(v)) {}
    static SlopeValue infinity() { SlopeValue s; s.finite_.reset(); return s; }

    bool is_infinite() const { return !finite_.has_value(); }
    const EpsPoly& value() const;

    friend bool operator==(const SlopeValue& a, const SlopeValue& b);
    friend std::partial_ordering operator<=>(const SlopeValue& a, const SlopeValue& b);

private:
    std::optional<EpsPoly> finite_;
};

// A stability condition: the slope (d - sum_i c_i f_i + pair_weight*v)/r,
// or +infinity when r = 0. Weights beyond the length of a class's f are
// rejected; classes without f skip the weight term, classes without v
// skip the pair term.
struct SlopeFunction {
    ParabolicWeight weight;
    EpsPoly pair_weight;  // coefficient of v; zero when unused

    SlopeValue operator()(const ClassVec& cls) const;
};

// Two stability conditions, in the order (before, after).
struct StabilityPair {
    SlopeFunction tau;
    SlopeFunction tau_prime;
};

SlopeValue slope_mu_c(const ClassVec& cls, const ParabolicWeight& c);
SlopeValue slope_mu_c_eps(const ClassVec& cls, const ParabolicWeight& c,
                          const EpsPoly& pair_weight);

// Genericity of c for the type (r, d, f): no subobject type
// (r', d', f'), 0 < r' < r, f' <= f componentwise, |f'| = r', d' an
// integer, has slope equal to mu_c(r, d, f).
bool is_generic(const ParabolicWeight& c, long long r, long long d,
                const std::vector<long long>& f);

// Stronger genericity: all subset averages of the weight entries are
// pairwise distinct. Requires length(c) = r.
bool is_strongly_generic(const ParabolicWeight& c, long long r);

// c is close to 0 for (r, d, f): every subobject type with smaller
// (larger) plain slope d'/r' also has smaller (larger) weighted slope.
// Since 0 <= sum c_i f'_i <= l, only d' within distance l of r'*d/r
// can violate the condition, so the scan over d' is finite.
bool is_close_to_zero(const ParabolicWeight& c, long long r, long long d,
                      const std::vector<long long>& f);

// r^2(g-1) + v(r(N+g-1) + d - v) + sum_{i<j} f_i f_j + 1, omitting the
// v and f terms when the class lacks them.
long long dim_class(const ClassVec& cls, long long g, long long N);

// All ordered tuples (f_1, ..., f_n) of non-zero {0,1}^r vectors with
// sum f_i = base, r0 | |f_i| and n >= n_min, in lexicographic order.
// `base` defaults to 1^r.
std::vector<std::vector<std::vector<long long>>> enumerate_flag_decomps(
    long long r, long long r0, long long n_min);
std::vector<std::vector<std::vector<long long>>> enumerate_flag_decomps_of(
    const std::vector<long long>& base, long long r0, long long n_min);

// Joyce's sign coefficient S(alpha_1, ..., alpha_n; tau, tau').
int coeff_S(const std::vector<ClassVec>& seq, const StabilityPair& pair);

// Joyce's coefficient U(alpha_1, ..., alpha_n; tau, tau'): the sum over
// double refinements 0 = a_0 < ... < a_m = n, 0 = b_0 < ... < b_l = m
// with the slope-equality side conditions, weighted by
// (-1)^{l-1}/l * prod S(...) * prod 1/(a_i - a_{i-1})!.
Rational coeff_U(const std::vector<ClassVec>& seq, const StabilityPair& pair);

}  // namespace wallx
