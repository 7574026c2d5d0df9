#pragma once

#include <span>
#include <vector>

#include "wallx/rational.hpp"

namespace wallx {

// Bernoulli numbers B_n = B_n(0) and polynomial values B_n(x), with
// t*exp(x*t)/(exp(t)-1) = sum_n B_n(x) t^n/n! as the defining series
// (so B_1 = -1/2). The number cache grows on demand and is guarded by
// a mutex, so concurrent readers are safe.
class BernoulliTable {
public:
    static BernoulliTable& instance();

    Rational number(long long n);           // B_n(0)
    Rational poly_at(long long n, const Rational& x);  // B_n(x)

private:
    BernoulliTable() = default;
    void grow(long long n);
    std::vector<Rational> cache_;
};

Rational bernoulli_poly_at(long long n, const Rational& x);

// Termwise zeta-regularization of sum_{d>=1} p(d) for a polynomial p
// given by its coefficient list (p = sum_k coeffs[k] d^k), using
// sum_{d>=1} d^k -> zeta(-k) = -B_{k+1}(1)/(k+1).
Rational zeta_reg_sum(std::span<const Rational> coeffs);

}  // namespace wallx
