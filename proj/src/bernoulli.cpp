#include "wallx/bernoulli.hpp"

#include <mutex>

namespace wallx {

namespace {
std::mutex g_bernoulli_mutex;
}

BernoulliTable& BernoulliTable::instance() {
    static BernoulliTable table;
    return table;
}

void BernoulliTable::grow(long long n) {
    if (cache_.empty()) cache_.push_back(Rational(1));
    // sum_{j<=n} binom(n+1, j) B_j = 0 for n >= 1.
    for (long long m = static_cast<long long>(cache_.size()); m <= n; ++m) {
        Rational s(0);
        for (long long j = 0; j < m; ++j)
            s += Rational::binomial(m + 1, j) * cache_[static_cast<size_t>(j)];
        cache_.push_back(-s / Rational(m + 1));
    }
}

Rational BernoulliTable::number(long long n) {
    if (n < 0) throw domain_error("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    grow(n);
    return cache_[static_cast<size_t>(n)];
}

Rational BernoulliTable::poly_at(long long n, const Rational& x) {
    if (n < 0) throw domain_error("bernoulli: negative index");
    {
        std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
        grow(n);
    }
    // B_n(x) = sum_k binom(n, k) B_k x^{n-k}
    Rational s(0);
    Rational xp(1);
    for (long long k = n; k >= 0; --k) {
        s += Rational::binomial(n, k) * number(k) * xp;
        xp *= x;
    }
    return s;
}

Rational bernoulli_poly_at(long long n, const Rational& x) {
    return BernoulliTable::instance().poly_at(n, x);
}

Rational zeta_reg_sum(std::span<const Rational> coeffs) {
    Rational s(0);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        long long kk = static_cast<long long>(k);
        Rational zeta_minus_k =
            -bernoulli_poly_at(kk + 1, Rational(1)) / Rational(kk + 1);
        s += coeffs[k] * zeta_minus_k;
    }
    return s;
}

}  // namespace wallx
