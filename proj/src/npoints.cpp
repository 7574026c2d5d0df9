#include "wallx/npoints.hpp"

#include <atomic>
#include <bit>
#include <numeric>
#include <thread>

#include "wallx/laurent.hpp"

namespace wallx {

long long MonomialClass::degree_a() const {
    return std::accumulate(a.begin(), a.end(), 0LL);
}

namespace {

std::atomic<int> g_jobs{1};

// Signed fixed-point count sum_{eps in S} (-1)^{eps.a + |eps|} where S
// selects maps by |eps| against `min_popcount` (>=), or by equality
// when `exact` is set. Plain integer arithmetic; the result is scaled
// into a Rational by the callers.
long long signed_fixed_point_sum(long long n, const std::vector<long long>& a,
                                 long long min_popcount, bool exact) {
    const uint64_t count = 1ull << n;
    uint64_t odd_mask = 0;  // positions with odd exponent decide the sign of eps.a
    for (long long i = 0; i < n; ++i)
        if (a[static_cast<size_t>(i)] % 2 != 0) odd_mask |= 1ull << i;

    auto chunk_sum = [&](uint64_t begin, uint64_t end) {
        long long s = 0;
        for (uint64_t eps = begin; eps < end; ++eps) {
            int pc = std::popcount(eps);
            if (exact ? (pc != min_popcount) : (pc < min_popcount)) continue;
            int sign_bits = pc + std::popcount(eps & odd_mask);
            s += (sign_bits % 2 == 0) ? 1 : -1;
        }
        return s;
    };

    int jobs = g_jobs.load();
    if (jobs <= 1 || count < 1024) return chunk_sum(0, count);

    std::vector<long long> partial(static_cast<size_t>(jobs), 0);
    std::vector<std::thread> workers;
    uint64_t step = count / static_cast<uint64_t>(jobs) + 1;
    for (int j = 0; j < jobs; ++j) {
        uint64_t lo = step * static_cast<uint64_t>(j);
        uint64_t hi = std::min<uint64_t>(count, lo + step);
        workers.emplace_back([&, j, lo, hi] { partial[static_cast<size_t>(j)] = chunk_sum(lo, hi); });
    }
    for (auto& w : workers) w.join();
    return std::accumulate(partial.begin(), partial.end(), 0LL);
}

void check_class(long long n, const MonomialClass& cls, long long degree) {
    if (cls.m < 0) throw domain_error("n-points pairing: m must be >= 0");
    if (static_cast<long long>(cls.a.size()) != n)
        throw domain_error("n-points pairing: a must have length n");
    for (long long x : cls.a)
        if (x < 0) throw domain_error("n-points pairing: exponents must be >= 0");
    if (2 * cls.m + cls.degree_a() != degree)
        throw domain_error("n-points pairing: degree mismatch (need 2m + |a| = " +
                           std::to_string(degree) + ")");
}

Rational pow2(long long e) { return Rational(2).pow(e); }

// Residue-route value of the blowup correction for a single fixed
// point: res_t of t^{2r-1}/(4t^2(y-2t)^r) expanded for |y| < |t|, then
// the y^{r-2} coefficient. Multiplied by 4 and the signed fixed-point
// count by the caller.
Rational blowup_residue_unit(long long r) {
    ExpansionRegion region({"y", "t"});
    LinearForm base;
    base.coeffs["y"] = Rational(1);
    base.coeffs["t"] = Rational(-2);
    LaurentSeries pole =
        LaurentSeries::expand_binomial_pole(region, base, -r, {r - 2, 0});
    LaurentSeries mono = LaurentSeries::monomial(region, {0, 2 * r - 3}, Rational(1, 4));
    LaurentSeries integrand = mono * pole;
    return integrand.residue("t").coefficient_of("y", r - 2).to_rational();
}

template <typename F>
Rational combo_sum(const MonomialCombo& combo, F&& f) {
    Rational s(0);
    for (const auto& [coeff, cls] : combo) s += coeff * f(cls);
    return s;
}

}  // namespace

void set_fixed_point_jobs(int jobs) {
    if (jobs < 1) throw domain_error("jobs must be >= 1");
    g_jobs.store(jobs);
}

int fixed_point_jobs() { return g_jobs.load(); }

Rational pairing_odd(long long n, const MonomialClass& cls) {
    if (n < 3 || n % 2 == 0) throw domain_error("n-points pairing: n must be odd and >= 3");
    check_class(n, cls, n - 3);
    // |eps| > n/2 means |eps| >= (n+1)/2 for odd n.
    long long s = signed_fixed_point_sum(n, cls.a, (n + 1) / 2, false);
    return pow2(2 - n) * Rational(s);
}

Rational pairing_even_resolution(long long r, const MonomialClass& cls) {
    if (r < 2) throw domain_error("n-points pairing: r must be >= 2");
    check_class(2 * r, cls, 2 * r - 3);
    long long s = signed_fixed_point_sum(2 * r, cls.a, r + 1, false);
    return pow2(2 - 2 * r) * Rational(s);
}

Rational pairing_even_resolution_unreduced(long long r, const MonomialClass& cls) {
    if (r < 2) throw domain_error("n-points pairing: r must be >= 2");
    check_class(2 * r, cls, 2 * r - 3);
    long long s1 = signed_fixed_point_sum(2 * r, cls.a, r + 1, false);
    long long s2 = signed_fixed_point_sum(2 * r, cls.a, r, false);
    return pow2(1 - 2 * r) * Rational(s1 + s2);
}

Rational blowup_correction(long long r, const MonomialClass& cls) {
    if (r < 2) throw domain_error("n-points pairing: r must be >= 2");
    check_class(2 * r, cls, 2 * r - 3);
    long long s = signed_fixed_point_sum(2 * r, cls.a, r, true);
    // signed_fixed_point_sum weights by (-1)^{eps.a + |eps|} = (-1)^{eps.a + r} here.
    // The per-fixed-point factor is checked against the residue route
    // before the parity cancellation makes the total vanish.
    Rational unit_closed = pow2(2 - 2 * r) * Rational::binomial(2 * r - 3, r - 2);
    Rational unit_residue = Rational(r % 2 == 0 ? 4 : -4) * blowup_residue_unit(r);
    if (!(unit_closed == unit_residue))
        throw std::logic_error("blowup correction: residue route disagrees with closed form");
    return unit_closed * Rational(s);
}

Rational pairing_even_desing(long long r, const MonomialClass& cls) {
    // Wall-crossing sum plus the blowup correction (which carries its
    // own residue cross-check).
    Rational wall = pairing_even_resolution(r, cls);
    return wall + blowup_correction(r, cls);
}

Rational pairing_odd(long long n, const MonomialCombo& combo) {
    return combo_sum(combo, [&](const MonomialClass& c) { return pairing_odd(n, c); });
}

Rational pairing_even_resolution(long long r, const MonomialCombo& combo) {
    return combo_sum(combo, [&](const MonomialClass& c) { return pairing_even_resolution(r, c); });
}

Rational pairing_even_desing(long long r, const MonomialCombo& combo) {
    return combo_sum(combo, [&](const MonomialClass& c) { return pairing_even_desing(r, c); });
}

std::vector<Rational> ih_poincare_series(long long r, long long max_degree) {
    if (r < 1) throw domain_error("ih series: r must be >= 1");
    if (max_degree < 0) throw domain_error("ih series: max_degree must be >= 0");
    std::vector<Rational> out(static_cast<size_t>(max_degree) + 1, Rational(0));
    // (1+z^2)^{2r} * (1 + z^4 + z^8 + ...)
    for (long long k = 0; 2 * k <= max_degree; ++k) {
        Rational b = Rational::binomial(2 * r, k);
        for (long long j = 2 * k; j <= max_degree; j += 4) out[static_cast<size_t>(j)] += b;
    }
    // - binom(2r, r)/2 * z^{2r-2} * (1 + z^2 + z^4 + ...)
    Rational half_mid = Rational::binomial(2 * r, r) / Rational(2);
    for (long long j = 2 * r - 2; j <= max_degree; j += 2)
        if (j >= 0) out[static_cast<size_t>(j)] -= half_mid;
    return out;
}

}  // namespace wallx
