#include "wallx/curvepair.hpp"

#include <algorithm>

#include "wallx/bernoulli.hpp"
#include "wallx/laurent.hpp"

namespace wallx {

namespace {

void check_rank2_degree(long long g, long long m, long long n) {
    if (g < 2) throw domain_error("rank-2 pairing: genus must be >= 2");
    if (m < 0 || n < 0) throw domain_error("rank-2 pairing: exponents must be >= 0");
    if (2 * m + n != 4 * g - 3)
        throw domain_error("rank-2 pairing: degree mismatch (need 2m + n = 4g - 3)");
}

Rational pow2(long long e) { return Rational(2).pow(e); }

// C_{r,s,l} table: coefficients of z^r x^s t^l in the inverse of
// (1-2t) * sum_{k+l<=g-1} (-1)^{g-1-k-l}/l! binom(g,k) x^k z^l.
LaurentSeries c_table(long long g, long long order) {
    ExpansionRegion region({"z", "x", "t"});
    LaurentSeries base(region);
    for (long long k = 0; k <= g - 1; ++k)
        for (long long l = 0; k + l <= g - 1; ++l) {
            Rational c = Rational::inv_factorial(l) * Rational::binomial(g, k);
            if ((g - 1 - k - l) % 2 != 0) c = -c;
            base += LaurentSeries::monomial(region, {l, k, 0}, c);
        }
    LinearForm one_minus_2t;
    one_minus_2t.constant = Rational(1);
    one_minus_2t.coeffs["t"] = Rational(-2);
    base = base * LaurentSeries::from_linear_form(region, one_minus_2t);
    return base.invert({order, order, order});
}

Rational c_coeff(const LaurentSeries& table, long long r, long long s, long long l) {
    auto it = table.terms().find({r, s, l});
    return it == table.terms().end() ? Rational(0) : it->second;
}

}  // namespace

Rational jk_pairing_rank2(long long g, long long m) {
    if (g < 2) throw domain_error("rank-2 pairing: genus must be >= 2");
    if (m < 0) throw domain_error("rank-2 pairing: m must be >= 0");
    if (2 * m > 4 * g - 3) throw domain_error("rank-2 pairing: 2m must be <= 4g - 3");
    if (m >= g) return Rational(0);
    Rational value = bernoulli_poly_at(2 * g - 2 - 2 * m, Rational(1)) *
                     Rational::inv_factorial(2 * g - 2 - 2 * m) / pow2(2 * m - g + 1);
    if ((g - m) % 2 != 0) value = -value;
    return value;
}

Rational blowup1_rank2(long long g, long long m, long long n) {
    check_rank2_degree(g, m, n);
    if (n != g) return Rational(0);
    Rational s(0);
    for (long long k = 0; k <= g - 1; ++k) {
        long long l = g - 1 - k;
        s += pow2(-l) * Rational::binomial(g + k, k) * Rational::binomial(g + l - 1, l);
    }
    return pow2(-3 * g + 1) * s;
}

Rational blowup2_rank2(long long g, long long m, long long n) {
    check_rank2_degree(g, m, n);
    const long long order = 2 * m - g + 1;
    if (order < 0) return Rational(0);
    LaurentSeries table = c_table(g, order);
    const Rational inv_n_fact = Rational::inv_factorial(n);

    // First sum: r + l = 2m - g + 1, l >= g - 2, with the inner
    // alternating factorial sum over k <= (2g - n)/2.
    Rational inner(0);
    if (2 * g - n >= 0) {
        for (long long k = 0; 2 * k <= 2 * g - n; ++k) {
            Rational t = Rational::factorial(2 * g - 2 * k) * Rational::factorial(2 * g - n) *
                         Rational::factorial(g) * Rational::inv_factorial(2 * g - 2 * k - n) *
                         Rational::inv_factorial(k) * Rational::inv_factorial(g - k);
            inner += (k % 2 == 0) ? t : -t;
        }
    }
    Rational term1(0);
    for (long long l = std::max<long long>(g - 2, 0); l <= order; ++l) {
        long long r = order - l;
        Rational c = c_coeff(table, r, 0, l);
        if (c.is_zero()) continue;
        Rational t = c * Rational::inv_factorial(l - g + 2) * inv_n_fact * inner;
        term1 += ((l + n - 1) % 2 == 0) ? t : -t;
    }
    term1 *= pow2(-2 * g);

    // Second sum: r + s + l = 2m - g + 1, s <= g.
    Rational term2(0);
    for (long long s = 0; s <= std::min(order, g); ++s)
        for (long long l = 0; s + l <= order; ++l) {
            long long r = order - s - l;
            Rational c = c_coeff(table, r, s, l);
            if (c.is_zero()) continue;
            Rational t = c * Rational::inv_factorial(s + l - 2 * g + 2) * inv_n_fact *
                         Rational::factorial(2 * g - s - 1) * Rational(g) *
                         Rational::inv_factorial(g - s);
            term2 += ((l + n) % 2 == 0) ? t : -t;
        }
    term2 *= pow2(-n);

    return term1 + term2;
}

JkkwRank2Result jkkw_pairing_rank2(long long g, long long m, long long n, bool raw) {
    check_rank2_degree(g, m, n);
    JkkwRank2Result out;
    out.jk = jk_pairing_rank2(g, m);
    out.blowup1 = blowup1_rank2(g, m, n);
    out.blowup2 = blowup2_rank2(g, m, n);
    out.total = out.jk + out.blowup1 + out.blowup2;
    if (raw) out.total *= Rational::factorial(n);
    return out;
}

bool Rank3PairingSpec::degree_balanced() const {
    long long weighted = 0;
    for (const auto& [l, mult] : m_l) weighted += l * mult;
    return weighted + k == 9 * (g - 1) + 1;
}

Rational bracket_j20_j10_pairing(const Rank3PairingSpec& spec) {
    const long long g = spec.g;
    if (g < 2) throw domain_error("rank-3 pairing: genus must be >= 2");
    if (spec.k < 0) throw domain_error("rank-3 pairing: k must be >= 0");
    for (const auto& [l, mult] : spec.m_l) {
        if (l < 2) throw domain_error("rank-3 pairing: generator index l must be >= 2");
        if (mult < 0) throw domain_error("rank-3 pairing: multiplicities must be >= 0");
    }

    if (spec.order_margin < 0) throw domain_error("rank-3 pairing: negative order margin");

    ExpansionRegion region({"z1", "z2", "alpha"});
    const long long pole = 2 * g - 2;
    // The z1 residue needs the diagonal pole expanded to order 2g-2
    // and the exponential factor to the same order; anything beyond
    // that cannot reach the z1^{-1} coefficient.
    const long long order = pole + spec.order_margin;

    // -1/2 * alpha^{3g} * z1^{-(2g-2)} z2^{-(2g-2)}
    LaurentSeries front =
        LaurentSeries::monomial(region, {-pole, -pole, 3 * g}, Rational(-1, 2));

    LinearForm diff;  // z2 - z1
    diff.coeffs["z2"] = Rational(1);
    diff.coeffs["z1"] = Rational(-1);
    LaurentSeries diag =
        LaurentSeries::expand_binomial_pole(region, diff, -pole, {order, 0, 0});

    LaurentSeries expfac =
        LaurentSeries::one_minus_exp_reciprocal(region, "z1", "alpha", order);

    LaurentSeries integrand = front * diag * expfac;

    for (const auto& [l, mult] : spec.m_l) {
        if (mult == 0) continue;
        auto root = [&](const Rational& c1, const Rational& c2) {
            LinearForm f;
            f.coeffs["z1"] = c1 / Rational(3);
            f.coeffs["z2"] = c2 / Rational(3);
            return LaurentSeries::from_linear_form(region, f);
        };
        LaurentSeries factor = (root(Rational(-1), Rational(-1)).pow(l) +
                                root(Rational(2), Rational(-1)).pow(l) +
                                root(Rational(-1), Rational(2)).pow(l))
                                   .scaled(Rational::inv_factorial(l));
        integrand *= factor.pow(mult);
    }

    LaurentSeries after = integrand.residue("z1").residue("z2");
    Rational coeff = after.coefficient_of("alpha", spec.k).to_rational();
    return Rational::factorial(spec.k) * coeff;
}

}  // namespace wallx
