#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wallx/laurent.hpp"

using namespace wallx;

namespace {

Rational coeff(const LaurentSeries& s, const LaurentSeries::Exponents& e) {
    auto it = s.terms().find(e);
    return it == s.terms().end() ? Rational(0) : it->second;
}

}  // namespace

TEST_CASE("geometric pole expansion in a region") {
    ExpansionRegion region({"z1", "z2"});
    LinearForm base;  // z2 - z1, |z1| < |z2|
    base.coeffs["z2"] = Rational(1);
    base.coeffs["z1"] = Rational(-1);
    LaurentSeries s = LaurentSeries::expand_binomial_pole(region, base, -1, {5, 0});
    for (long long k = 0; k <= 5; ++k) CHECK(coeff(s, {k, -1 - k}) == Rational(1));
    CHECK(s.trunc(0) == 5);
    CHECK_FALSE(s.trunc(1).has_value());  // exact in z2 within the z1 box
}

TEST_CASE("pole expansion with a scaled dominant variable") {
    // (y - 2Y)^{-1} for |y| < |Y| is -(2Y)^{-1} sum_k (y/2Y)^k.
    ExpansionRegion region({"y", "Y"});
    LinearForm base;
    base.coeffs["y"] = Rational(1);
    base.coeffs["Y"] = Rational(-2);
    LaurentSeries s = LaurentSeries::expand_binomial_pole(region, base, -1, {4, 0});
    for (long long k = 0; k <= 4; ++k)
        CHECK(coeff(s, {k, -1 - k}) == -Rational(1) / Rational(2).pow(k + 1));
}

TEST_CASE("pole expansion edge cases") {
    ExpansionRegion region({"z"});
    LinearForm one;
    one.constant = Rational(1);
    LaurentSeries s = LaurentSeries::expand_binomial_pole(region, one, -1, {0});
    CHECK(s.to_rational() == Rational(1));
    CHECK_FALSE(s.trunc(0).has_value());

    LinearForm zero;
    CHECK_THROWS_AS(LaurentSeries::expand_binomial_pole(region, zero, -1, {0}), domain_error);

    LinearForm unknown;
    unknown.coeffs["w"] = Rational(1);
    CHECK_THROWS_AS(LaurentSeries::expand_binomial_pole(region, unknown, -1, {0}), domain_error);

    CHECK_THROWS_AS(ExpansionRegion({"z", "z"}), domain_error);
}

TEST_CASE("reciprocal of 1 - exp(alpha z)") {
    ExpansionRegion region({"z", "alpha"});
    LaurentSeries s = LaurentSeries::one_minus_exp_reciprocal(region, "z", "alpha", 1);
    CHECK(coeff(s, {-1, -1}) == Rational(-1));
    CHECK(coeff(s, {0, 0}) == Rational(1, 2));
    CHECK(coeff(s, {1, 1}) == Rational(-1, 12));

    // leading pole: the z^{-1} coefficient is -1/alpha
    LaurentSeries lead = s.coefficient_of("z", -1);
    CHECK(lead.terms().size() == 1);
    CHECK(coeff(lead, {-1}) == Rational(-1));

    // product with (1 - exp(alpha z)) is 1 to the working order
    LaurentSeries one_minus_exp(region);
    for (long long n = 1; n <= 8; ++n)
        one_minus_exp += LaurentSeries::monomial(region, {n, n},
                                                 -Rational::inv_factorial(n));
    LaurentSeries prod = s * one_minus_exp;
    auto box_trunc = prod.trunc(0);
    REQUIRE(box_trunc.has_value());
    for (const auto& [e, v] : prod.terms()) {
        if (e[0] > *box_trunc) continue;
        CHECK(v == ((e[0] == 0 && e[1] == 0) ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("residues") {
    ExpansionRegion region({"z"});
    CHECK(LaurentSeries::monomial(region, {-1}, Rational(1)).residue("z").to_rational() ==
          Rational(1));
    CHECK(LaurentSeries::monomial(region, {-2}, Rational(1)).residue("z").to_rational() ==
          Rational(0));

    // residue of a derivative vanishes; residue is linear
    ExpansionRegion r2({"z", "w"});
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> ex(-4, 4), cf(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        LaurentSeries f(r2), g(r2);
        for (int t = 0; t < 5; ++t) {
            f += LaurentSeries::monomial(r2, {ex(rng), ex(rng)}, Rational(cf(rng)));
            g += LaurentSeries::monomial(r2, {ex(rng), ex(rng)}, Rational(cf(rng)));
        }
        CHECK(f.derivative("z").residue("z").is_zero());
        LaurentSeries sum = (f + g).residue("z");
        LaurentSeries parts = f.residue("z") + g.residue("z");
        CHECK(sum.terms() == parts.terms());
    }
}

TEST_CASE("residue of a product matches direct coefficient collection") {
    ExpansionRegion region({"z", "w"});
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long long> ex(-3, 3), cf(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        LaurentSeries f(region), g(region);
        for (int t = 0; t < 4; ++t) {
            f += LaurentSeries::monomial(region, {ex(rng), ex(rng)}, Rational(cf(rng)));
            g += LaurentSeries::monomial(region, {ex(rng), ex(rng)}, Rational(cf(rng)));
        }
        LaurentSeries res = (f * g).residue("z");
        // brute-force convolution restricted to z-exponent -1
        std::map<long long, Rational> expected;
        for (const auto& [ea, va] : f.terms())
            for (const auto& [eb, vb] : g.terms())
                if (ea[0] + eb[0] == -1) expected[ea[1] + eb[1]] += va * vb;
        for (auto it = expected.begin(); it != expected.end();) {
            it = it->second.is_zero() ? expected.erase(it) : std::next(it);
        }
        std::map<long long, Rational> got;
        for (const auto& [e, v] : res.terms()) got[e[0]] = v;
        CHECK(got == expected);
    }
}

TEST_CASE("residue refuses an uncertified coefficient") {
    ExpansionRegion region({"z1", "z2"});
    LinearForm base;
    base.coeffs["z2"] = Rational(1);
    base.coeffs["z1"] = Rational(-1);
    LaurentSeries s = LaurentSeries::expand_binomial_pole(region, base, -1, {-2, 0});
    CHECK_THROWS_AS(s.residue("z1"), truncation_error);

    // monomial factor with a deep pole drags the certified box down
    LaurentSeries ok = LaurentSeries::expand_binomial_pole(region, base, -1, {6, 0});
    LaurentSeries deep = LaurentSeries::monomial(region, {-5, 0}, Rational(1));
    CHECK_NOTHROW((deep * ok).residue("z1"));
    LaurentSeries shallow = LaurentSeries::expand_binomial_pole(region, base, -1, {3, 0});
    CHECK_THROWS_AS((deep * shallow).residue("z1"), truncation_error);
}

TEST_CASE("series inversion") {
    ExpansionRegion region({"z", "x", "t"});
    // (1 - 2t)^{-1} = sum 2^l t^l
    LinearForm base;
    base.constant = Rational(1);
    base.coeffs["t"] = Rational(-2);
    LaurentSeries inv = LaurentSeries::from_linear_form(region, base).invert({3, 3, 5});
    for (long long l = 0; l <= 5; ++l) CHECK(coeff(inv, {0, 0, l}) == Rational(2).pow(l));
    for (const auto& [e, v] : inv.terms()) CHECK((e[0] == 0 && e[1] == 0));

    // f * invert(f) = 1 within the certified box, for random power series
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> ex(0, 2), cf(-4, 4), c0(1, 5);
    for (int trial = 0; trial < 25; ++trial) {
        LaurentSeries f = LaurentSeries::constant(region, Rational(c0(rng)));
        for (int t = 0; t < 4; ++t)
            f += LaurentSeries::monomial(region, {ex(rng), ex(rng), ex(rng)},
                                         Rational(cf(rng)));
        LaurentSeries g = f.invert({3, 3, 3});
        LaurentSeries prod = f * g;
        for (const auto& [e, v] : prod.terms()) {
            if (e[0] > 3 || e[1] > 3 || e[2] > 3) continue;
            bool is_unit = e[0] == 0 && e[1] == 0 && e[2] == 0;
            CHECK(v == (is_unit ? Rational(1) : Rational(0)));
        }
    }

    CHECK(LaurentSeries::constant(region, Rational(1)).invert({1, 1, 1}).to_rational() ==
          Rational(1));
    CHECK_THROWS_AS(LaurentSeries(region).invert({1, 1, 1}), domain_error);
    LaurentSeries pole = LaurentSeries::monomial(region, {-1, 0, 0}, Rational(1)) +
                         LaurentSeries::constant(region, Rational(1));
    CHECK_THROWS_AS(pole.invert({1, 1, 1}), domain_error);
}

TEST_CASE("iterated residue stable under extra truncation") {
    // res_z2 res_z1 of z2/(z1 (z2-z1)^2) in |z1| < |z2| equals 1, at
    // any sufficient truncation order.
    for (long long order : {2LL, 5LL, 9LL}) {
        ExpansionRegion region({"z1", "z2"});
        LinearForm base;
        base.coeffs["z2"] = Rational(1);
        base.coeffs["z1"] = Rational(-1);
        LaurentSeries pole = LaurentSeries::expand_binomial_pole(region, base, -2, {order, 0});
        LaurentSeries mono = LaurentSeries::monomial(region, {-1, 1}, Rational(1));
        CHECK((mono * pole).residue("z1").residue("z2").to_rational() == Rational(1));
    }
}

TEST_CASE("blowup-correction residue unit against the closed form") {
    // res_t of t^{2r-1}/(4 t^2 (y-2t)^r) for |y| < |t|, then the
    // y^{r-2} coefficient, matches 2^{2-2r} binom(2r-3, r-2) up to the
    // (-1)^r bookkeeping of the blowup weights.
    for (long long r = 2; r <= 5; ++r) {
        ExpansionRegion region({"y", "t"});
        LinearForm base;
        base.coeffs["y"] = Rational(1);
        base.coeffs["t"] = Rational(-2);
        LaurentSeries pole = LaurentSeries::expand_binomial_pole(region, base, -r, {r - 2, 0});
        LaurentSeries mono = LaurentSeries::monomial(region, {0, 2 * r - 3}, Rational(1, 4));
        Rational unit = (mono * pole).residue("t").coefficient_of("y", r - 2).to_rational();
        Rational closed = Rational(2).pow(2 - 2 * r) * Rational::binomial(2 * r - 3, r - 2);
        CHECK(Rational(r % 2 == 0 ? 4 : -4) * unit == closed);
    }
}

TEST_CASE("json round structure") {
    ExpansionRegion region({"z"});
    LaurentSeries s = LaurentSeries::monomial(region, {-2}, Rational(3, 4));
    std::string j = s.to_json();
    CHECK(j.find("\"vars\":[\"z\"]") != std::string::npos);
    CHECK(j.find("3/4") != std::string::npos);
}
