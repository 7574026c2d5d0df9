#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wallx/bernoulli.hpp"
#include "wallx/eps_poly.hpp"
#include "wallx/rational.hpp"

using namespace wallx;

namespace {

// Test-local power series with rational coefficients, used as the
// independent oracle for Bernoulli values: coefficients of
// t*exp(x*t)/(exp(t)-1) by direct series division.
using Series = std::vector<Rational>;

Series series_div(const Series& a, const Series& b, size_t order) {
    REQUIRE(!b.empty());
    REQUIRE(!b[0].is_zero());
    Series q(order + 1, Rational(0));
    for (size_t n = 0; n <= order; ++n) {
        Rational acc = n < a.size() ? a[n] : Rational(0);
        for (size_t j = 1; j <= n && j < b.size(); ++j) acc -= b[j] * q[n - j];
        q[n] = acc / b[0];
    }
    return q;
}

// B_n(x) via n! [t^n] exp(x t) / ((exp(t)-1)/t).
Rational bernoulli_oracle(long long n, const Rational& x) {
    size_t order = static_cast<size_t>(n);
    Series num(order + 1), den(order + 1);
    Rational xp(1);
    for (size_t k = 0; k <= order; ++k) {
        num[k] = xp * Rational::inv_factorial(static_cast<long long>(k));
        den[k] = Rational::inv_factorial(static_cast<long long>(k) + 1);
        xp *= x;
    }
    Series q = series_div(num, den, order);
    return q[order] * Rational::factorial(n);
}

}  // namespace

TEST_CASE("rational normalization and formatting") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(6, 4).to_string() == "3/2");
    CHECK(Rational(-6, 4).to_string() == "-3/2");
    CHECK(Rational(5, -10).to_string() == "-1/2");
    CHECK(Rational(8, 4).to_string() == "2");
    CHECK(Rational::from_string("-35/512") == Rational(-35, 512));
    CHECK(Rational::from_string("7").is_integer());
    CHECK_THROWS_AS(Rational(1, 0), domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
    CHECK_THROWS_AS(Rational::from_string("x"), parse_error);
}

TEST_CASE("rational pow, factorial, binomial") {
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational::factorial(6) == Rational(720));
    CHECK(Rational::inv_factorial(-2).is_zero());
    CHECK(Rational::binomial(-2, 3) == Rational(-4));
    CHECK(Rational::binomial(2 * 4 - 3, 4 - 2) == Rational(10));
    CHECK(Rational::binomial(7, -1).is_zero());
}

TEST_CASE("bernoulli values against the series-division oracle") {
    CHECK(bernoulli_poly_at(0, Rational(17, 3)) == Rational(1));
    CHECK(bernoulli_poly_at(1, Rational(0)) == Rational(-1, 2));
    CHECK(bernoulli_poly_at(2, Rational(1)) == Rational(1, 6));

    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long long> num(-6, 6), den(1, 5), deg(0, 9);
    for (int trial = 0; trial < 40; ++trial) {
        long long n = deg(rng);
        Rational x(num(rng), den(rng));
        CAPTURE(n);
        CHECK(bernoulli_poly_at(n, x) == bernoulli_oracle(n, x));
    }
}

TEST_CASE("zeta-regularized sums") {
    std::vector<Rational> linear{Rational(0), Rational(1)};
    CHECK(zeta_reg_sum(linear) == Rational(-1, 12));

    std::vector<Rational> empty;
    CHECK(zeta_reg_sum(empty).is_zero());

    // zeta(0) through the Bernoulli oracle
    std::vector<Rational> constant{Rational(1)};
    CHECK(zeta_reg_sum(constant) == -bernoulli_oracle(1, Rational(1)));
    CHECK(zeta_reg_sum(constant) == Rational(-1, 2));

    // linearity over random polynomials
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> coeff(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> p(4), q(4), combo(4);
        Rational a(coeff(rng)), b(coeff(rng));
        for (int i = 0; i < 4; ++i) {
            p[i] = Rational(coeff(rng));
            q[i] = Rational(coeff(rng));
            combo[i] = a * p[i] + b * q[i];
        }
        CHECK(zeta_reg_sum(combo) == a * zeta_reg_sum(p) + b * zeta_reg_sum(q));
    }
}

TEST_CASE("eps polynomial order") {
    EpsPoly zero(0), one(1);
    EpsPoly e = EpsPoly::eps();
    EpsPoly e2 = EpsPoly::eps(2);

    CHECK(e > e2);
    CHECK(one - e < one);
    CHECK(zero < e);
    CHECK(e2 > zero);

    // total order compatible with addition and positive scaling
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> cf(-3, 3), ex(0, 3);
    auto random_poly = [&] {
        EpsPoly p;
        for (int t = 0; t < 3; ++t) p += EpsPoly::term(ex(rng), Rational(cf(rng)));
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        EpsPoly a = random_poly(), b = random_poly(), c = random_poly();
        if (a < b) {
            CHECK(a + c < b + c);
            CHECK(a * Rational(3, 7) < b * Rational(3, 7));
        }
        // trichotomy
        int rel = (a < b) + (a == b) + (a > b);
        CHECK(rel == 1);
    }
}

TEST_CASE("eps polynomial arithmetic and formatting") {
    EpsPoly p = EpsPoly(1) - EpsPoly::eps() + EpsPoly::term(3, Rational(2));
    CHECK(p.to_string() == "1 - e + 2*e^3");
    CHECK(p.to_json() == R"([[0,"1"],[1,"-1"],[3,"2"]])");
    CHECK(p.coefficient(1) == Rational(-1));
    CHECK(p.coefficient(2).is_zero());
    CHECK((p - p).is_zero());
    CHECK((EpsPoly::eps() * EpsPoly::eps()) == EpsPoly::eps(2));
    CHECK(p.substitute_exponent(2).coefficient(6) == Rational(2));
    CHECK_THROWS_AS(p / Rational(0), domain_error);
    CHECK_THROWS_AS(EpsPoly::term(-1, Rational(1)), domain_error);
}
