#include "wallx/rational.hpp"

#include <ostream>

namespace wallx {

Rational::Rational(long long num, long long den) {
    if (den == 0) throw domain_error("rational: zero denominator");
    v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw parse_error("rational: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw parse_error("rational: cannot parse '" + s + "'");
    if (v.get_den() == 0) throw parse_error("rational: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw domain_error("rational: zero to a negative power");
        return Rational(0);
    }
    mpq_class base = e > 0 ? v_ : mpq_class(1 / v_);
    unsigned long long k = static_cast<unsigned long long>(e > 0 ? e : -e);
    mpq_class acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return Rational(std::move(acc));
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::factorial(long long n) {
    if (n < 0) throw domain_error("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(f));
}

Rational Rational::inv_factorial(long long n) {
    if (n < 0) return Rational(0);
    return Rational(1) / factorial(n);
}

Rational Rational::binomial(long long t, long long k) {
    if (k < 0) return Rational(0);
    mpz_class num(1);
    for (long long i = 0; i < k; ++i) num *= mpz_class(static_cast<long>(t - i));
    mpz_class den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace wallx
