#include "wallx/laurent.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "wallx/bernoulli.hpp"

namespace wallx {

namespace {

using Bound = std::optional<long long>;

// min with nullopt = +infinity
Bound min_trunc(const Bound& a, const Bound& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

// min with nullopt = -infinity
Bound min_low(const Bound& a, const Bound& b) {
    if (!a || !b) return std::nullopt;
    return std::min(*a, *b);
}

Bound add_low(const Bound& a, const Bound& b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

}  // namespace

ExpansionRegion::ExpansionRegion(std::vector<std::string> vars) : vars_(std::move(vars)) {
    std::set<std::string> seen;
    for (const auto& v : vars_)
        if (!seen.insert(v).second)
            throw domain_error("region: duplicate variable '" + v + "'");
}

size_t ExpansionRegion::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw domain_error("region: unknown variable '" + name + "'");
}

LaurentSeries::LaurentSeries(ExpansionRegion region)
    : region_(std::move(region)),
      trunc_(region_.size(), std::nullopt),
      low_(region_.size(), 0LL) {}

LaurentSeries LaurentSeries::constant(const ExpansionRegion& region, const Rational& c) {
    LaurentSeries s(region);
    if (!c.is_zero()) s.terms_[Exponents(region.size(), 0)] = c;
    return s;
}

LaurentSeries LaurentSeries::monomial(const ExpansionRegion& region, const Exponents& e,
                                      const Rational& c) {
    if (e.size() != region.size()) throw domain_error("series: exponent arity mismatch");
    LaurentSeries s(region);
    for (size_t i = 0; i < e.size(); ++i) s.low_[i] = e[i];
    if (!c.is_zero()) s.terms_[e] = c;
    return s;
}

LaurentSeries LaurentSeries::from_linear_form(const ExpansionRegion& region,
                                              const LinearForm& f) {
    LaurentSeries s = constant(region, f.constant);
    for (const auto& [name, c] : f.coeffs) {
        Exponents e(region.size(), 0);
        e[region.index_of(name)] = 1;
        s += monomial(region, e, c);
    }
    return s;
}

void LaurentSeries::require_same_region(const LaurentSeries& o) const {
    if (!(region_ == o.region_)) throw domain_error("series: mismatched regions");
}

void LaurentSeries::prune_to_box() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        bool outside = false;
        for (size_t i = 0; i < region_.size(); ++i)
            if (trunc_[i] && it->first[i] > *trunc_[i]) {
                outside = true;
                break;
            }
        it = outside ? terms_.erase(it) : std::next(it);
    }
}

LaurentSeries LaurentSeries::operator-() const { return scaled(Rational(-1)); }

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
    LaurentSeries r(region_);
    r.trunc_ = trunc_;
    r.low_ = low_;
    if (!c.is_zero())
        for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    a.require_same_region(b);
    LaurentSeries r(a.region_);
    r.terms_ = a.terms_;
    for (const auto& [e, v] : b.terms_) {
        auto [it, inserted] = r.terms_.emplace(e, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    for (size_t i = 0; i < a.region_.size(); ++i) {
        r.trunc_[i] = min_trunc(a.trunc_[i], b.trunc_[i]);
        r.low_[i] = min_low(a.low_[i], b.low_[i]);
    }
    r.prune_to_box();
    return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    a.require_same_region(b);
    LaurentSeries r(a.region_);
    const size_t nv = a.region_.size();
    for (size_t i = 0; i < nv; ++i) {
        // A product coefficient within the box can only be contaminated
        // by a factor term beyond that factor's own box, which forces
        // the product exponent above trunc(factor) + low(other).
        Bound from_a = a.trunc_[i] ? add_low(a.trunc_[i], b.low_[i]) : std::nullopt;
        Bound from_b = b.trunc_[i] ? add_low(b.trunc_[i], a.low_[i]) : std::nullopt;
        r.trunc_[i] = min_trunc(from_a, from_b);
        r.low_[i] = add_low(a.low_[i], b.low_[i]);
    }
    LaurentSeries::Exponents sum(nv);
    for (const auto& [ea, va] : a.terms_)
        for (const auto& [eb, vb] : b.terms_) {
            bool outside = false;
            for (size_t i = 0; i < nv; ++i) {
                sum[i] = ea[i] + eb[i];
                if (r.trunc_[i] && sum[i] > *r.trunc_[i]) outside = true;
            }
            if (outside) continue;
            auto [it, inserted] = r.terms_.emplace(sum, va * vb);
            if (!inserted) {
                it->second += va * vb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentSeries LaurentSeries::pow(long long n) const {
    if (n < 0) throw domain_error("series: negative power (use invert)");
    LaurentSeries acc = constant(region_, Rational(1));
    for (long long i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

LaurentSeries LaurentSeries::expand_binomial_pole(const ExpansionRegion& region,
                                                  const LinearForm& base, long long exponent,
                                                  const std::vector<long long>& order) {
    if (order.size() != region.size()) throw domain_error("series: order arity mismatch");
    for (const auto& [name, c] : base.coeffs)
        region.index_of(name);  // rejects variables outside the region
    if (base.constant.is_zero() &&
        std::all_of(base.coeffs.begin(), base.coeffs.end(),
                    [](const auto& p) { return p.second.is_zero(); }))
        throw domain_error("binomial pole expansion: zero base");

    if (exponent >= 0) return from_linear_form(region, base).pow(exponent);

    // Dominant part of the base in this region: the constant if present,
    // otherwise the region-largest variable occurring in the base.
    bool dominant_is_constant = !base.constant.is_zero();
    size_t dom_index = 0;
    Rational dom_coeff = base.constant;
    if (!dominant_is_constant) {
        bool found = false;
        for (size_t i = region.size(); i-- > 0;) {
            auto it = base.coeffs.find(region.vars()[i]);
            if (it != base.coeffs.end() && !it->second.is_zero()) {
                dom_index = i;
                dom_coeff = it->second;
                found = true;
                break;
            }
        }
        if (!found) throw domain_error("binomial pole expansion: zero base");
    }

    // base = D (1 + u), u small in the region; base^e = D^e sum binom(e,k) u^k.
    LaurentSeries u(region);
    long long k_max = 0;
    std::vector<bool> in_u(region.size(), false);
    for (const auto& [name, c] : base.coeffs) {
        if (c.is_zero()) continue;
        size_t vi = region.index_of(name);
        if (!dominant_is_constant && vi == dom_index) continue;
        Exponents e(region.size(), 0);
        e[vi] = 1;
        if (!dominant_is_constant) e[dom_index] = -1;
        u += monomial(region, e, c / dom_coeff);
        in_u[vi] = true;
        k_max += std::max<long long>(order[vi], 0);
    }

    LaurentSeries result(region);
    if (u.is_zero()) {
        // Pure monomial base: the power is exact.
        Exponents de(region.size(), 0);
        if (!dominant_is_constant) de[dom_index] = exponent;
        return monomial(region, de, dom_coeff.pow(exponent));
    }
    for (size_t i = 0; i < region.size(); ++i)
        if (in_u[i]) result.trunc_[i] = order[i];
    if (!dominant_is_constant) result.low_[dom_index] = std::nullopt;

    LaurentSeries u_pow = constant(region, Rational(1));
    LaurentSeries expansion(region);
    for (long long k = 0; k <= k_max; ++k) {
        expansion += u_pow.scaled(Rational::binomial(exponent, k));
        if (k < k_max) {
            u_pow = u_pow * u;
            // Keep only the part that can still land inside the box.
            for (auto it = u_pow.terms_.begin(); it != u_pow.terms_.end();) {
                bool outside = false;
                for (size_t i = 0; i < region.size(); ++i)
                    if (in_u[i] && it->first[i] > order[i]) outside = true;
                it = outside ? u_pow.terms_.erase(it) : std::next(it);
            }
        }
    }

    Exponents de(region.size(), 0);
    if (!dominant_is_constant) de[dom_index] = exponent;
    LaurentSeries dpow = monomial(region, de, dom_coeff.pow(exponent));
    result.terms_ = (dpow * expansion).terms_;
    result.prune_to_box();
    return result;
}

LaurentSeries LaurentSeries::one_minus_exp_reciprocal(const ExpansionRegion& region,
                                                      const std::string& var,
                                                      const std::string& scale,
                                                      long long order) {
    if (order < -1) throw domain_error("series: order must be >= -1");
    size_t vi = region.index_of(var);
    size_t si = region.index_of(scale);
    if (vi == si) throw domain_error("series: var and scale must differ");
    LaurentSeries s(region);
    s.trunc_[vi] = order;
    s.low_[vi] = -1;
    s.low_[si] = -1;
    // 1/(1-exp(t)) = -(1/t) * t/(exp(t)-1) = -sum_n B_n(0) t^{n-1}/n!, t = scale*var.
    for (long long n = 0; n <= order + 1; ++n) {
        Rational c = -BernoulliTable::instance().number(n) * Rational::inv_factorial(n);
        if (c.is_zero()) continue;
        Exponents e(region.size(), 0);
        e[vi] = n - 1;
        e[si] = n - 1;
        s.terms_[e] = c;
    }
    return s;
}

LaurentSeries LaurentSeries::invert(const std::vector<long long>& order) const {
    if (order.size() != region_.size()) throw domain_error("series: order arity mismatch");
    Exponents zero(region_.size(), 0);
    auto c0 = terms_.find(zero);
    if (c0 == terms_.end() || c0->second.is_zero())
        throw domain_error("series inversion: zero constant term");
    long long k_max = 0;
    for (const auto& [e, v] : terms_)
        for (long long x : e)
            if (x < 0) throw domain_error("series inversion: input must be a power series");
    for (size_t i = 0; i < region_.size(); ++i) k_max += std::max<long long>(order[i], 0);

    const Rational c = c0->second;
    LaurentSeries u = constant(region_, Rational(1)) - scaled(Rational(1) / c);
    LaurentSeries r(region_);
    for (size_t i = 0; i < region_.size(); ++i) {
        r.trunc_[i] = min_trunc(trunc_[i], order[i]);
        r.low_[i] = 0;
    }
    LaurentSeries acc = constant(region_, Rational(1));
    LaurentSeries u_pow = constant(region_, Rational(1));
    for (long long k = 1; k <= k_max; ++k) {
        u_pow = u_pow * u;
        for (auto it = u_pow.terms_.begin(); it != u_pow.terms_.end();) {
            bool outside = false;
            for (size_t i = 0; i < region_.size(); ++i)
                if (it->first[i] > order[i]) outside = true;
            it = outside ? u_pow.terms_.erase(it) : std::next(it);
        }
        if (u_pow.is_zero()) break;
        acc += u_pow;
    }
    r.terms_ = acc.scaled(Rational(1) / c).terms_;
    r.prune_to_box();
    return r;
}

LaurentSeries LaurentSeries::coefficient_of(const std::string& var, long long k) const {
    size_t vi = region_.index_of(var);
    if (trunc_[vi] && *trunc_[vi] < k)
        throw truncation_error("series: coefficient of " + var + "^" + std::to_string(k) +
                               " is not certified exact at the current truncation");
    std::vector<std::string> rest;
    for (size_t i = 0; i < region_.size(); ++i)
        if (i != vi) rest.push_back(region_.vars()[i]);
    LaurentSeries r{ExpansionRegion(rest)};
    for (size_t i = 0, j = 0; i < region_.size(); ++i) {
        if (i == vi) continue;
        r.trunc_[j] = trunc_[i];
        r.low_[j] = low_[i];
        ++j;
    }
    for (const auto& [e, v] : terms_) {
        if (e[vi] != k) continue;
        Exponents re;
        re.reserve(e.size() - 1);
        for (size_t i = 0; i < e.size(); ++i)
            if (i != vi) re.push_back(e[i]);
        r.terms_[re] = v;
    }
    return r;
}

LaurentSeries LaurentSeries::residue(const std::string& var) const {
    return coefficient_of(var, -1);
}

LaurentSeries LaurentSeries::derivative(const std::string& var) const {
    size_t vi = region_.index_of(var);
    LaurentSeries r(region_);
    r.trunc_ = trunc_;
    r.low_ = low_;
    if (r.trunc_[vi]) r.trunc_[vi] = *r.trunc_[vi] - 1;
    if (r.low_[vi]) r.low_[vi] = *r.low_[vi] - 1;
    for (const auto& [e, v] : terms_) {
        if (e[vi] == 0) continue;
        Exponents de = e;
        de[vi] -= 1;
        r.terms_[de] = v * Rational(e[vi]);
    }
    return r;
}

Rational LaurentSeries::to_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1) {
        const auto& [e, v] = *terms_.begin();
        if (std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; })) return v;
    }
    throw domain_error("series: not a constant");
}

std::string LaurentSeries::to_json() const {
    nlohmann::json j;
    j["vars"] = region_.vars();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, v] : terms_) terms.push_back({e, v.to_string()});
    j["terms"] = std::move(terms);
    nlohmann::json tr = nlohmann::json::array();
    for (const auto& b : trunc_) b ? tr.push_back(*b) : tr.push_back(nullptr);
    j["trunc"] = std::move(tr);
    nlohmann::json lo = nlohmann::json::array();
    for (const auto& b : low_) b ? lo.push_back(*b) : lo.push_back(nullptr);
    j["low"] = std::move(lo);
    return j.dump();
}

}  // namespace wallx
