#include "wallx/wallcross.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wallx {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// All compositions (r_1, ..., r_n) of r with r0 | r_i and n >= n_min.
void compositions_rec(long long rest, long long r0, std::vector<long long>& cur,
                      std::vector<std::vector<long long>>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (long long part = r0; part <= rest; part += r0) {
        cur.push_back(part);
        compositions_rec(rest - part, r0, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long long>> compositions(long long r, long long r0, size_t n_min) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    compositions_rec(r, r0, cur, out);
    std::erase_if(out, [&](const auto& c) { return c.size() < n_min; });
    return out;
}

// d_i = r_i * d/r, asserted integral.
long long block_degree(long long ri, long long r, long long d) {
    long long num = ri * d;
    if (num % r != 0) throw domain_error("wall crossing: non-integral block degree");
    return num / r;
}

}  // namespace

long long slope_denominator(long long r, long long d) {
    if (r < 1) throw domain_error("wall crossing: rank must be >= 1");
    long long g = gcd_ll(r, d);
    return g == 0 ? r : r / g;
}

LieExpr jk_minus_joyce_general_for_flag(const std::vector<long long>& base, long long d_base,
                                        const ParabolicWeight& c) {
    const long long r = std::accumulate(base.begin(), base.end(), 0LL);
    if (r < 1) throw domain_error("wall crossing: empty flag type");
    if (c.length() != base.size())
        throw domain_error("wall crossing: weight length must match the flag length");
    if (!is_generic(c, r, d_base, base))
        throw domain_error("wall crossing: weight is not generic for this type");

    const long long r0 = slope_denominator(r, d_base);
    const size_t l = base.size();
    const Rational r_fact = Rational::factorial(r);

    // Group ordered decompositions by their underlying block set; the
    // Utilde table is solved once per group and summed over all
    // arrangements (blocks are pairwise distinct, so arrangements are
    // in bijection with permutations).
    auto decomps = enumerate_flag_decomps_of(base, r0, 2);
    std::set<std::vector<std::vector<long long>>> groups;
    for (auto tuple : decomps) {
        std::sort(tuple.begin(), tuple.end());
        groups.insert(std::move(tuple));
    }

    StabilityPair pair{SlopeFunction{ParabolicWeight::zero(l), EpsPoly(0)},
                       SlopeFunction{c, EpsPoly(0)}};

    LieExpr total;
    for (const auto& blocks : groups) {
        const int n = static_cast<int>(blocks.size());
        std::vector<ClassVec> cls(n);
        std::vector<GeneratorLabel> labels(n);
        Rational coeff(1);
        for (int i = 0; i < n; ++i) {
            long long ri = std::accumulate(blocks[i].begin(), blocks[i].end(), 0LL);
            long long di = block_degree(ri, r, d_base);
            cls[i] = ClassVec{ri, di, blocks[i], std::nullopt};
            labels[i] = GeneratorLabel{GenKind::J, ri, di, ""};
            coeff *= Rational::factorial(ri);
        }
        coeff /= r_fact;

        PermTable u_table;
        for (const auto& sigma : all_permutations(n)) {
            std::vector<ClassVec> seq(n);
            for (int i = 0; i < n; ++i) seq[i] = cls[static_cast<size_t>(sigma[i]) - 1];
            u_table[sigma] = coeff_U(seq, pair);
        }
        PermTable ut = utilde_solve(u_table, n);
        for (const auto& [sigma, u] : ut) {
            if (u.is_zero()) continue;
            std::vector<GeneratorLabel> arranged(n);
            for (int i = 0; i < n; ++i) arranged[i] = labels[static_cast<size_t>(sigma[i]) - 1];
            total += LieExpr::nested(arranged).scaled(u * coeff);
        }
    }
    return total;
}

LieExpr jk_minus_joyce_general(long long r, long long d, const ParabolicWeight& c) {
    if (r < 1) throw domain_error("wall crossing: rank must be >= 1");
    return jk_minus_joyce_general_for_flag(std::vector<long long>(r, 1), d, c);
}

LieExpr jk_minus_joyce_special(long long r, long long d, char sign) {
    if (r < 1) throw domain_error("wall crossing: rank must be >= 1");
    if (sign != '+' && sign != '-') throw domain_error("wall crossing: sign must be + or -");
    const long long r0 = slope_denominator(r, d);
    LieExpr total;
    for (const auto& comp : compositions(r, r0, 2)) {
        const long long n = static_cast<long long>(comp.size());
        Rational coeff = Rational::inv_factorial(n) * Rational(comp[0], r);
        if (sign == '+' && n % 2 == 0) coeff = -coeff;
        std::vector<GeneratorLabel> labels;
        for (long long ri : comp)
            labels.push_back(GeneratorLabel{GenKind::J, ri, block_degree(ri, r, d), ""});
        total += LieExpr::nested(labels).scaled(coeff);
    }
    return total;
}

LieExpr pi_pair_expansion(long long r, long long d) {
    if (r < 1) throw domain_error("wall crossing: rank must be >= 1");
    const long long r0 = slope_denominator(r, d);
    LieExpr total;
    for (const auto& comp : compositions(r, r0, 1)) {
        const long long n = static_cast<long long>(comp.size());
        Rational coeff = Rational::inv_factorial(n) * Rational(comp[0], r);
        if (n % 2 == 0) coeff = -coeff;
        std::vector<GeneratorLabel> labels;
        for (long long ri : comp)
            labels.push_back(GeneratorLabel{GenKind::J, ri, block_degree(ri, r, d), ""});
        total += LieExpr::nested(labels).scaled(coeff);
    }
    return total;
}

std::pair<LieExpr, LieExpr> joyce_recursion_expr(long long r, long long d) {
    if (r < 1) throw domain_error("wall crossing: rank must be >= 1");
    const long long r0 = slope_denominator(r, d);
    LieExpr lhs = LieExpr::generator(GeneratorLabel{GenKind::J, r, d, ""});
    LieExpr rhs = LieExpr::generator(GeneratorLabel{GenKind::PiJprime, r, d, ""});
    for (const auto& comp : compositions(r, r0, 2)) {
        const long long n = static_cast<long long>(comp.size());
        Rational coeff = Rational::inv_factorial(n) * Rational(comp[0], r);
        if (n % 2 == 1) coeff = -coeff;  // (-1)^n
        std::vector<GeneratorLabel> labels;
        for (long long ri : comp)
            labels.push_back(GeneratorLabel{GenKind::J, ri, block_degree(ri, r, d), ""});
        rhs += LieExpr::nested(labels).scaled(coeff);
    }
    return {lhs, rhs};
}

LieExpr jk_minus_pi_pairs(long long r, long long d, const ParabolicWeight& c,
                          const std::string& jk_tag) {
    if (r < 1) throw domain_error("wall crossing: rank must be >= 1");
    if (!is_strongly_generic(c, r))
        throw domain_error("wall crossing: weight is not strongly generic");
    const long long r0 = slope_denominator(r, d);
    const std::vector<long long> full(r, 1);
    ClassVec full_cls{r, d, full, std::nullopt};
    SlopeValue mu_full = slope_mu_c(full_cls, c);
    const Rational r_fact = Rational::factorial(r);

    LieExpr total;
    for (const auto& blocks : enumerate_flag_decomps(r, r0, 2)) {
        const size_t n = blocks.size();
        std::vector<SlopeValue> mu(n);
        std::vector<long long> ri(n), di(n);
        Rational coeff(1);
        for (size_t i = 0; i < n; ++i) {
            ri[i] = std::accumulate(blocks[i].begin(), blocks[i].end(), 0LL);
            di[i] = block_degree(ri[i], r, d);
            mu[i] = slope_mu_c(ClassVec{ri[i], di[i], blocks[i], std::nullopt}, c);
            coeff *= Rational::factorial(ri[i]);
        }
        // chain mu_c(f_1) < mu_c(f) < mu_c(f_2) < ... < mu_c(f_n)
        bool chain = mu[0] < mu_full && (n < 2 || mu_full < mu[1]);
        for (size_t i = 1; chain && i + 1 < n; ++i) chain = mu[i] < mu[i + 1];
        if (!chain) continue;

        coeff = coeff / r_fact * Rational(ri[0], r);
        std::vector<GeneratorLabel> labels;
        labels.push_back(GeneratorLabel{GenKind::PiJprime, ri[0], di[0], ""});
        for (size_t i = 1; i < n; ++i)
            labels.push_back(GeneratorLabel{GenKind::JK, ri[i], di[i], jk_tag});
        total += LieExpr::nested(labels).scaled(coeff);
    }
    return total;
}

long long collect_count(long long r, const std::vector<long long>& sizes) {
    long long sum = std::accumulate(sizes.begin(), sizes.end(), 0LL);
    if (sum != r) throw domain_error("collection count: sizes must sum to r");
    Rational c = Rational::factorial(r);
    for (long long s : sizes) {
        if (s <= 0) throw domain_error("collection count: sizes must be positive");
        c /= Rational::factorial(s);
    }
    return static_cast<long long>(c.numerator().get_si());
}

long long collect_count_marked(long long r, const std::vector<long long>& sizes) {
    long long sum = std::accumulate(sizes.begin(), sizes.end(), 0LL);
    if (sum != r) throw domain_error("collection count: sizes must sum to r");
    if (sizes.empty() || sizes[0] <= 0)
        throw domain_error("collection count: sizes must be positive");
    Rational c = Rational::factorial(r - 1) / Rational::factorial(sizes[0] - 1);
    for (size_t i = 1; i < sizes.size(); ++i) {
        if (sizes[i] <= 0) throw domain_error("collection count: sizes must be positive");
        c /= Rational::factorial(sizes[i]);
    }
    return static_cast<long long>(c.numerator().get_si());
}

}  // namespace wallx
