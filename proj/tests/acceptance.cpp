// Acceptance suite: one line per criterion, nonzero exit on any
// failure. Each check is exact rational arithmetic; no tolerances.

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wallx/bernoulli.hpp"
#include "wallx/curvepair.hpp"
#include "wallx/freelie.hpp"
#include "wallx/lie_expr.hpp"
#include "wallx/npoints.hpp"
#include "wallx/stability.hpp"
#include "wallx/wallcross.hpp"

using namespace wallx;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

GeneratorLabel J(long long r, long long d) { return GeneratorLabel{GenKind::J, r, d, ""}; }

std::vector<std::vector<long long>> exponent_reps(long long total, long long slots) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, long long rest, long long remaining, long long max_part) -> void {
        if (remaining == 0) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (long long p = std::min(rest, max_part); p >= 0; --p) {
            cur.push_back(p);
            self(self, rest - p, remaining - 1, p);
            cur.pop_back();
        }
    };
    rec(rec, total, slots, total);
    return out;
}

Rational coefficient_on(const LieExpr& expr, const std::vector<GeneratorLabel>& bracket) {
    LieExpr b = LieExpr::nested(bracket);
    const auto& [word, unit] = *b.terms().begin();
    auto it = expr.terms().find(word);
    return it == expr.terms().end() ? Rational(0) : it->second / unit;
}

void criterion_1() {
    Rational v = pairing_odd(3, MonomialClass{0, {0, 0, 0}});
    report(1, "odd point count: unit pairing on three points", v == Rational(1),
           "value " + v.to_string());
}

void criterion_2() {
    MonomialCombo combo;
    for (int i = 0; i < 4; ++i) {
        MonomialClass c{0, {0, 0, 0, 0}};
        c.a[static_cast<size_t>(i)] = 1;
        combo.push_back({Rational(1), c});
    }
    Rational v = pairing_even_desing(2, combo);
    report(2, "middle-cohomology pairing on four points equals 1", v == Rational(1),
           "value " + v.to_string());
}

void criterion_3() {
    bool ok = true;
    long long cases = 0;
    for (long long r = 2; r <= 4 && ok; ++r)
        for (long long m = 0; 2 * m <= 2 * r - 3 && ok; ++m)
            for (const auto& a : exponent_reps(2 * r - 3 - 2 * m, 2 * r)) {
                ++cases;
                MonomialClass c{m, a};
                if (!(pairing_even_resolution(r, c) == pairing_even_desing(r, c))) {
                    ok = false;
                    break;
                }
            }
    report(3, "resolution and blowup pairings agree, r <= 4 exhaustive", ok,
           std::to_string(cases) + " classes");
}

void criterion_4() {
    bool ok = true;
    long long cases = 0;
    for (long long r = 2; r <= 6 && ok; ++r)
        for (long long m = 0; 2 * m <= 2 * r - 3 && ok; ++m)
            for (const auto& a : exponent_reps(2 * r - 3 - 2 * m, 2 * r)) {
                ++cases;
                if (!blowup_correction(r, MonomialClass{m, a}).is_zero()) {
                    ok = false;
                    break;
                }
            }
    report(4, "blowup correction vanishes for odd |a|, r <= 6 exhaustive", ok,
           std::to_string(cases) + " classes");
}

void criterion_5() {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long long> dd(-2, 2), rr(1, 3), bit(0, 1), nn(1, 5), wsel(0, 5);
    std::vector<EpsPoly> opts{EpsPoly(0),
                              EpsPoly::eps(2),
                              EpsPoly(Rational(1, 4)),
                              EpsPoly(Rational(1, 3)) + EpsPoly::eps(),
                              EpsPoly(Rational(1, 2)),
                              EpsPoly(1) - EpsPoly::eps()};
    auto random_slope = [&] {
        std::vector<EpsPoly> pick{opts[static_cast<size_t>(wsel(rng))],
                                  opts[static_cast<size_t>(wsel(rng))],
                                  opts[static_cast<size_t>(wsel(rng))]};
        std::sort(pick.begin(), pick.end());
        EpsPoly pw = bit(rng) ? EpsPoly::eps(5) : EpsPoly(0);
        return SlopeFunction{ParabolicWeight(pick), pw};
    };

    int ran = 0;
    bool ok = true;
    for (int trial = 0; trial < 60 && ok; ++trial) {
        int n = static_cast<int>(nn(rng));
        std::vector<ClassVec> classes;
        for (int i = 0; i < n; ++i)
            classes.push_back(ClassVec{rr(rng), dd(rng),
                                       std::vector<long long>{bit(rng), bit(rng), bit(rng)},
                                       bit(rng)});
        StabilityPair pair{random_slope(), random_slope()};
        PermTable u_table;
        for (const auto& sigma : all_permutations(n)) {
            std::vector<ClassVec> seq;
            for (int i = 0; i < n; ++i)
                seq.push_back(classes[static_cast<size_t>(sigma[static_cast<size_t>(i)]) - 1]);
            u_table[sigma] = coeff_U(seq, pair);
        }
        // the associative element must be a Lie element and the solved
        // rewriting must reproduce it
        IntAssocPoly lie;
        for (const auto& [sigma, c] : u_table)
            freelie::add_term(lie, IntWord(sigma.begin(), sigma.end()), c);
        if (!(dynkin(lie) == freelie::assoc_scale(lie, Rational(n)))) {
            ok = false;
            break;
        }
        try {
            PermTable solved = utilde_solve(u_table, n);
            if (!verify_identity(u_table, solved, n)) ok = false;
        } catch (const domain_error&) {
            ok = false;
        }
        ++ran;
    }
    report(5, "U tables pass the Lie test and solve, randomized", ok && ran == 60,
           std::to_string(ran) + " randomized stability inputs, n <= 5");
}

void criterion_6() {
    bool ok = true;
    long long cases = 0;
    for (long long r = 2; r <= 5 && ok; ++r) {
        std::set<std::vector<std::vector<long long>>> groups;
        for (auto tuple : enumerate_flag_decomps(r, 1, 2)) {
            std::sort(tuple.begin(), tuple.end());
            groups.insert(std::move(tuple));
        }
        for (char sign : {'+', '-'}) {
            ParabolicWeight c = sign == '+' ? ParabolicWeight::plus(static_cast<size_t>(r))
                                            : ParabolicWeight::minus(static_cast<size_t>(r));
            StabilityPair pair{
                SlopeFunction{ParabolicWeight::zero(static_cast<size_t>(r)), EpsPoly(0)},
                SlopeFunction{c, EpsPoly(0)}};
            for (const auto& blocks : groups) {
                int n = static_cast<int>(blocks.size());
                if (n > 4) continue;
                ++cases;
                std::vector<ClassVec> cls(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i) {
                    long long ri = std::accumulate(blocks[static_cast<size_t>(i)].begin(),
                                                   blocks[static_cast<size_t>(i)].end(), 0LL);
                    cls[static_cast<size_t>(i)] =
                        ClassVec{ri, 0, blocks[static_cast<size_t>(i)], std::nullopt};
                }
                PermTable u_table, closed;
                for (const auto& sigma : all_permutations(n)) {
                    std::vector<ClassVec> seq;
                    for (int i = 0; i < n; ++i)
                        seq.push_back(cls[static_cast<size_t>(sigma[static_cast<size_t>(i)]) - 1]);
                    u_table[sigma] = coeff_U(seq, pair);
                    const auto& first = blocks[static_cast<size_t>(sigma[0]) - 1];
                    bool supported = sign == '+' ? first[0] == 1
                                                 : first[static_cast<size_t>(r) - 1] == 1;
                    if (supported) {
                        Rational v = Rational::inv_factorial(n);
                        if (sign == '+' && n % 2 == 0) v = -v;
                        closed[sigma] = v;
                    }
                }
                PermTable solved = utilde_solve(u_table, n);
                if (!(nested_bracket_lie(solved, n) == nested_bracket_lie(closed, n)) ||
                    !verify_identity(u_table, closed, n)) {
                    ok = false;
                    break;
                }
            }
        }
    }
    report(6, "solver matches the closed-form rewriting for both special weights", ok,
           std::to_string(cases) + " decompositions, n <= 4");
}

void criterion_7() {
    bool ok = true;
    std::string detail;
    auto expect = [&](const std::string& label, const LieExpr& got, const LieExpr& want) {
        if (!(got == want)) {
            ok = false;
            detail += label + ": got " + got.render() + "; ";
        }
    };
    expect("(2,0,+)", jk_minus_joyce_special(2, 0, '+'), LieExpr());
    expect("(2,0,-)", jk_minus_joyce_special(2, 0, '-'), LieExpr());
    expect("(3,0,+)", jk_minus_joyce_special(3, 0, '+'),
           LieExpr::nested({J(2, 0), J(1, 0)}).scaled(Rational(-1, 6)));
    expect("(3,0,-)", jk_minus_joyce_special(3, 0, '-'),
           LieExpr::nested({J(2, 0), J(1, 0)}).scaled(Rational(1, 6)));
    expect("(4,0,+)", jk_minus_joyce_special(4, 0, '+'),
           LieExpr::nested({J(3, 0), J(1, 0)}).scaled(Rational(-1, 4)) +
               LieExpr::nested({J(2, 0), J(1, 0), J(1, 0)}).scaled(Rational(1, 24)));
    expect("(4,2,+)", jk_minus_joyce_special(4, 2, '+'), LieExpr());
    expect("(4,2,-)", jk_minus_joyce_special(4, 2, '-'), LieExpr());

    LieExpr r5 = jk_minus_joyce_special(5, 0, '+');
    auto coeff_check = [&](const std::vector<GeneratorLabel>& bracket, const Rational& want,
                           const std::string& label) {
        Rational got = coefficient_on(r5, bracket);
        if (!(got == want)) {
            ok = false;
            detail += "(5,0,+) " + label + ": got " + got.to_string() + "; ";
        }
    };
    coeff_check({J(4, 0), J(1, 0)}, Rational(-3, 10), "[J40,J10]");
    coeff_check({J(3, 0), J(2, 0)}, Rational(-1, 10), "[J30,J20]");
    coeff_check({J(3, 0), J(1, 0), J(1, 0)}, Rational(1, 15), "[[J30,J10],J10]");
    coeff_check({J(2, 0), J(1, 0), J(2, 0)}, Rational(1, 30), "[[J20,J10],J20]");
    report(7, "low-rank bracket table matches the printed values", ok, detail);
}

void criterion_8() {
    bool ok = true;
    std::string detail;
    for (long long r = 2; r <= 5 && ok; ++r)
        for (long long d = 0; d <= 2 && ok; ++d)
            for (char sign : {'+', '-'}) {
                ParabolicWeight c = sign == '+' ? ParabolicWeight::plus(static_cast<size_t>(r))
                                                : ParabolicWeight::minus(static_cast<size_t>(r));
                if (!(jk_minus_joyce_general(r, d, c) == jk_minus_joyce_special(r, d, sign))) {
                    ok = false;
                    detail = "first mismatch at r=" + std::to_string(r) +
                             " d=" + std::to_string(d) + " sign=" + sign;
                    break;
                }
            }
    report(8, "general and closed-form routes agree, r <= 5, d in {0,1,2}", ok, detail);
}

void criterion_9() {
    Rational b1 = blowup1_rank2(3, 3, 3);
    Rational b2 = blowup2_rank2(3, 3, 3);
    Rational total = jkkw_pairing_rank2(3, 3, 3, true).total;

    bool ok1 = b1 == Rational(35, 512);
    bool ok2 = b2 == Rational(-9, 8);
    bool ok3 = total == Rational(-1623, 256);
    std::string detail = "first blowup " + b1.to_string() + " vs 35/512; second blowup " +
                         b2.to_string() + " vs -9/8; total " + total.to_string() +
                         " vs -1623/256";
    if (!ok2 || !ok3)
        detail +=
            " (the printed double sum does not reproduce its own example value; the example"
            " and the total are mutually consistent, so the discrepancy sits in the printed"
            " formula, which carries a typo caveat; implemented as printed)";
    report(9, "rank-2 blowup corrections and total match the printed values",
           ok1 && ok2 && ok3, detail);
}

void criterion_10() {
    Rational g2 = bracket_j20_j10_pairing(Rank3PairingSpec{2, {{3, 1}}, 7});
    Rational g3 = bracket_j20_j10_pairing(Rank3PairingSpec{3, {{3, 3}}, 10});
    bool ok = g2 == Rational(70, 9) && g3 == Rational(-32200, 729);
    report(10, "rank-3 double-residue pairings equal 70/9 and -32200/729", ok,
           g2.to_string() + ", " + g3.to_string());
}

void criterion_11() {
    std::vector<Rational> linear{Rational(0), Rational(1)};
    Rational v = zeta_reg_sum(linear);
    report(11, "regularized sum of the integers equals -1/12", v == Rational(-1, 12),
           "value " + v.to_string());
}

void criterion_12() {
    bool ok = true;
    long long groups = 0;
    for (long long r = 1; r <= 6 && ok; ++r) {
        std::map<std::vector<long long>, long long> counts, marked;
        for (const auto& tuple : enumerate_flag_decomps(r, 1, 1)) {
            std::vector<long long> sizes;
            for (const auto& block : tuple)
                sizes.push_back(std::accumulate(block.begin(), block.end(), 0LL));
            counts[sizes]++;
            if (tuple[0][0] == 1) marked[sizes]++;
        }
        for (const auto& [sizes, count] : counts) {
            ++groups;
            if (count != collect_count(r, sizes)) ok = false;
            if (marked[sizes] != collect_count_marked(r, sizes)) ok = false;
        }
    }
    report(12, "decomposition counts match the multinomial collection formulas", ok,
           std::to_string(groups) + " size profiles, r <= 6");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance check(s) failed\n", g_failures);
    return g_failures;
}
