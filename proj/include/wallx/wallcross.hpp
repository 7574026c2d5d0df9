#pragma once

#include <utility>

#include "wallx/lie_expr.hpp"
#include "wallx/stability.hpp"

namespace wallx {

// The symbolic wall-crossing expressions comparing the Jeffrey-Kirwan,
// Joyce and pair classes on a fixed slope line d/r. Generators with
// distinct invariants are free; only antisymmetry and Jacobi are
// imposed (via the Lyndon normal form of LieExpr).

// JK_{r,d}(c) - J_{r,d} for a generic parabolic weight c (full flag):
// the sum over flag decompositions, n > 1, r0 | |f_i|, of
// (r_1!...r_n!/r!) * Utilde(f_1,...,f_n; mu_0, mu_c) * [[J_{r_1,d_1},...]].
// The Utilde coefficients are solved from the U table.
LieExpr jk_minus_joyce_general(long long r, long long d, const ParabolicWeight& c);

// Same wall-crossing for a partial flag type: base is a {0,1}^l vector,
// d_base the degree of the class; the weight has length l.
LieExpr jk_minus_joyce_general_for_flag(const std::vector<long long>& base, long long d_base,
                                        const ParabolicWeight& c);

// JK_{r,d}(c^sign) - J_{r,d} in closed form: the sum over compositions
// r = r_1 + ... + r_n, n > 1, r0 | r_i, with coefficient
// (-1)^{n-1}/n! * r_1/r for '+' and 1/n! * r_1/r for '-'.
LieExpr jk_minus_joyce_special(long long r, long long d, char sign);

// Pi(J'_{r,d,1}) expanded in Joyce classes: the sum over compositions
// with r0 | r_i (n >= 1) of (-1)^{n-1}/n! * r_1/r * [[J_{r_1,d_1},...]].
LieExpr pi_pair_expansion(long long r, long long d);

// The defining recursion J_{r,d} = PiJ'_{r,d} + sum_{n>1} (-1)^n/n! *
// r_1/r * [[...]], emitted as an (lhs, rhs) identity pair.
std::pair<LieExpr, LieExpr> joyce_recursion_expr(long long r, long long d);

// JK_{r,d}(c) - Pi(J'_{r,d,1}) for a strongly generic weight c: the sum
// over flag decompositions with the slope chain
// mu_c(f_1) < mu_c(f) < mu_c(f_2) < ... < mu_c(f_n), of
// (r_1!...r_n!/r!) * (r_1/r) * [[PiJ'_{r_1,d_1}, JK_{r_2,d_2}(c)], ...].
// JK generators carry `jk_tag` as their weight tag.
LieExpr jk_minus_pi_pairs(long long r, long long d, const ParabolicWeight& c,
                          const std::string& jk_tag = "c");

// Number of flag decompositions of 1^r with the given ordered block
// sizes: r!/(r_1! ... r_n!); the marked variant counts only those with
// the first position in the first block: (r-1)!/((r_1-1)! r_2! ... r_n!).
long long collect_count(long long r, const std::vector<long long>& sizes);
long long collect_count_marked(long long r, const std::vector<long long>& sizes);

// r / gcd(r, d); equals the denominator of the slope d/r.
long long slope_denominator(long long r, long long d);

}  // namespace wallx
