#pragma once

#include <utility>
#include <vector>

#include "wallx/rational.hpp"

namespace wallx {

// A cohomology monomial t^{2m} y_1^{a_1} ... y_n^{a_n} on the quotient
// stack of n points on the projective line.
struct MonomialClass {
    long long m = 0;
    std::vector<long long> a;

    long long degree_a() const;
};

using MonomialCombo = std::vector<std::pair<Rational, MonomialClass>>;

// Number of worker threads used by the fixed-point sums (>= 1). Exact
// rational addition commutes, so results are identical for any count.
void set_fixed_point_jobs(int jobs);
int fixed_point_jobs();

// n odd: 2^{2-n} sum_{|eps| > n/2} (-1)^{eps.a + |eps|}, for
// 2m + |a| = n - 3.
Rational pairing_odd(long long n, const MonomialClass& cls);
Rational pairing_odd(long long n, const MonomialCombo& combo);

// n = 2r even, via the forgetful resolution from 2r+1 points:
// 2^{2-2r} sum_{|eps| >= r+1} (-1)^{eps.a + |eps|}, for 2m + |a| = 2r - 3.
Rational pairing_even_resolution(long long r, const MonomialClass& cls);
Rational pairing_even_resolution(long long r, const MonomialCombo& combo);

// The same pairing before the |eps| = r stratum cancels:
// 2^{1-2r} [ sum_{|eps| >= r+1} + sum_{|eps| >= r} ] (-1)^{eps.a + |eps|}.
Rational pairing_even_resolution_unreduced(long long r, const MonomialClass& cls);

// n = 2r even, via the blowup of the strictly semistable locus: the
// wall-crossing sum plus the blowup correction term. Both the closed
// form and the residue-based route of the correction are evaluated and
// must agree.
Rational pairing_even_desing(long long r, const MonomialClass& cls);
Rational pairing_even_desing(long long r, const MonomialCombo& combo);

// The blowup correction term
// 2^{2-2r} binom(2r-3, r-2) sum_{|eps| = r} (-1)^{eps.a + r},
// cross-checked against the iterated-residue evaluation of the new
// fixed loci. Identically zero for |a| odd.
Rational blowup_correction(long long r, const MonomialClass& cls);

// Truncated Poincare series of the middle intersection cohomology:
// (1+z^2)^{2r}/(1-z^4) - binom(2r,r)/2 * z^{2r-2}/(1-z^2).
// Returns the coefficients of z^0..z^max_degree.
std::vector<Rational> ih_poincare_series(long long r, long long max_degree);

}  // namespace wallx
