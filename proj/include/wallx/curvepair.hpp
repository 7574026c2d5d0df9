#pragma once

#include <map>

#include "wallx/rational.hpp"

namespace wallx {

// Numeric pairing engines for rank-2 and rank-3 moduli of bundles over
// a genus-g curve, against monomials in the tautological generators.

// Jeffrey-Kirwan pairing of a_2^m f_2^n/n! in rank 2, degree 0:
// (-1)^{g-m}/2^{2m-g+1} * B_{2g-2-2m}(1)/(2g-2-2m)!, zero for m >= g.
// Depends only on (g, m).
Rational jk_pairing_rank2(long long g, long long m);

// Correction from the first blowup of the partial desingularization:
// delta_{g,n} 2^{-3g+1} sum_{k+l=g-1} 2^{-l} binom(g+k,k) binom(g+l-1,l),
// with 2m + n = 4g - 3.
Rational blowup1_rank2(long long g, long long m, long long n);

// Correction from the second blowup, evaluated from the printed double
// sum with coefficients C_{r,s,l} obtained by series inversion of
//   (1-2t) * sum_{k+l<=g-1} (-1)^{g-1-k-l}/l! binom(g,k) x^k z^l,
// using the convention 1/j! = 0 for j < 0.
Rational blowup2_rank2(long long g, long long m, long long n);

struct JkkwRank2Result {
    Rational jk;       // chamber pairing
    Rational blowup1;  // first blowup correction
    Rational blowup2;  // second blowup correction
    Rational total;    // sum, times n! when raw
};

// Pairing of a_2^m f_2^n/n! on the partial desingularization (sum of
// the three terms above); `raw` multiplies by n! to give the pairing
// of the bare monomial a_2^m f_2^n.
JkkwRank2Result jkkw_pairing_rank2(long long g, long long m, long long n, bool raw);

// Pairing of the rank-3 wall-crossing bracket against
// prod_l S_{1,0,l}^{m_l} * exp(alpha * S_{1,2,2}): the double residue
//   1/2 res_{z2} res_{z1} { -alpha^{3g} /
//     ((z1 z2 (z2-z1))^{2g-2} (1-exp(alpha z1))) * prod_l [...]^{m_l} }
// expanded for |z1| < |z2|, followed by k! times the alpha^k
// coefficient. Truncation orders are derived from the pole orders; the
// series layer certifies them. The extraction is exactly zero when
// sum_l l*m_l + k != 9(g-1) + 1.
struct Rank3PairingSpec {
    long long g = 2;
    std::map<long long, long long> m_l;  // l >= 2 -> multiplicity
    long long k = 0;                     // exponent from the exp(alpha S) pairing
    long long order_margin = 0;          // extra truncation beyond the derived bound

    bool degree_balanced() const;
};

Rational bracket_j20_j10_pairing(const Rank3PairingSpec& spec);

}  // namespace wallx
