#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "wallx/rational.hpp"

namespace wallx {

// Free associative / free Lie machinery over an ordered letter type.
// Lie elements are kept in the Lyndon (standard bracketing) basis;
// equality of Lie elements is coefficientwise in that basis.
namespace freelie {

template <typename L>
using Word = std::vector<L>;

// Element of the free associative algebra: word -> coefficient.
template <typename L>
using AssocPoly = std::map<Word<L>, Rational>;

// Element of the free Lie algebra: Lyndon word -> coefficient.
template <typename L>
using LiePoly = std::map<Word<L>, Rational>;

template <typename L>
void add_term(AssocPoly<L>& p, const Word<L>& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

template <typename L>
AssocPoly<L> assoc_add(const AssocPoly<L>& a, const AssocPoly<L>& b) {
    AssocPoly<L> r = a;
    for (const auto& [w, c] : b) add_term(r, w, c);
    return r;
}

template <typename L>
AssocPoly<L> assoc_scale(const AssocPoly<L>& a, const Rational& c) {
    AssocPoly<L> r;
    if (!c.is_zero())
        for (const auto& [w, v] : a) r.emplace(w, v * c);
    return r;
}

template <typename L>
AssocPoly<L> assoc_mul(const AssocPoly<L>& a, const AssocPoly<L>& b) {
    AssocPoly<L> r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word<L> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            add_term(r, w, ca * cb);
        }
    return r;
}

template <typename L>
AssocPoly<L> commutator(const AssocPoly<L>& a, const AssocPoly<L>& b) {
    return assoc_add(assoc_mul(a, b), assoc_scale(assoc_mul(b, a), Rational(-1)));
}

template <typename L>
bool is_lyndon(const Word<L>& w) {
    if (w.empty()) return false;
    if (w.size() == 1) return true;
    // w is strictly smaller than all of its proper suffixes
    for (size_t i = 1; i < w.size(); ++i) {
        Word<L> suffix(w.begin() + i, w.end());
        if (!(w < suffix)) return false;
    }
    return true;
}

// Standard factorization of a Lyndon word w = uv with v the longest
// proper Lyndon suffix; the standard bracketing is [b(u), b(v)].
template <typename L>
size_t standard_split(const Word<L>& w) {
    for (size_t i = 1; i < w.size(); ++i) {
        Word<L> suffix(w.begin() + i, w.end());
        if (is_lyndon(suffix)) return i;
    }
    throw domain_error("lyndon: standard factorization failed");
}

// Associative expansion of the standard bracketing of a Lyndon word.
template <typename L>
AssocPoly<L> expand_lyndon_bracket(const Word<L>& w) {
    if (w.size() == 1) return AssocPoly<L>{{w, Rational(1)}};
    size_t s = standard_split(w);
    Word<L> u(w.begin(), w.begin() + s), v(w.begin() + s, w.end());
    return commutator(expand_lyndon_bracket(u), expand_lyndon_bracket(v));
}

// Rewrites a Lie element, given by its associative expansion, in the
// Lyndon basis. Errors if the input is not a Lie element (degree-0
// words, or a leading word that is not Lyndon, or a non-Lie residue).
template <typename L>
LiePoly<L> lyndon_decompose(AssocPoly<L> p) {
    LiePoly<L> out;
    while (!p.empty()) {
        const auto& [w, c] = *p.begin();
        if (w.empty() || !is_lyndon(w))
            throw domain_error("lyndon: not a Lie element");
        out.emplace(w, c);
        // The expansion of b(w) is w plus lexicographically larger
        // words, so the peeling terminates.
        p = assoc_add(p, assoc_scale(expand_lyndon_bracket(w), -c));
    }
    return out;
}

template <typename L>
AssocPoly<L> lie_to_assoc(const LiePoly<L>& p) {
    AssocPoly<L> r;
    for (const auto& [w, c] : p) r = assoc_add(r, assoc_scale(expand_lyndon_bracket(w), c));
    return r;
}

}  // namespace freelie

// ---- Operations on position letters 1..n ------------------------------

using IntWord = freelie::Word<int>;
using IntAssocPoly = freelie::AssocPoly<int>;
using IntLiePoly = freelie::LiePoly<int>;

// Permutations are stored one-based: sigma[i] is the letter in slot i+1.
using Permutation = std::vector<int>;

std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> permutations_fixing_first(int n);

// Associative expansion of [[...[e_{s(1)}, e_{s(2)}], ...], e_{s(n)}].
IntAssocPoly left_nested_expand(const Permutation& sigma);

// Right-to-left bracketing map w_1...w_n -> [[...[w_1,w_2],...],w_n],
// extended linearly. Input must be homogeneous.
IntAssocPoly dynkin(const IntAssocPoly& f);

// Tables over permutations of 1..n.
using PermTable = std::map<Permutation, Rational>;

// Given U over all permutations, produces a table Utilde supported on
// permutations with sigma(1) = 1 such that
//   sum_sigma U(sigma) e_{sigma(1)}...e_{sigma(n)}
//     = sum_sigma Utilde(sigma) [[...[e_{sigma(1)},e_{sigma(2)}],...],e_{sigma(n)}].
// Errors if the left-hand side is not a Lie element.
PermTable utilde_solve(const PermTable& u_table, int n);

bool verify_identity(const PermTable& u_table, const PermTable& utilde_table, int n);

// The Lie element sum_sigma table(sigma)*[[...[e_{sigma(1)},...],e_{sigma(n)}]]
// in the Lyndon basis.
IntLiePoly nested_bracket_lie(const PermTable& table, int n);

// JSON list of {"lyndon_word": [...], "coefficient": "p/q"} entries.
std::string lie_poly_to_json(const IntLiePoly& p);

}  // namespace wallx
