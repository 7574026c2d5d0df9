#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wallx/freelie.hpp"

namespace wallx {

enum class GenKind { PiJprime, JK, J, P };

std::string to_string(GenKind k);

// A formal Lie generator: a named enumerative class attached to
// discrete invariants (r, d), plus a weight tag for JK classes.
struct GeneratorLabel {
    GenKind kind = GenKind::J;
    long long r = 0;
    long long d = 0;
    std::string tag;  // which weight, for JK classes

    // Letter order used for the Lyndon normal form: by kind, then by
    // descending rank, then degree and tag. Descending rank makes the
    // normal form of low-rank brackets match the conventional way
    // they are written, e.g. [J(2,0),J(1,0)].
    friend std::strong_ordering operator<=>(const GeneratorLabel& a, const GeneratorLabel& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        if (auto c = b.r <=> a.r; c != 0) return c;
        if (auto c = a.d <=> b.d; c != 0) return c;
        return a.tag <=> b.tag;
    }
    friend bool operator==(const GeneratorLabel& a, const GeneratorLabel& b) = default;

    std::string to_string() const;
};

// A Q-linear combination of nested brackets of generator labels,
// stored in Lyndon normal form, so equality is decidable
// coefficientwise and [x, x] = 0 holds identically.
class LieExpr {
public:
    using Word = freelie::Word<GeneratorLabel>;

    LieExpr() = default;

    static LieExpr generator(const GeneratorLabel& label);
    // Left-nested bracket [[...[l_1, l_2], ...], l_n].
    static LieExpr nested(const std::vector<GeneratorLabel>& labels);

    const freelie::LiePoly<GeneratorLabel>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LieExpr operator-() const { return scaled(Rational(-1)); }
    LieExpr scaled(const Rational& c) const;
    friend LieExpr operator+(const LieExpr& a, const LieExpr& b);
    friend LieExpr operator-(const LieExpr& a, const LieExpr& b) { return a + (-b); }
    LieExpr& operator+=(const LieExpr& o) { return *this = *this + o; }
    friend bool operator==(const LieExpr& a, const LieExpr& b) { return a.terms_ == b.terms_; }

    static LieExpr bracket(const LieExpr& a, const LieExpr& b);

    // Replaces every generator by an expression and re-expands.
    LieExpr substitute(const std::function<LieExpr(const GeneratorLabel&)>& map) const;

    // e.g. "-1/6 [J(2,0),J(1,0)]"; "0" for the zero element.
    std::string render() const;
    std::string to_json() const;

private:
    freelie::LiePoly<GeneratorLabel> terms_;
};

}  // namespace wallx
