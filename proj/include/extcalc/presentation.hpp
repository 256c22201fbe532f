// Tri-graded Hopf-algebra presentations and coefficient extraction.
//
// Every Ext-group computed by this library is reported as a free graded
// algebra (polynomial, exterior, or divided-power) on an explicit list of
// tri-graded generators.  A tri-degree records
//
//   coh — cohomological degree,
//   src — index of the source functor power a class restricts to,
//   tgt — index of the target functor power it lands in.
//
// Generators are primitive; the dimension of a specific Ext group is the
// number of monomials in the generators with a prescribed tri-degree sum,
// which presentation_coefficient counts exactly.
#pragma once

#include <string>
#include <vector>

#include "extcalc/graded.hpp"

namespace extcalc {

/// One homogeneous tri-degree.  All components are nonnegative.
struct TriDegree {
    Dim coh = 0;
    Dim src = 0;
    Dim tgt = 0;

    bool operator==(const TriDegree&) const = default;
    /// Lexicographic by (coh, src, tgt) — the canonical output order.
    auto operator<=>(const TriDegree&) const = default;
};

/// Free commutative algebra flavor of a presentation.
enum class AlgebraFamily { Polynomial, Exterior, DividedPower };

/// Name of a family as used in JSON output ("polynomial", "exterior",
/// "divided_power").
std::string family_name(AlgebraFamily family);

/// Token alphabet for generator names.  A word is a product of tokens.
///   EWord     e(M) or e_r(M): the degree-2M polynomial-side class;
///   Phi       phi_h: the twist-h comparison class;
///   PhiSharp  phi_h^#: its dual;
///   Kz        kz_h: the twist-h exterior class;
///   KzSharp   kz_h^#: its dual.
enum class TokenKind { EWord, Phi, PhiSharp, Kz, KzSharp };

/// One token of a generator name. `sub` is the token subscript (for EWord, 0
/// means the unbounded-twist form written without a subscript); `arg` is the
/// EWord argument M; `twist` is the parenthesized twist annotation printed in
/// the superscript when positive.
struct GeneratorToken {
    TokenKind kind = TokenKind::EWord;
    Dim arg = 0;
    int sub = 0;
    int twist = 0;

    bool operator==(const GeneratorToken&) const = default;
};

/// Renders a token word as plain text, tokens joined by '*'; the empty word
/// renders as "1".
std::string render_word(const std::vector<GeneratorToken>& word);

/// Renders a token word as LaTeX math (phi -> \varphi, kz -> \mathrm{kz},
/// sharps and twist annotations in the superscript).
std::string render_word_latex(const std::vector<GeneratorToken>& word);

/// A named generator with its tri-degree.
struct GeneratorSpec {
    std::vector<GeneratorToken> word;
    TriDegree degree;

    bool operator==(const GeneratorSpec&) const = default;
};

/// A free graded algebra presentation of an Ext-algebra: one family flavor
/// and a list of primitive generators.  Generator order is canonical:
/// sorted by tri-degree, then by rendered word.
struct HopfPresentation {
    AlgebraFamily family = AlgebraFamily::Polynomial;
    std::vector<GeneratorSpec> generators;
    bool primitively_generated = true;
};

/// Sorts the generator list into canonical order (by tri-degree, then word).
void sort_generators(std::vector<GeneratorSpec>& generators);

/// Number of monomials in the generators with tri-degree sum exactly t.
/// Exterior presentations admit each generator at most once; polynomial and
/// divided-power presentations admit unbounded exponents.  Exact and finite:
/// every generator has src >= 1 and tgt >= 1, so the (src, tgt) budget bounds
/// the monomial length.
Dim presentation_coefficient(const HopfPresentation& pres, const TriDegree& t);

/// Coefficients at (s, src, tgt) for s = 0..max_coh, as a dense vector.
std::vector<Dim> coefficients_by_coh(const HopfPresentation& pres, Dim max_coh,
                                     Dim src, Dim tgt);

/// The full coefficient block [coh][src][tgt] for coh <= max_coh,
/// src <= max_src, tgt <= max_tgt, from a single dynamic program.
std::vector<std::vector<std::vector<Dim>>> coefficient_table(
    const HopfPresentation& pres, Dim max_coh, Dim max_src, Dim max_tgt);

} // namespace extcalc
