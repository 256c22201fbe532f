// Functor expressions: the inputs of every Ext query.
//
// An atom is a classical functor kind (divided power Gamma, exterior Lambda,
// symmetric Sym, or the identity Id) with a power index ("star") and a
// Frobenius-twist count.  A word is a tensor product of atoms.  The small
// helpers here normalize words into the shape the calculators consume and
// implement the contravariant duality on queries.
#pragma once

#include <string>
#include <vector>

#include "extcalc/checked.hpp"

namespace extcalc {

enum class FunctorKind { Gamma, Lambda, Sym, Id };

/// Single-letter display name: G, L, S, I.
char kind_letter(FunctorKind kind);

/// LaTeX name: \Gamma, \Lambda, S, I.
std::string kind_latex(FunctorKind kind);

/// Kind^star with `twist` Frobenius twists applied.  star >= 0; Id requires
/// star <= 1 (it has no higher powers).
struct FunctorAtom {
    FunctorKind kind = FunctorKind::Id;
    Dim star = 1;
    int twist = 0;

    bool operator==(const FunctorAtom&) const = default;
};

/// Tensor product of atoms, left to right.  The empty word is the constant
/// functor of rank one.
using FunctorWord = std::vector<FunctorAtom>;

/// Polynomial degree star * p^twist of an atom.
Dim atom_poly_degree(const FunctorAtom& atom, Dim p);

/// Total polynomial degree of a word.
Dim word_poly_degree(const FunctorWord& word, Dim p);

/// Under duality Gamma and Sym exchange while Lambda and Id are fixed.
FunctorKind dual_kind(FunctorKind kind);

/// Which end of a query an atom sits on.  Normalization resolves Id
/// differently on the two sides (as a first divided power on the source, a
/// first symmetric power on the target); both readings are the same functor.
enum class QuerySide { Source, Target };

/// Normalizes a word for computation: drops star-0 atoms (unit factors) and
/// rewrites Id atoms to Gamma^1 (source side) or Sym^1 (target side),
/// keeping twists.  Throws InvalidParams on negative stars or Id with
/// star > 1.
FunctorWord normalize_word(const FunctorWord& word, QuerySide side);

/// A source/target pair of words in the strict polynomial category.
struct PExtQuery {
    FunctorWord source;
    FunctorWord target;

    bool operator==(const PExtQuery&) const = default;
};

/// Contravariant duality: swaps source and target, reverses the factor order
/// of each word, and exchanges Gamma with Sym atomwise (stars and twists are
/// kept).  An involution.
PExtQuery dualize(const PExtQuery& query);

/// Renders an atom / word in the CLI expression grammar, e.g. "G^2(1)" or
/// "G^2(1)*L^3".  Default star 1 and twist 0 are omitted.
std::string render_atom(const FunctorAtom& atom);
std::string render_functor_word(const FunctorWord& word);

/// LaTeX rendering, e.g. "\Gamma^{2(1)} \otimes \Lambda^{3}".
std::string render_atom_latex(const FunctorAtom& atom);
std::string render_functor_word_latex(const FunctorWord& word);

} // namespace extcalc
