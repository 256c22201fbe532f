// Ext computations in the strict polynomial category.
//
// ext_pair_P returns, for an ordered pair of twisted exponential functor
// kinds, the full Hopf-algebra presentation of the bigraded Ext-algebra
// between their power families: with j the smaller and r the larger twist and
// h = r - j, the presentation has p^j primitive generators indexed by
// 0 <= m < p^j, with one of three cohomological degree shapes
//
//   A(m) = 2*p^h*m,   B(m) = 2*p^h*m + p^h - 1,   C(m) = 2*p^h*m + 2*p^h - 2
//
// and power indices (p^h, 1) when the source carries the smaller twist,
// (1, p^h) otherwise.  The dimension of Ext^s between the d-th source power
// and the d'-th target power is the (s, d, d') coefficient of the
// presentation.
//
// ext_word_P extends the pair computation to tensor words of atoms by the
// exact-category Kunneth recursion: summing over all ways to distribute each
// source atom's power across the target factors, with the target share fixed
// by polynomial-degree matching (non-integral shares contribute nothing).
//
// Supported ordered kind pairs: (Gamma, Sym), (Gamma, Lambda),
// (Gamma, Gamma), (Sym, Sym), (Lambda, Lambda), (Lambda, Sym); Id normalizes
// to Gamma on the source side and Sym on the target side.  The remaining
// pairs have no exponential-generator presentation and raise
// UnsupportedPair.
#pragma once

#include "extcalc/functors.hpp"
#include "extcalc/presentation.hpp"

namespace extcalc {

/// True when the ordered kind pair (after Id normalization) has a
/// presentation.
bool is_supported_pair_P(FunctorKind src_kind, FunctorKind tgt_kind);

/// Presentation of the Ext-algebra between the power families of
/// src_kind^{(src_twist)} and tgt_kind^{(tgt_twist)}.  Requires p prime and
/// nonnegative twists; throws UnsupportedPair for unsupported kind pairs.
HopfPresentation ext_pair_P(Dim p, FunctorKind src_kind, int src_twist,
                            FunctorKind tgt_kind, int tgt_twist);

/// dim Ext^s between two tensor words for s = 0..max_coh.
std::vector<Dim> ext_word_P_by_coh(Dim p, const FunctorWord& source,
                                   const FunctorWord& target, Dim max_coh);

/// dim Ext^coh between two tensor words.
Dim ext_word_P(Dim p, const FunctorWord& source, const FunctorWord& target,
               Dim coh);

} // namespace extcalc
