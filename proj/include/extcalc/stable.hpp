// Stable Ext presentations (the large-twist limit) and stability bounds.
//
// Adding one Frobenius twist to both sides of a strict-polynomial Ext query
// is injective, and the colimit over twists is the stable Ext.  For the six
// supported kind pairs the stable Ext-algebra between power families is
// again free on primitive tri-graded generators, now indexed by all m >= 0
// (the finite-twist presentations are truncations).  A StableFamily fixes
// the prime, the kind pair, the relative twist h, and which side of the
// query carries the twist; ext_pair_stable materializes the generator slice
// below explicit caps, which is all any coefficient extraction can touch.
//
// The bounds section gives the exact stabilization thresholds: the twist
// count, field size, and matrix size beyond which a finite computation
// already equals the stable (or ordinary functor category) answer, plus the
// twist threshold that forces a single Ext group to vanish.
#pragma once

#include "extcalc/functors.hpp"
#include "extcalc/presentation.hpp"

namespace extcalc {

/// Which side of the stable query carries the h extra twists.
enum class TwistSide { SourceTwisted, TargetTwisted };

/// A stable Ext family: Ext between the power families of the source and
/// target kinds, with h relative twists on one side.
struct StableFamily {
    Dim p = 2;
    FunctorKind src = FunctorKind::Gamma;
    FunctorKind tgt = FunctorKind::Sym;
    int h = 0;
    TwistSide side = TwistSide::TargetTwisted;
};

/// True when the ordered kind pair (after Id normalization) has a stable
/// presentation.  Same six pairs as the strict polynomial category.
bool is_supported_pair_stable(FunctorKind src_kind, FunctorKind tgt_kind);

/// The generators of the stable presentation with coh <= caps.coh,
/// src <= caps.src and tgt <= caps.tgt.  Requires p prime, h >= 0.
HopfPresentation ext_pair_stable(const StableFamily& family,
                                 const TriDegree& caps);

/// Stable Ext dimension at one tri-degree.
Dim ext_stable_coefficient(const StableFamily& family, const TriDegree& t);

/// Stable Ext dimensions at (s, src_star, tgt_star) for s = 0..max_coh.
std::vector<Dim> ext_stable_by_coh(const StableFamily& family, Dim max_coh,
                                   Dim src_star, Dim tgt_star);

/// The family dual to `family` under contravariant duality: kinds are
/// dualized and swapped, the twisted side flips, h is kept.  Coefficient
/// tables agree with source/target indices exchanged.
StableFamily dual_family(const StableFamily& family);

// ---------------------------------------------------------------------------
// Stability bounds.  All are least integers satisfying an explicit
// inequality, computed in exact arithmetic.

/// Least twist h such that every Ext^i with i <= the given bound between
/// degree-d power functors is already stable: the least e with
/// 2*p^e >= i + 2, plus ceil((d-1)/(p-1)).  Requires p prime, i >= 0, d >= 1.
int vanish_h(Dim p, Dim i, Dim d);

/// Least twist count m0 with 2*p^m0 >= s + 2, plus ceil((d-1)/(p-1)):
/// twists beyond m0 change nothing in cohomological degrees <= s.
int weak_m0(Dim p, Dim s, Dim d);

/// Field size d * p^weak_m0(p, s, d) sufficient for the ordinary functor
/// category over F_q to agree with the generic answer through degree s.
Dim weak_q(Dim p, Dim s, Dim d);

/// Least m with 2*p^m >= s + 1.  Requires p prime, s >= 0.
int strong_m(Dim p, Dim s);

/// Least field size q with q >= d: the degree-d comparison needs no more.
Dim strong_q(Dim d);

/// Matrix size 2m + 2d beyond which GL_n-cohomology agrees with the functor
/// category answer for degree-d functors and m twists.
Dim gl_n_bound(Dim m, Dim d);

} // namespace extcalc
