// Ext computations in the ordinary functor category over F_q, q = p^N.
//
// Two routes are implemented and cross-checked against each other:
//
//   * ext_F_family — the closed-form presentations: for four kind pairs the
//     Ext-algebra between the power families of a twist-h source and an
//     untwisted target is free on two series of primitive generators, one
//     indexed by twists h + s*N (s >= 0, twist effectively on the source)
//     and one by twists t*N - h (t >= 1, twist effectively on the target).
//
//   * ext_F — the assembly of a single Ext group from stable data: sum over
//     all ways to write the source power j and target power l as
//       j = sum_s j_s + sum_t l_t * p^(tN-h),
//       l = sum_s j_s * p^(sN+h) + sum_t l_t,
//     of a tensor product of stable coefficient vectors, one factor per
//     nonzero entry.  pr_enumerate lists the index sequences; only finitely
//     many entries can be nonzero because p^(sN+h) <= l and p^(tN-h) <= j
//     bound the active positions.
//
// Over F_q every Ext between homogeneous functors vanishes unless the
// polynomial degrees agree mod q - 1; congruence_gate tests that and is
// implied by the existence of any index sequence.
#pragma once

#include "extcalc/functors.hpp"
#include "extcalc/presentation.hpp"

namespace extcalc {

/// One index sequence: js[s] for s >= 0 and ls[t-1] for t >= 1, trailing
/// zeros trimmed.
struct PrSequence {
    std::vector<Dim> js;
    std::vector<Dim> ls;

    bool operator==(const PrSequence&) const = default;
};

/// All index sequences for source power j, target power l and source twist
/// h.  Requires p prime, N >= 1, 0 <= h < N, j >= 0, l >= 0.  Deterministic
/// order (lexicographic in the concatenated entries).
std::vector<PrSequence> pr_enumerate(Dim p, int N, int h, Dim j, Dim l);

/// True iff deg_src == deg_tgt mod (p^N - 1); Ext over F_q vanishes
/// otherwise.
bool congruence_gate(Dim p, int N, Dim deg_src, Dim deg_tgt);

/// True when the ordered kind pair (after Id normalization) has a
/// closed-form presentation over F_q: (Gamma, Sym), (Gamma, Lambda),
/// (Gamma, Gamma), (Lambda, Lambda).
bool is_supported_family_F(FunctorKind src_kind, FunctorKind tgt_kind);

/// A free presentation over F_q: family flavor plus all generators with
/// coh <= max_coh and both power indices <= max_index.
struct FFamily {
    AlgebraFamily family = AlgebraFamily::Polynomial;
    std::vector<GeneratorSpec> generators;
    bool primitively_generated = true;
};

/// The generator slice of the Ext-algebra over F_q between the power
/// families of src_kind^{(h)} and tgt_kind (untwisted).  Requires p prime,
/// N >= 1, 0 <= h < N; throws UnsupportedPair for pairs outside the four
/// presentation families.
FFamily ext_F_family(Dim p, int N, FunctorKind src_kind, FunctorKind tgt_kind,
                     int h, Dim max_coh, Dim max_index);

/// dim Ext^s over F_q between source^{(h)} and target for s = 0..max_coh,
/// assembled from stable data.  The source atom carries the twist h
/// (0 <= h < N); the target atom must be untwisted.  All six stable kind
/// pairs are supported; Id normalizes as usual.
std::vector<Dim> ext_F_by_coh(Dim p, int N, const FunctorAtom& source,
                              const FunctorAtom& target, Dim max_coh);

/// dim Ext^coh over F_q between source^{(h)} and target.
Dim ext_F(Dim p, int N, const FunctorAtom& source, const FunctorAtom& target,
          Dim coh);

} // namespace extcalc
