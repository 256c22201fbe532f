#include "extcalc/stable.hpp"

#include "family_rules.hpp"

namespace extcalc {

bool is_supported_pair_stable(FunctorKind src_kind, FunctorKind tgt_kind) {
    FunctorKind s = detail::normalize_kind(src_kind, QuerySide::Source);
    FunctorKind t = detail::normalize_kind(tgt_kind, QuerySide::Target);
    if (s == FunctorKind::Gamma) return t != FunctorKind::Id;
    if (s == FunctorKind::Sym) return t == FunctorKind::Sym;
    if (s == FunctorKind::Lambda)
        return t == FunctorKind::Sym || t == FunctorKind::Lambda;
    return false;
}

HopfPresentation ext_pair_stable(const StableFamily& family,
                                 const TriDegree& caps) {
    require_prime(family.p);
    if (family.h < 0) throw InvalidParams("ext_pair_stable: h must be >= 0");
    if (caps.coh < 0 || caps.src < 0 || caps.tgt < 0)
        throw InvalidParams("ext_pair_stable: caps must be >= 0");
    const FunctorKind src = detail::normalize_kind(family.src, QuerySide::Source);
    const FunctorKind tgt = detail::normalize_kind(family.tgt, QuerySide::Target);
    // The target-twisted direction is the one where the source keeps the
    // smaller twist; the dispatch table is shared with the finite-twist
    // presentations, whose truncations these families extend.
    const bool low_source = family.side == TwistSide::TargetTwisted;
    const detail::FamilyRule rule = detail::family_rule(src, tgt, low_source);
    const Dim ph = checked_pow(family.p, family.h);
    HopfPresentation out;
    out.family = rule.family;
    const Dim src_idx = low_source ? ph : 1;
    const Dim tgt_idx = low_source ? 1 : ph;
    if (src_idx <= caps.src && tgt_idx <= caps.tgt) {
        for (Dim m = 0;; ++m) {
            Dim coh = detail::shape_degree(rule.shape, ph, m);
            if (coh > caps.coh) break;
            GeneratorSpec gen;
            gen.degree = TriDegree{coh, src_idx, tgt_idx};
            gen.word = detail::make_word(rule.word, checked_mul(m, ph), 0,
                                         family.h, 0);
            out.generators.push_back(std::move(gen));
        }
    }
    sort_generators(out.generators);
    return out;
}

Dim ext_stable_coefficient(const StableFamily& family, const TriDegree& t) {
    if (t.coh < 0 || t.src < 0 || t.tgt < 0) return 0;
    return presentation_coefficient(ext_pair_stable(family, t), t);
}

std::vector<Dim> ext_stable_by_coh(const StableFamily& family, Dim max_coh,
                                   Dim src_star, Dim tgt_star) {
    TriDegree caps{max_coh, src_star, tgt_star};
    return coefficients_by_coh(ext_pair_stable(family, caps), max_coh,
                               src_star, tgt_star);
}

StableFamily dual_family(const StableFamily& family) {
    StableFamily out = family;
    out.src = dual_kind(family.tgt);
    out.tgt = dual_kind(family.src);
    out.side = family.side == TwistSide::SourceTwisted
                   ? TwistSide::TargetTwisted
                   : TwistSide::SourceTwisted;
    return out;
}

namespace {

/// Least e >= 0 with 2 * p^e >= x (exact integer comparison).
int least_power_reaching(Dim p, Dim x) {
    int e = 0;
    Dim value = 2;
    while (value < x) {
        value = checked_mul(value, p);
        ++e;
    }
    return e;
}

Dim ceil_div(Dim a, Dim b) { return (a + b - 1) / b; }

} // namespace

int vanish_h(Dim p, Dim i, Dim d) {
    require_prime(p);
    if (i < 0 || d < 1) throw InvalidParams("vanish_h: need i >= 0, d >= 1");
    return least_power_reaching(p, checked_add(i, 2)) +
           static_cast<int>(ceil_div(d - 1, p - 1));
}

int weak_m0(Dim p, Dim s, Dim d) {
    require_prime(p);
    if (s < 0 || d < 1) throw InvalidParams("weak_m0: need s >= 0, d >= 1");
    return least_power_reaching(p, checked_add(s, 2)) +
           static_cast<int>(ceil_div(d - 1, p - 1));
}

Dim weak_q(Dim p, Dim s, Dim d) {
    return checked_mul(d, checked_pow(p, weak_m0(p, s, d)));
}

int strong_m(Dim p, Dim s) {
    require_prime(p);
    if (s < 0) throw InvalidParams("strong_m: need s >= 0");
    return least_power_reaching(p, checked_add(s, 1));
}

Dim strong_q(Dim d) {
    if (d < 1) throw InvalidParams("strong_q: need d >= 1");
    return d;
}

Dim gl_n_bound(Dim m, Dim d) {
    if (m < 0 || d < 0) throw InvalidParams("gl_n_bound: need m, d >= 0");
    return checked_add(checked_mul(2, m), checked_mul(2, d));
}

} // namespace extcalc
