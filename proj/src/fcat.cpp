#include "extcalc/fcat.hpp"

#include "extcalc/stable.hpp"
#include "family_rules.hpp"

namespace extcalc {

namespace {

void check_field(Dim p, int N, int h) {
    require_prime(p);
    if (N < 1) throw InvalidParams("F category: need N >= 1");
    if (h < 0 || h >= N) throw InvalidParams("F category: need 0 <= h < N");
}

/// Number of index positions that can be active: the least n >= 0 with
/// p^((n+1)N - h) > j and p^(nN + h) > l.
int active_positions(Dim p, int N, int h, Dim j, Dim l) {
    int n = 0;
    while (checked_pow(p, (n + 1) * N - h) <= j || checked_pow(p, n * N + h) <= l)
        ++n;
    return n;
}

void trim_zeros(std::vector<Dim>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

class PrEnumerator {
public:
    PrEnumerator(Dim p, int N, int h, Dim j, Dim l)
        : p_(p), N_(N), h_(h), j_(j), l_(l),
          n_(active_positions(p, N, h, j, l)) {}

    std::vector<PrSequence> run() {
        current_.js.assign(static_cast<size_t>(n_), 0);
        current_.ls.assign(static_cast<size_t>(n_), 0);
        recurse_js(0, 0, 0);
        return std::move(out_);
    }

private:
    // Choose js[s]; it adds js[s] to the j-sum and js[s]*p^(sN+h) to the
    // l-sum.
    void recurse_js(int s, Dim jsum, Dim lsum) {
        if (s == n_) {
            recurse_ls(1, jsum, lsum);
            return;
        }
        Dim weight = checked_pow(p_, s * N_ + h_);
        for (Dim v = 0; jsum + v <= j_ && lsum + checked_mul(v, weight) <= l_; ++v) {
            current_.js[static_cast<size_t>(s)] = v;
            recurse_js(s + 1, jsum + v, lsum + v * weight);
        }
        current_.js[static_cast<size_t>(s)] = 0;
    }

    // Choose ls[t-1]; it adds ls[t-1]*p^(tN-h) to the j-sum and ls[t-1] to
    // the l-sum.
    void recurse_ls(int t, Dim jsum, Dim lsum) {
        if (t > n_) {
            if (jsum == j_ && lsum == l_) {
                PrSequence seq = current_;
                trim_zeros(seq.js);
                trim_zeros(seq.ls);
                out_.push_back(std::move(seq));
            }
            return;
        }
        Dim weight = checked_pow(p_, t * N_ - h_);
        for (Dim v = 0; jsum + checked_mul(v, weight) <= j_ && lsum + v <= l_; ++v) {
            current_.ls[static_cast<size_t>(t - 1)] = v;
            recurse_ls(t + 1, jsum + v * weight, lsum + v);
        }
        current_.ls[static_cast<size_t>(t - 1)] = 0;
    }

    Dim p_;
    int N_;
    int h_;
    Dim j_;
    Dim l_;
    int n_;
    PrSequence current_;
    std::vector<PrSequence> out_;
};

} // namespace

std::vector<PrSequence> pr_enumerate(Dim p, int N, int h, Dim j, Dim l) {
    check_field(p, N, h);
    if (j < 0 || l < 0) throw InvalidParams("pr_enumerate: need j, l >= 0");
    return PrEnumerator(p, N, h, j, l).run();
}

bool congruence_gate(Dim p, int N, Dim deg_src, Dim deg_tgt) {
    check_field(p, N, 0);
    if (deg_src < 0 || deg_tgt < 0)
        throw InvalidParams("congruence_gate: degrees must be >= 0");
    Dim modulus = checked_pow(p, N) - 1;
    if (modulus == 1) return true;
    return (deg_src - deg_tgt) % modulus == 0;
}

bool is_supported_family_F(FunctorKind src_kind, FunctorKind tgt_kind) {
    FunctorKind s = detail::normalize_kind(src_kind, QuerySide::Source);
    FunctorKind t = detail::normalize_kind(tgt_kind, QuerySide::Target);
    if (s == FunctorKind::Gamma)
        return t == FunctorKind::Sym || t == FunctorKind::Lambda ||
               t == FunctorKind::Gamma;
    return s == FunctorKind::Lambda && t == FunctorKind::Lambda;
}

FFamily ext_F_family(Dim p, int N, FunctorKind src_kind, FunctorKind tgt_kind,
                     int h, Dim max_coh, Dim max_index) {
    check_field(p, N, h);
    if (max_coh < 0 || max_index < 0)
        throw InvalidParams("ext_F_family: caps must be >= 0");
    const FunctorKind src = detail::normalize_kind(src_kind, QuerySide::Source);
    const FunctorKind tgt = detail::normalize_kind(tgt_kind, QuerySide::Target);
    if (!is_supported_family_F(src, tgt))
        throw UnsupportedPair(
            std::string("no presentation over F_q for the ordered pair (") +
            kind_letter(src) + ", " + kind_letter(tgt) + ")");
    FFamily out;
    out.family = detail::family_rule(src, tgt, true).family;
    // Series of generators twisted on the source side (twists h + sN) and on
    // the target side (twists tN - h); each series follows the stable degree
    // shape of its direction.
    const detail::FamilyRule src_rule = detail::family_rule(src, tgt, false);
    const detail::FamilyRule tgt_rule = detail::family_rule(src, tgt, true);
    for (int s = 0;; ++s) {
        const Dim pt = checked_pow(p, h + s * N);
        if (pt > max_index) break;
        for (Dim m = 0;; ++m) {
            Dim coh = detail::shape_degree(src_rule.shape, pt, m);
            if (coh > max_coh) break;
            GeneratorSpec gen;
            gen.degree = TriDegree{coh, 1, pt};
            gen.word = detail::make_word(src_rule.word, checked_mul(m, pt), 0,
                                         h + s * N, 0);
            out.generators.push_back(std::move(gen));
        }
    }
    for (int t = 1;; ++t) {
        const Dim pt = checked_pow(p, t * N - h);
        if (pt > max_index) break;
        for (Dim m = 0;; ++m) {
            Dim coh = detail::shape_degree(tgt_rule.shape, pt, m);
            if (coh > max_coh) break;
            GeneratorSpec gen;
            gen.degree = TriDegree{coh, pt, 1};
            gen.word = detail::make_word(tgt_rule.word, checked_mul(m, pt), 0,
                                         t * N - h, h);
            out.generators.push_back(std::move(gen));
        }
    }
    if (max_index < 1) out.generators.clear();
    sort_generators(out.generators);
    return out;
}

std::vector<Dim> ext_F_by_coh(Dim p, int N, const FunctorAtom& source,
                              const FunctorAtom& target, Dim max_coh) {
    check_field(p, N, source.twist);
    if (target.twist != 0)
        throw InvalidParams("ext_F: the target must be untwisted");
    if (max_coh < 0) throw InvalidParams("ext_F: max_coh must be >= 0");
    if (source.star < 0 || target.star < 0)
        throw InvalidParams("ext_F: powers must be >= 0");
    const FunctorKind src = detail::normalize_kind(source.kind, QuerySide::Source);
    const FunctorKind tgt = detail::normalize_kind(target.kind, QuerySide::Target);
    if (!is_supported_pair_stable(src, tgt))
        throw UnsupportedPair(
            std::string("no stable presentation for the ordered pair (") +
            kind_letter(src) + ", " + kind_letter(tgt) + ")");
    const int h = source.twist;
    const Dim j = source.star;
    const Dim l = target.star;
    std::vector<Dim> result(static_cast<size_t>(max_coh) + 1, 0);
    for (const PrSequence& seq : pr_enumerate(p, N, h, j, l)) {
        std::vector<Dim> acc(static_cast<size_t>(max_coh) + 1, 0);
        acc[0] = 1;
        for (size_t s = 0; s < seq.js.size(); ++s) {
            if (seq.js[s] == 0) continue;
            StableFamily fam{p, src, tgt, static_cast<int>(s) * N + h,
                             TwistSide::SourceTwisted};
            Dim weight = checked_pow(p, static_cast<int>(s) * N + h);
            auto factor = ext_stable_by_coh(fam, max_coh, seq.js[s],
                                            checked_mul(seq.js[s], weight));
            acc = convolve_trunc(acc, factor, max_coh);
        }
        for (size_t t = 1; t <= seq.ls.size(); ++t) {
            Dim lt = seq.ls[t - 1];
            if (lt == 0) continue;
            StableFamily fam{p, src, tgt, static_cast<int>(t) * N - h,
                             TwistSide::TargetTwisted};
            Dim weight = checked_pow(p, static_cast<int>(t) * N - h);
            auto factor =
                ext_stable_by_coh(fam, max_coh, checked_mul(lt, weight), lt);
            acc = convolve_trunc(acc, factor, max_coh);
        }
        for (size_t c = 0; c < result.size(); ++c)
            result[c] = checked_add(result[c], acc[c]);
    }
    return result;
}

Dim ext_F(Dim p, int N, const FunctorAtom& source, const FunctorAtom& target,
          Dim coh) {
    if (coh < 0) return 0;
    return ext_F_by_coh(p, N, source, target, coh).back();
}

} // namespace extcalc
