#include "extcalc/pcalc.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "family_rules.hpp"

namespace extcalc {

bool is_supported_pair_P(FunctorKind src_kind, FunctorKind tgt_kind) {
    FunctorKind s = detail::normalize_kind(src_kind, QuerySide::Source);
    FunctorKind t = detail::normalize_kind(tgt_kind, QuerySide::Target);
    if (s == FunctorKind::Gamma) return t != FunctorKind::Id;
    if (s == FunctorKind::Sym) return t == FunctorKind::Sym;
    if (s == FunctorKind::Lambda)
        return t == FunctorKind::Sym || t == FunctorKind::Lambda;
    return false;
}

HopfPresentation ext_pair_P(Dim p, FunctorKind src_kind, int src_twist,
                            FunctorKind tgt_kind, int tgt_twist) {
    require_prime(p);
    if (src_twist < 0 || tgt_twist < 0)
        throw InvalidParams("ext_pair_P: twists must be >= 0");
    const FunctorKind src = detail::normalize_kind(src_kind, QuerySide::Source);
    const FunctorKind tgt = detail::normalize_kind(tgt_kind, QuerySide::Target);
    const bool low_source = src_twist <= tgt_twist;
    const detail::FamilyRule rule = detail::family_rule(src, tgt, low_source);
    const int j = std::min(src_twist, tgt_twist);
    const int r = std::max(src_twist, tgt_twist);
    const int h = r - j;
    const Dim ph = checked_pow(p, h);
    HopfPresentation out;
    out.family = rule.family;
    const Dim count = checked_pow(p, j);
    for (Dim m = 0; m < count; ++m) {
        GeneratorSpec gen;
        gen.degree.coh = detail::shape_degree(rule.shape, ph, m);
        gen.degree.src = low_source ? ph : 1;
        gen.degree.tgt = low_source ? 1 : ph;
        gen.word = detail::make_word(rule.word, checked_mul(m, ph), r, h, j);
        out.generators.push_back(std::move(gen));
    }
    sort_generators(out.generators);
    return out;
}

namespace {

/// One Kunneth cell: Ext between a share of one source atom and the
/// degree-matched share of one target atom, as a coh-indexed vector.
class CellCache {
public:
    CellCache(Dim p, Dim max_coh) : p_(p), max_coh_(max_coh) {}

    const std::vector<Dim>& dims(const FunctorAtom& src, Dim src_share,
                                 const FunctorAtom& tgt, Dim tgt_share) {
        Key key{src.kind, src.twist, src_share, tgt.kind, tgt.twist, tgt_share};
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        HopfPresentation pres =
            ext_pair_P(p_, src.kind, src.twist, tgt.kind, tgt.twist);
        auto vec = coefficients_by_coh(pres, max_coh_, src_share, tgt_share);
        return cache_.emplace(key, std::move(vec)).first->second;
    }

private:
    using Key = std::tuple<FunctorKind, int, Dim, FunctorKind, int, Dim>;
    Dim p_;
    Dim max_coh_;
    std::map<Key, std::vector<Dim>> cache_;
};

/// Recursive distribution of source powers over target factors.
class WordSummation {
public:
    WordSummation(Dim p, const FunctorWord& src, const FunctorWord& tgt,
                  Dim max_coh)
        : p_(p), src_(src), tgt_(tgt), max_coh_(max_coh), cells_(p, max_coh),
          result_(static_cast<size_t>(max_coh) + 1, 0) {
        tgt_fill_.assign(tgt_.size(), 0);
    }

    std::vector<Dim> run() {
        std::vector<Dim> unit(static_cast<size_t>(max_coh_) + 1, 0);
        unit[0] = 1;
        recurse_row(0, unit);
        return result_;
    }

private:
    // Distribute source atom `row` across the target factors, extending the
    // running product of cell dimension vectors.
    void recurse_row(size_t row, const std::vector<Dim>& acc) {
        if (row == src_.size()) {
            for (size_t t = 0; t < tgt_.size(); ++t)
                if (tgt_fill_[t] != tgt_[t].star) return;
            for (size_t s = 0; s < result_.size(); ++s)
                result_[s] = checked_add(result_[s], acc[s]);
            return;
        }
        recurse_cell(row, 0, src_[row].star, acc);
    }

    // Choose the share of source atom `row` given to target factor `col`.
    void recurse_cell(size_t row, size_t col, Dim remaining,
                      const std::vector<Dim>& acc) {
        if (col == tgt_.size()) {
            if (remaining == 0) recurse_row(row + 1, acc);
            return;
        }
        const FunctorAtom& src = src_[row];
        const FunctorAtom& tgt = tgt_[col];
        for (Dim share = 0; share <= remaining; ++share) {
            if (share == 0) {
                recurse_cell(row, col + 1, remaining, acc);
                continue;
            }
            // The target share is forced by polynomial-degree matching;
            // fractional shares contribute nothing.
            Dim src_degree = checked_mul(share, checked_pow(p_, src.twist));
            Dim tgt_unit = checked_pow(p_, tgt.twist);
            if (src_degree % tgt_unit != 0) continue;
            Dim tgt_share = src_degree / tgt_unit;
            if (tgt_fill_[col] + tgt_share > tgt.star) continue;
            const auto& cell = cells_.dims(src, share, tgt, tgt_share);
            tgt_fill_[col] += tgt_share;
            recurse_cell(row, col + 1, remaining - share,
                         convolve_trunc(acc, cell, max_coh_));
            tgt_fill_[col] -= tgt_share;
        }
    }

    Dim p_;
    FunctorWord src_;
    FunctorWord tgt_;
    Dim max_coh_;
    CellCache cells_;
    std::vector<Dim> result_;
    std::vector<Dim> tgt_fill_;
};

} // namespace

std::vector<Dim> ext_word_P_by_coh(Dim p, const FunctorWord& source,
                                   const FunctorWord& target, Dim max_coh) {
    require_prime(p);
    if (max_coh < 0) throw InvalidParams("ext_word_P: max_coh must be >= 0");
    FunctorWord src = normalize_word(source, QuerySide::Source);
    FunctorWord tgt = normalize_word(target, QuerySide::Target);
    // Every source kind must pair with every target kind: the recursion
    // distributes each source atom over all target factors, so a single
    // unsupported ordered pair makes the query uncomputable from the
    // exponential tables regardless of the degree bookkeeping.
    for (const FunctorAtom& s : src)
        for (const FunctorAtom& t : tgt)
            if (!is_supported_pair_P(s.kind, t.kind))
                throw UnsupportedPair(
                    std::string("no presentation for the ordered pair (") +
                    kind_letter(s.kind) + ", " + kind_letter(t.kind) + ")");
    std::vector<Dim> zero(static_cast<size_t>(max_coh) + 1, 0);
    if (word_poly_degree(src, p) != word_poly_degree(tgt, p)) return zero;
    return WordSummation(p, src, tgt, max_coh).run();
}

Dim ext_word_P(Dim p, const FunctorWord& source, const FunctorWord& target,
               Dim coh) {
    if (coh < 0) return 0;
    return ext_word_P_by_coh(p, source, target, coh).back();
}

} // namespace extcalc
