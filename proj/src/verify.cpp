#include "extcalc/verify.hpp"

#include <random>

#include "extcalc/basic_ext.hpp"
#include "extcalc/complexes.hpp"
#include "extcalc/fcat.hpp"
#include "extcalc/pcalc.hpp"
#include "extcalc/stable.hpp"

namespace extcalc {

namespace {

std::string dim_list(const std::vector<Dim>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

void accumulate(GradedDims& into, const GradedDims& from) {
    for (const auto& [n, v] : from.entries()) into.add(n, v);
}

} // namespace

SuiteResult verify_koszul() {
    SuiteResult result{"koszul", 0, {}};
    for (Dim p : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            for (int D = 1; D <= 6; ++D) {
                for (bool dual : {false, true}) {
                    ChainComplexFp complex =
                        dual ? build_dual_koszul(p, n, D) : build_koszul(p, n, D);
                    std::vector<Dim> h = homology_dims(complex);
                    ++result.checks;
                    for (Dim v : h) {
                        if (v != 0) {
                            result.failures.push_back(
                                std::string(dual ? "dual koszul" : "koszul") +
                                " p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                " D=" + std::to_string(D) +
                                " not exact: H = " + dim_list(h));
                            break;
                        }
                    }
                }
            }
        }
    }
    return result;
}

SuiteResult verify_derham() {
    SuiteResult result{"derham", 0, {}};
    for (Dim p : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            for (int D = 0; D <= 6; ++D) {
                std::vector<Dim> h = homology_dims(build_derham(p, n, D));
                std::vector<Dim> want;
                for (int k = 0; k <= D; ++k)
                    want.push_back(derham_expected_homology(p, n, D, k));
                ++result.checks;
                if (h != want)
                    result.failures.push_back(
                        "derham p=" + std::to_string(p) + " n=" + std::to_string(n) +
                        " D=" + std::to_string(D) + ": H = " + dim_list(h) +
                        " expected " + dim_list(want));
            }
        }
    }
    return result;
}

SuiteResult verify_genkoszul() {
    SuiteResult result{"genkoszul", 0, {}};
    std::mt19937 rng(20240811u);
    for (Dim p : {2, 3}) {
        for (int trial = 0; trial < 24; ++trial) {
            const int nA = 1 + static_cast<int>(rng() % 4);
            const int nB = 1 + static_cast<int>(rng() % 4);
            const int shift = static_cast<int>(rng() % 3);
            std::vector<int> src_deg(static_cast<size_t>(nA));
            std::vector<int> tgt_deg(static_cast<size_t>(nB));
            for (int& g : src_deg) g = static_cast<int>(rng() % 4);
            // Keep a decent fraction of the target slots reachable so the
            // blocks are not all empty.
            for (int& g : tgt_deg)
                g = static_cast<int>(rng() % 4) + (rng() % 2 ? shift : 0);
            FpMatrix mat(p, nB, nA);
            for (int w = 0; w < nB; ++w)
                for (int v = 0; v < nA; ++v)
                    if (tgt_deg[static_cast<size_t>(w)] ==
                        src_deg[static_cast<size_t>(v)] + shift)
                        mat.set(w, v, static_cast<Dim>(rng() % static_cast<unsigned>(p)));
            GradedLinearMap f(src_deg, tgt_deg, shift, mat);
            const int d = 1 + static_cast<int>(rng() % 3);
            ++result.checks;
            if (!gen_koszul_homology_check(f, d))
                result.failures.push_back(
                    "gen koszul p=" + std::to_string(p) + " trial " +
                    std::to_string(trial) + " d=" + std::to_string(d) +
                    ": homology does not match the kernel/cokernel prediction");
        }
    }
    return result;
}

SuiteResult verify_basic_identity() {
    SuiteResult result{"cor47", 0, {}};
    for (Dim p : {2, 3}) {
        for (int r = 1; r <= 3; ++r) {
            for (int j = 1; j <= r; ++j) {
                GradedDims v_low = basic_table(BasicSpace::V, p, r, j - 1);
                GradedDims w_low = basic_table(BasicSpace::W, p, r, j - 1);
                GradedDims c_tab = basic_table(BasicSpace::C, p, r, j);
                GradedDims k_tab = basic_table(BasicSpace::K, p, r, j);
                const int step_low = static_cast<int>(checked_pow(p, r - j + 1));
                const int step_high = static_cast<int>(checked_pow(p, r - j));
                for (int d = 1; d <= 4; ++d) {
                    GradedDims lhs, rhs;
                    for (int s = 0; s <= d; ++s) {
                        accumulate(lhs,
                                   convolve(power_dims(v_low, d - s, PowerFlavor::Sym),
                                            power_dims(w_low, s, PowerFlavor::Ext))
                                       .shifted(s * step_low));
                        accumulate(rhs,
                                   convolve(power_dims(c_tab, d - s, PowerFlavor::Sym),
                                            power_dims(k_tab, s, PowerFlavor::Ext))
                                       .shifted(s * step_high));
                    }
                    ++result.checks;
                    for (int n = 0; n <= 40; ++n) {
                        if (lhs.at(n) != rhs.at(n)) {
                            result.failures.push_back(
                                "dimension identity p=" + std::to_string(p) +
                                " r=" + std::to_string(r) + " j=" + std::to_string(j) +
                                " d=" + std::to_string(d) + " n=" + std::to_string(n) +
                                ": " + std::to_string(lhs.at(n)) +
                                " != " + std::to_string(rhs.at(n)));
                            break;
                        }
                    }
                }
            }
        }
    }
    return result;
}

SuiteResult verify_duality() {
    SuiteResult result{"duality", 0, {}};
    const std::pair<FunctorKind, FunctorKind> pairs[] = {
        {FunctorKind::Gamma, FunctorKind::Sym},
        {FunctorKind::Gamma, FunctorKind::Lambda},
        {FunctorKind::Lambda, FunctorKind::Sym},
        {FunctorKind::Gamma, FunctorKind::Gamma},
        {FunctorKind::Sym, FunctorKind::Sym},
        {FunctorKind::Lambda, FunctorKind::Lambda},
    };
    const Dim max_coh = 30;
    // Strict polynomial queries match their dual image coefficient by
    // coefficient: single atoms over the full supported-pair grid, plus
    // two-factor words engaging the Kunneth recursion.
    for (Dim p : {2, 3}) {
        std::vector<PExtQuery> queries;
        for (const auto& [src, tgt] : pairs)
            for (int t1 = 0; t1 <= 2; ++t1)
                for (int t2 = 0; t2 <= 2; ++t2)
                    for (Dim d1 = 1; d1 <= 3; ++d1)
                        for (Dim d2 = 1; d2 <= 3; ++d2)
                            queries.push_back(
                                {{{src, d1, t1}}, {{tgt, d2, t2}}});
        queries.push_back({{{FunctorKind::Gamma, 2, 1}, {FunctorKind::Gamma, 1, 0}},
                           {{FunctorKind::Sym, 2, 0}, {FunctorKind::Sym, 1, 1}}});
        queries.push_back({{{FunctorKind::Gamma, 2, 0}, {FunctorKind::Lambda, 1, 0}},
                           {{FunctorKind::Lambda, 1, 0}, {FunctorKind::Sym, 2, 0}}});
        queries.push_back({{{FunctorKind::Gamma, 4, 0}},
                           {{FunctorKind::Sym, 2, 0}, {FunctorKind::Lambda, 2, 0}}});
        for (const PExtQuery& q : queries) {
            PExtQuery dq = dualize(q);
            auto lhs = ext_word_P_by_coh(p, q.source, q.target, max_coh);
            auto rhs = ext_word_P_by_coh(p, dq.source, dq.target, max_coh);
            ++result.checks;
            if (lhs != rhs)
                result.failures.push_back(
                    "P duality p=" + std::to_string(p) + " query " +
                    render_functor_word(q.source) + " -> " +
                    render_functor_word(q.target) +
                    ": coefficients differ from the dual query");
        }
    }
    for (Dim p : {2, 3}) {
        for (int h = 0; h <= 2; ++h) {
            const Dim cap = checked_mul(3, checked_pow(p, h));
            for (const auto& [src, tgt] : pairs) {
                for (TwistSide side :
                     {TwistSide::TargetTwisted, TwistSide::SourceTwisted}) {
                    StableFamily fam{p, src, tgt, h, side};
                    StableFamily dual = dual_family(fam);
                    TriDegree caps{max_coh, cap, cap};
                    auto table =
                        coefficient_table(ext_pair_stable(fam, caps), max_coh, cap, cap);
                    auto dual_table = coefficient_table(ext_pair_stable(dual, caps),
                                                        max_coh, cap, cap);
                    ++result.checks;
                    bool ok = true;
                    for (size_t s = 0; s < table.size() && ok; ++s)
                        for (size_t i = 0; i < table[s].size() && ok; ++i)
                            for (size_t l = 0; l < table[s][i].size(); ++l)
                                if (table[s][i][l] != dual_table[s][l][i]) {
                                    result.failures.push_back(
                                        std::string("duality p=") + std::to_string(p) +
                                        " h=" + std::to_string(h) + " pair (" +
                                        kind_letter(src) + "," + kind_letter(tgt) +
                                        ") mismatch at (s,i,l)=(" + std::to_string(s) +
                                        "," + std::to_string(i) + "," +
                                        std::to_string(l) + ")");
                                    ok = false;
                                    break;
                                }
                }
            }
        }
    }
    return result;
}

SuiteResult verify_family_vs_assembly() {
    SuiteResult result{"family-vs-assembly", 0, {}};
    const std::pair<FunctorKind, FunctorKind> pairs[] = {
        {FunctorKind::Gamma, FunctorKind::Sym},
        {FunctorKind::Gamma, FunctorKind::Lambda},
        {FunctorKind::Gamma, FunctorKind::Gamma},
        {FunctorKind::Lambda, FunctorKind::Lambda},
    };
    const Dim p = 2;
    const Dim max_coh = 20;
    const Dim max_idx = 6;
    for (int N : {1, 2}) {
        for (int h = 0; h < N; ++h) {
            for (const auto& [src, tgt] : pairs) {
                FFamily fam = ext_F_family(p, N, src, tgt, h, max_coh, max_idx);
                HopfPresentation pres{fam.family, fam.generators,
                                      fam.primitively_generated};
                auto table = coefficient_table(pres, max_coh, max_idx, max_idx);
                for (Dim j = 0; j <= max_idx; ++j) {
                    for (Dim l = 0; l <= max_idx; ++l) {
                        FunctorAtom source{src, j, h};
                        FunctorAtom target{tgt, l, 0};
                        auto assembled = ext_F_by_coh(p, N, source, target, max_coh);
                        ++result.checks;
                        for (Dim s = 0; s <= max_coh; ++s) {
                            if (assembled[static_cast<size_t>(s)] !=
                                table[static_cast<size_t>(s)][static_cast<size_t>(j)]
                                     [static_cast<size_t>(l)]) {
                                result.failures.push_back(
                                    std::string("family vs assembly N=") +
                                    std::to_string(N) + " h=" + std::to_string(h) +
                                    " pair (" + kind_letter(src) + "," +
                                    kind_letter(tgt) + ") at (s,j,l)=(" +
                                    std::to_string(s) + "," + std::to_string(j) + "," +
                                    std::to_string(l) + ")");
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    return result;
}

std::vector<SuiteResult> verify_all() {
    return {verify_koszul(),        verify_derham(),
            verify_genkoszul(),     verify_basic_identity(),
            verify_duality(),       verify_family_vs_assembly()};
}

SuiteResult run_suite(const std::string& name) {
    if (name == "koszul") return verify_koszul();
    if (name == "derham") return verify_derham();
    if (name == "genkoszul") return verify_genkoszul();
    if (name == "cor47") return verify_basic_identity();
    if (name == "duality") return verify_duality();
    if (name == "family-vs-assembly") return verify_family_vs_assembly();
    throw InvalidParams("unknown verification suite: " + name);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "koszul", "derham", "genkoszul", "cor47", "duality",
        "family-vs-assembly"};
    return names;
}

} // namespace extcalc
