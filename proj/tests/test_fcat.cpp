#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "extcalc/errors.hpp"
#include "extcalc/fcat.hpp"

using namespace extcalc;

namespace {

FunctorAtom atom(FunctorKind kind, Dim star, int twist = 0) {
    return FunctorAtom{kind, star, twist};
}

/// Reference enumeration of index sequences by exhaustive search: every
/// assignment of entries to the finitely many positions whose weight fits,
/// filtered by the two power-sum constraints.
std::vector<PrSequence> brute_sequences(Dim p, int N, int h, Dim j, Dim l) {
    std::vector<Dim> js_weight; // contribution of js[s] to the target power
    for (int s = 0;; ++s) {
        Dim w = checked_pow(p, s * N + h);
        if (w > l) break;
        js_weight.push_back(w);
    }
    std::vector<Dim> ls_weight; // contribution of ls[t-1] to the source power
    for (int t = 1;; ++t) {
        Dim w = checked_pow(p, t * N - h);
        if (w > j) break;
        ls_weight.push_back(w);
    }
    std::vector<PrSequence> out;
    std::vector<Dim> js(js_weight.size(), 0), ls(ls_weight.size(), 0);
    std::function<void(size_t, Dim, Dim)> fill = [&](size_t pos, Dim src_left,
                                                     Dim tgt_left) {
        if (pos == js.size() + ls.size()) {
            if (src_left != 0 || tgt_left != 0) return;
            PrSequence seq{js, ls};
            while (!seq.js.empty() && seq.js.back() == 0) seq.js.pop_back();
            while (!seq.ls.empty() && seq.ls.back() == 0) seq.ls.pop_back();
            out.push_back(std::move(seq));
            return;
        }
        if (pos < js.size()) {
            Dim w = js_weight[pos];
            for (Dim c = 0; c <= src_left && c * w <= tgt_left; ++c) {
                js[pos] = c;
                fill(pos + 1, src_left - c, tgt_left - c * w);
            }
            js[pos] = 0;
        } else {
            Dim w = ls_weight[pos - js.size()];
            for (Dim c = 0; c <= tgt_left && c * w <= src_left; ++c) {
                ls[pos - js.size()] = c;
                fill(pos + 1, src_left - c * w, tgt_left - c);
            }
            ls[pos - js.size()] = 0;
        }
    };
    fill(0, j, l);
    return out;
}

void sort_sequences(std::vector<PrSequence>& seqs) {
    std::sort(seqs.begin(), seqs.end(),
              [](const PrSequence& a, const PrSequence& b) {
                  if (a.js != b.js) return a.js < b.js;
                  return a.ls < b.ls;
              });
}

} // namespace

TEST_CASE("index sequences at small powers") {
    CHECK(pr_enumerate(2, 1, 0, 1, 1) ==
          std::vector<PrSequence>{PrSequence{{1}, {}}});
    CHECK(pr_enumerate(2, 1, 0, 2, 1) ==
          std::vector<PrSequence>{PrSequence{{}, {1}}});
    CHECK(pr_enumerate(2, 2, 1, 2, 1) ==
          std::vector<PrSequence>{PrSequence{{}, {1}}});
    // The unit: both powers zero admit exactly the empty sequence.
    CHECK(pr_enumerate(2, 1, 0, 0, 0) ==
          std::vector<PrSequence>{PrSequence{{}, {}}});
}

TEST_CASE("index sequences match exhaustive search") {
    for (int N : {1, 2}) {
        for (int h = 0; h < N; ++h) {
            for (Dim j = 0; j <= 5; ++j) {
                for (Dim l = 0; l <= 5; ++l) {
                    std::vector<PrSequence> got = pr_enumerate(2, N, h, j, l);
                    for (const PrSequence& seq : got) {
                        Dim sj = 0, sl = 0;
                        for (size_t s = 0; s < seq.js.size(); ++s) {
                            sj += seq.js[s];
                            sl += seq.js[s] *
                                  checked_pow(2, static_cast<int>(s) * N + h);
                        }
                        for (size_t t = 0; t < seq.ls.size(); ++t) {
                            sj += seq.ls[t] *
                                  checked_pow(2, static_cast<int>(t + 1) * N - h);
                            sl += seq.ls[t];
                        }
                        CHECK(sj == j);
                        CHECK(sl == l);
                    }
                    std::vector<PrSequence> want = brute_sequences(2, N, h, j, l);
                    sort_sequences(got);
                    sort_sequences(want);
                    CHECK(got == want);
                }
            }
        }
    }
    std::vector<PrSequence> got3 = pr_enumerate(3, 1, 0, 4, 4);
    std::vector<PrSequence> want3 = brute_sequences(3, 1, 0, 4, 4);
    sort_sequences(got3);
    sort_sequences(want3);
    CHECK(got3 == want3);
}

TEST_CASE("degree congruence gate") {
    // Modulus q - 1 = 1: everything passes.
    for (Dim a = 0; a <= 4; ++a)
        for (Dim b = 0; b <= 4; ++b) CHECK(congruence_gate(2, 1, a, b));
    CHECK(congruence_gate(2, 2, 0, 3));
    CHECK(congruence_gate(2, 2, 4, 1));
    CHECK(!congruence_gate(2, 2, 1, 3));
    CHECK(!congruence_gate(3, 1, 1, 2));
    CHECK(congruence_gate(3, 1, 1, 3));
    // Any admissible index sequence forces the congruence.
    for (int h = 0; h < 2; ++h)
        for (Dim j = 1; j <= 6; ++j)
            for (Dim l = 1; l <= 6; ++l)
                if (!pr_enumerate(2, 2, h, j, l).empty())
                    CHECK(congruence_gate(2, 2, j * checked_pow(2, h), l));
}

TEST_CASE("identity functor self-extensions") {
    for (Dim p : {Dim(2), Dim(3)}) {
        for (int N : {1, 2}) {
            std::vector<Dim> dims =
                ext_F_by_coh(p, N, atom(FunctorKind::Id, 1),
                             atom(FunctorKind::Id, 1), 20);
            REQUIRE(dims.size() == 21);
            for (Dim s = 0; s <= 20; ++s)
                CHECK(dims[static_cast<size_t>(s)] == (s % 2 == 0 ? 1 : 0));
        }
    }
    CHECK(ext_F(2, 1, atom(FunctorKind::Id, 1), atom(FunctorKind::Id, 1), 8) == 1);
    CHECK(ext_F(2, 1, atom(FunctorKind::Id, 1), atom(FunctorKind::Id, 1), 9) == 0);
}

TEST_CASE("divided square against the first symmetric power") {
    std::vector<Dim> dims = ext_F_by_coh(2, 1, atom(FunctorKind::Gamma, 2),
                                         atom(FunctorKind::Sym, 1), 24);
    for (Dim s = 0; s <= 24; ++s)
        CHECK(dims[static_cast<size_t>(s)] == (s % 4 == 0 ? 1 : 0));
}

TEST_CASE("frozen nine-generator family") {
    FFamily fam = ext_F_family(2, 1, FunctorKind::Gamma, FunctorKind::Sym, 0,
                               4, 4);
    CHECK(fam.family == AlgebraFamily::Polynomial);
    CHECK(fam.primitively_generated);
    std::vector<TriDegree> degrees;
    for (const GeneratorSpec& gen : fam.generators)
        degrees.push_back(gen.degree);
    std::vector<TriDegree> expected = {
        {0, 1, 1}, {2, 1, 1}, {4, 1, 1}, {0, 1, 2}, {4, 1, 2},
        {0, 1, 4}, {0, 2, 1}, {4, 2, 1}, {0, 4, 1},
    };
    std::sort(degrees.begin(), degrees.end());
    std::sort(expected.begin(), expected.end());
    CHECK(degrees == expected);
}

TEST_CASE("family presentations match assembled dimensions") {
    const std::pair<FunctorKind, FunctorKind> pairs[] = {
        {FunctorKind::Gamma, FunctorKind::Sym},
        {FunctorKind::Gamma, FunctorKind::Lambda},
        {FunctorKind::Gamma, FunctorKind::Gamma},
        {FunctorKind::Lambda, FunctorKind::Lambda},
    };
    for (int N : {1, 2}) {
        for (int h = 0; h < N; ++h) {
            for (const auto& [src, tgt] : pairs) {
                FFamily fam = ext_F_family(2, N, src, tgt, h, 8, 3);
                HopfPresentation pres{fam.family, fam.generators,
                                      fam.primitively_generated};
                auto table = coefficient_table(pres, 8, 3, 3);
                for (Dim j = 1; j <= 3; ++j) {
                    for (Dim l = 1; l <= 3; ++l) {
                        std::vector<Dim> dims =
                            ext_F_by_coh(2, N, atom(src, j, h), atom(tgt, l), 8);
                        for (Dim s = 0; s <= 8; ++s)
                            CHECK(table[static_cast<size_t>(s)]
                                       [static_cast<size_t>(j)]
                                       [static_cast<size_t>(l)] ==
                                  dims[static_cast<size_t>(s)]);
                    }
                }
            }
        }
    }
}

TEST_CASE("untwisted results are independent of the field extension") {
    const std::pair<FunctorKind, FunctorKind> pairs[] = {
        {FunctorKind::Gamma, FunctorKind::Sym},
        {FunctorKind::Gamma, FunctorKind::Lambda},
        {FunctorKind::Lambda, FunctorKind::Sym},
        {FunctorKind::Gamma, FunctorKind::Gamma},
        {FunctorKind::Sym, FunctorKind::Sym},
        {FunctorKind::Lambda, FunctorKind::Lambda},
    };
    for (const auto& [src, tgt] : pairs) {
        for (Dim j = 1; j <= 3; ++j) {
            for (Dim l = 1; l <= 3; ++l) {
                std::vector<Dim> base =
                    ext_F_by_coh(2, 2, atom(src, j), atom(tgt, l), 10);
                for (int N : {3, 4})
                    CHECK(ext_F_by_coh(2, N, atom(src, j), atom(tgt, l), 10) ==
                          base);
            }
        }
    }
}

TEST_CASE("functor category validation") {
    CHECK(is_supported_family_F(FunctorKind::Gamma, FunctorKind::Sym));
    CHECK(is_supported_family_F(FunctorKind::Gamma, FunctorKind::Lambda));
    CHECK(is_supported_family_F(FunctorKind::Gamma, FunctorKind::Gamma));
    CHECK(is_supported_family_F(FunctorKind::Lambda, FunctorKind::Lambda));
    CHECK(!is_supported_family_F(FunctorKind::Lambda, FunctorKind::Sym));
    CHECK(!is_supported_family_F(FunctorKind::Sym, FunctorKind::Sym));
    CHECK(!is_supported_family_F(FunctorKind::Sym, FunctorKind::Gamma));
    CHECK_THROWS_AS(ext_F_family(2, 1, FunctorKind::Lambda, FunctorKind::Sym,
                                 0, 4, 4),
                    UnsupportedPair);
    CHECK_THROWS_AS(ext_F_family(2, 1, FunctorKind::Gamma, FunctorKind::Sym,
                                 1, 4, 4),
                    InvalidParams); // twist must stay below N
    CHECK_THROWS_AS(ext_F_family(4, 1, FunctorKind::Gamma, FunctorKind::Sym,
                                 0, 4, 4),
                    InvalidParams);
    CHECK_THROWS_AS(ext_F_by_coh(2, 1, atom(FunctorKind::Gamma, 1, 1),
                                 atom(FunctorKind::Sym, 1), 4),
                    InvalidParams);
    CHECK_THROWS_AS(ext_F_by_coh(2, 1, atom(FunctorKind::Gamma, 1),
                                 atom(FunctorKind::Sym, 1, 1), 4),
                    InvalidParams);
    CHECK_THROWS_AS(ext_F_by_coh(2, 1, atom(FunctorKind::Sym, 1),
                                 atom(FunctorKind::Gamma, 2), 4),
                    UnsupportedPair);
    CHECK_THROWS_AS(pr_enumerate(2, 1, 1, 1, 1), InvalidParams);
    CHECK_THROWS_AS(pr_enumerate(2, 0, 0, 1, 1), InvalidParams);
}
