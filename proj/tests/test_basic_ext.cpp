#include <doctest.h>

#include "extcalc/basic_ext.hpp"
#include "extcalc/errors.hpp"

using namespace extcalc;

TEST_CASE("frozen basic tables") {
    CHECK(basic_table(BasicSpace::V, 2, 2, 1) == GradedDims{{0, 1}, {4, 1}});
    CHECK(basic_table(BasicSpace::W, 2, 2, 1) == GradedDims{{1, 1}, {5, 1}});
    CHECK(basic_table(BasicSpace::K, 2, 2, 1) == GradedDims{{5, 1}});
    CHECK(basic_table(BasicSpace::C, 2, 2, 1) == GradedDims{{0, 1}});
    CHECK(basic_table(BasicSpace::Vtilde, 2, 1, 1) == GradedDims{{0, 1}, {2, 1}});
    CHECK(basic_table(BasicSpace::V, 3, 2, 2) ==
          basic_table(BasicSpace::W, 3, 2, 2).shifted(0));
    CHECK(basic_table(BasicSpace::V, 2, 3, 0) == GradedDims{{0, 1}});
}

TEST_CASE("slot counts, duplicates and shifts") {
    for (Dim p : {Dim(2), Dim(3)}) {
        for (int r = 0; r <= 4; ++r) {
            for (int j = 0; j <= r; ++j) {
                const Dim pj = checked_pow(p, j);
                const int shift = static_cast<int>(checked_pow(p, r - j)) - 1;
                GradedDims v = basic_table(BasicSpace::V, p, r, j);
                GradedDims w = basic_table(BasicSpace::W, p, r, j);
                CHECK(v.total() == pj);
                CHECK(w.total() == pj);
                CHECK(basic_table(BasicSpace::U, p, r, j) == v);
                CHECK(w == v.shifted(shift));
                CHECK(basic_table(BasicSpace::Vtilde, p, r, j) ==
                      v.shifted(2 * shift));
                // Every slot is one-dimensional, spaced by 2*p^(r-j).
                for (const auto& [n, dim] : v.entries()) {
                    CHECK(dim == 1);
                    CHECK(n % (2 * (shift + 1)) == 0);
                }
                if (j >= 1) {
                    CHECK(basic_table(BasicSpace::K, p, r, j).total() ==
                          checked_pow(p, j - 1));
                    CHECK(basic_table(BasicSpace::C, p, r, j) ==
                          basic_table(BasicSpace::V, p, r, j - 1));
                }
            }
        }
    }
}

TEST_CASE("W degree parity") {
    for (Dim p : {Dim(2), Dim(3)}) {
        for (int r = 0; r <= 4; ++r) {
            for (int j = 0; j <= r; ++j) {
                GradedDims w = basic_table(BasicSpace::W, p, r, j);
                for (const auto& [n, dim] : w.entries()) {
                    (void)dim;
                    if (p == 2 && j < r)
                        CHECK(n % 2 == 1);
                    else
                        CHECK(n % 2 == 0);
                }
            }
        }
    }
}

TEST_CASE("four-term exactness of the connecting map") {
    // 0 -> K -> W -> V -> C -> 0 with the middle map raising degrees by
    // p^(r-j) + 1: dimensions must cancel degree by degree.
    for (Dim p : {Dim(2), Dim(3)}) {
        for (int r = 1; r <= 4; ++r) {
            for (int j = 1; j <= r; ++j) {
                GradedDims k = basic_table(BasicSpace::K, p, r, j);
                GradedDims w = basic_table(BasicSpace::W, p, r, j);
                GradedDims v = basic_table(BasicSpace::V, p, r, j);
                GradedDims c = basic_table(BasicSpace::C, p, r, j);
                const int delta = static_cast<int>(checked_pow(p, r - j)) + 1;
                const int top = w.max_degree() > k.max_degree() ? w.max_degree()
                                                                : k.max_degree();
                for (int n = 0; n <= top; ++n)
                    CHECK(k.at(n) - w.at(n) + v.at(n + delta) - c.at(n + delta) ==
                          0);
            }
        }
    }
}

TEST_CASE("basis word names") {
    ENameResult a = e_name(2, 2, 3);
    CHECK(a.name == "e_1^{1(1)}*e_2^{1}");
    CHECK(a.coh_degree == 6);
    ENameResult b = e_name(3, 1, 2);
    CHECK(b.name == "e_1^{2}");
    CHECK(b.coh_degree == 4);
    CHECK(e_name(2, 3, 0).name == "1");
    CHECK(e_name(2, 3, 0).coh_degree == 0);
    // Distinct slots get distinct names.
    for (Dim m = 0; m < 8; ++m)
        for (Dim m2 = m + 1; m2 < 8; ++m2)
            CHECK(e_name(2, 3, m).name != e_name(2, 3, m2).name);
}

TEST_CASE("basic table parameter validation") {
    CHECK(parse_basic_space("Vtilde") == BasicSpace::Vtilde);
    CHECK(parse_basic_space("K") == BasicSpace::K);
    CHECK_THROWS_AS(parse_basic_space("X"), InvalidParams);
    CHECK_THROWS_AS(basic_table(BasicSpace::V, 4, 1, 1), InvalidParams);
    CHECK_THROWS_AS(basic_table(BasicSpace::V, 2, 1, 2), InvalidParams);
    CHECK_THROWS_AS(basic_table(BasicSpace::K, 2, 2, 0), InvalidParams);
    CHECK_THROWS_AS(e_name(2, 1, 5), InvalidParams);
}
