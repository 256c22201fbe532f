#include <doctest.h>

#include <cstdint>
#include <map>
#include <vector>

#include "extcalc/errors.hpp"
#include "extcalc/graded.hpp"
#include "extcalc/presentation.hpp"

using namespace extcalc;

namespace {

// Independent monomial counter: expands the graded space into explicit
// one-dimensional slots and enumerates exponent assignments directly.
void enumerate_monomials(const std::vector<int>& slot_degrees, size_t idx,
                         int left, int degree, bool squarefree,
                         std::map<int, Dim>& out) {
    if (idx == slot_degrees.size()) {
        if (left == 0) ++out[degree];
        return;
    }
    int emax = squarefree ? (left < 1 ? left : 1) : left;
    for (int e = 0; e <= emax; ++e)
        enumerate_monomials(slot_degrees, idx + 1, left - e,
                            degree + e * slot_degrees[idx], squarefree, out);
}

std::map<int, Dim> brute_power_dims(const GradedDims& base, int star,
                                    bool squarefree) {
    std::vector<int> slots;
    for (const auto& [deg, count] : base.entries())
        for (Dim c = 0; c < count; ++c) slots.push_back(deg);
    std::map<int, Dim> out;
    enumerate_monomials(slots, 0, star, 0, squarefree, out);
    return out;
}

std::map<int, Dim> to_map(const GradedDims& t) {
    return {t.entries().begin(), t.entries().end()};
}

// Product-formula Gaussian binomial, an oracle independent of the q-Pascal
// recurrence used by the library.
Dim gauss_product(int n, int k, Dim q) {
    if (k < 0 || k > n) return 0;
    auto power = [](Dim b, int e) {
        Dim out = 1;
        for (int i = 0; i < e; ++i) out *= b;
        return out;
    };
    Dim num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= power(q, n - k + i) - 1;
        den *= power(q, i) - 1;
    }
    return num / den;
}

Dim pascal_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<Dim> row(1, 1);
    for (int i = 1; i <= n; ++i) {
        std::vector<Dim> next(static_cast<size_t>(i) + 1, 0);
        for (int j = 0; j <= i; ++j) {
            Dim above = (j < i) ? row[static_cast<size_t>(j)] : 0;
            Dim left = (j > 0) ? row[static_cast<size_t>(j - 1)] : 0;
            next[static_cast<size_t>(j)] = left + above;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

} // namespace

TEST_CASE("graded table basics") {
    GradedDims t{{0, 1}, {2, 3}};
    CHECK(t.at(0) == 1);
    CHECK(t.at(2) == 3);
    CHECK(t.at(1) == 0);
    CHECK(t.total() == 4);
    CHECK(t.max_degree() == 2);
    GradedDims s = t.shifted(5);
    CHECK(s.at(5) == 1);
    CHECK(s.at(7) == 3);
    CHECK(s.at(0) == 0);
    CHECK(GradedDims{}.max_degree() == -1);
    CHECK(GradedDims{}.total() == 0);
    GradedDims z;
    z.add(4, 0);
    CHECK(z == GradedDims{});
    CHECK_THROWS_AS(z.add(-1, 1), InvalidParams);
}

TEST_CASE("convolution") {
    GradedDims a{{0, 1}, {2, 1}};
    GradedDims expected{{0, 1}, {2, 2}, {4, 1}};
    CHECK(convolve(a, a) == expected);
    CHECK(convolve(a, GradedDims{}) == GradedDims{});
    GradedDims unit{{0, 1}};
    CHECK(convolve(a, unit) == a);
}

TEST_CASE("truncated dense convolution") {
    std::vector<Dim> a{1, 0, 1};
    std::vector<Dim> b{1, 1};
    std::vector<Dim> expected{1, 1, 1, 1};
    CHECK(convolve_trunc(a, b, 3) == expected);
    std::vector<Dim> cut{1, 1};
    CHECK(convolve_trunc(a, b, 1) == cut);
    CHECK(convolve_trunc({}, b, 2) == std::vector<Dim>{0, 0, 0});
}

TEST_CASE("power dims on a two-slot space") {
    GradedDims base{{0, 1}, {2, 1}};
    CHECK(power_dims(base, 2, PowerFlavor::Sym) ==
          GradedDims{{0, 1}, {2, 1}, {4, 1}});
    CHECK(power_dims(base, 2, PowerFlavor::Ext) == GradedDims{{2, 1}});
    CHECK(power_dims(base, 2, PowerFlavor::Gamma) ==
          GradedDims{{0, 1}, {2, 1}, {4, 1}});
    CHECK(power_dims(base, 0, PowerFlavor::Sym) == GradedDims{{0, 1}});
    CHECK(power_dims(GradedDims{}, 0, PowerFlavor::Ext) == GradedDims{{0, 1}});
    CHECK(power_dims(GradedDims{}, 2, PowerFlavor::Sym) == GradedDims{});
    CHECK_THROWS_AS(power_dims(base, -1, PowerFlavor::Sym), InvalidParams);
}

TEST_CASE("power dims against the brute-force monomial count") {
    std::vector<GradedDims> bases = {
        GradedDims{{0, 2}, {1, 1}, {3, 1}},
        GradedDims{{1, 1}, {2, 2}},
        GradedDims{{0, 1}, {4, 3}},
    };
    for (const GradedDims& base : bases) {
        for (int star = 0; star <= 3; ++star) {
            CHECK(to_map(power_dims(base, star, PowerFlavor::Sym)) ==
                  brute_power_dims(base, star, false));
            CHECK(to_map(power_dims(base, star, PowerFlavor::Gamma)) ==
                  brute_power_dims(base, star, false));
            CHECK(to_map(power_dims(base, star, PowerFlavor::Ext)) ==
                  brute_power_dims(base, star, true));
        }
    }
}

TEST_CASE("gaussian binomials") {
    CHECK(gauss_binom(2, 1, 2) == 3);
    CHECK(gauss_binom(4, 2, 2) == 35);
    CHECK(gauss_binom(4, 2, 3) == 130);
    CHECK(gauss_binom(3, 5, 2) == 0);
    CHECK(gauss_binom(3, -1, 2) == 0);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(gauss_binom(n, k, 1) == pascal_binomial(n, k));
            for (Dim q : {Dim(2), Dim(3)})
                CHECK(gauss_binom(n, k, q) == gauss_product(n, k, q));
        }
    CHECK_THROWS_AS(gauss_binom(-1, 0, 2), InvalidParams);
}

TEST_CASE("q-weighted dimension sum") {
    // [2 0]_2 * dims[2] + [2 1]_2 * dims[1] + [2 2]_2 * dims[0]
    //   = 1*2 + 3*1 + 1*0 = 5
    CHECK(a_dim({0, 1, 2}, 2, 2) == 5);
    CHECK(a_dim({7}, 2, 0) == 7);
    CHECK(a_dim({1}, 2, 1) == 1);
    CHECK(a_dim({}, 3, 4) == 0);
}

TEST_CASE("digitwise dominance matches binomials mod p") {
    for (Dim p : {Dim(2), Dim(3), Dim(5)})
        for (int n = 0; n <= 12; ++n)
            for (int m = 0; m <= n; ++m)
                CHECK(splitting_criterion(p, n, m) ==
                      (pascal_binomial(n, m) % p != 0));
    CHECK(splitting_criterion(2, 2, 1) == false);
    CHECK(splitting_criterion(2, 3, 1) == true);
    CHECK_THROWS_AS(splitting_criterion(4, 1, 1), InvalidParams);
}

TEST_CASE("generator word rendering") {
    CHECK(render_word({}) == "1");
    GeneratorToken e6{TokenKind::EWord, 6, 2, 0};
    CHECK(render_word({e6}) == "e_2(6)");
    GeneratorToken e_free{TokenKind::EWord, 6, 0, 0};
    CHECK(render_word({e_free}) == "e(6)");
    GeneratorToken phi{TokenKind::Phi, 0, 1, 2};
    CHECK(render_word({phi}) == "phi_1^{(2)}");
    GeneratorToken phis{TokenKind::PhiSharp, 0, 1, 0};
    CHECK(render_word({phis}) == "phi_1^{#}");
    GeneratorToken kzs{TokenKind::KzSharp, 0, 2, 1};
    CHECK(render_word({kzs}) == "kz_2^{#(1)}");
    CHECK(render_word({e6, phis}) == "e_2(6)*phi_1^{#}");
    CHECK(render_word_latex({e6, phis}) == "e_{2}(6) \\varphi_{1}^{\\#}");
    CHECK(render_word_latex({}) == "1");
}

TEST_CASE("presentation coefficient counting") {
    GeneratorSpec g1{{GeneratorToken{TokenKind::EWord, 1, 0, 0}},
                     TriDegree{1, 1, 1}};
    GeneratorSpec g2{{GeneratorToken{TokenKind::EWord, 2, 0, 0}},
                     TriDegree{2, 1, 1}};
    HopfPresentation poly{AlgebraFamily::Polynomial, {g1, g2}, true};
    HopfPresentation ext{AlgebraFamily::Exterior, {g1, g2}, true};

    // Degree-zero monomial: the unit.
    CHECK(presentation_coefficient(poly, TriDegree{0, 0, 0}) == 1);
    CHECK(presentation_coefficient(ext, TriDegree{0, 0, 0}) == 1);
    // Length-two monomials: g1^2, g1*g2, g2^2 versus just g1*g2.
    CHECK(presentation_coefficient(poly, TriDegree{2, 2, 2}) == 1);
    CHECK(presentation_coefficient(poly, TriDegree{3, 2, 2}) == 1);
    CHECK(presentation_coefficient(poly, TriDegree{4, 2, 2}) == 1);
    CHECK(presentation_coefficient(ext, TriDegree{2, 2, 2}) == 0);
    CHECK(presentation_coefficient(ext, TriDegree{3, 2, 2}) == 1);
    CHECK(presentation_coefficient(ext, TriDegree{4, 2, 2}) == 0);
    // Budget mismatch in the power indices kills the count.
    CHECK(presentation_coefficient(poly, TriDegree{1, 1, 2}) == 0);

    // The three extraction APIs agree.
    auto by_coh = coefficients_by_coh(poly, 4, 2, 2);
    CHECK(by_coh == std::vector<Dim>{0, 0, 1, 1, 1});
    auto table = coefficient_table(poly, 4, 2, 2);
    for (Dim s = 0; s <= 4; ++s)
        for (Dim i = 0; i <= 2; ++i)
            for (Dim l = 0; l <= 2; ++l)
                CHECK(table[static_cast<size_t>(s)][static_cast<size_t>(i)]
                           [static_cast<size_t>(l)] ==
                      presentation_coefficient(poly, TriDegree{s, i, l}));

    GeneratorSpec bad{{}, TriDegree{1, 0, 1}};
    HopfPresentation invalid{AlgebraFamily::Polynomial, {bad}, true};
    CHECK_THROWS_AS(presentation_coefficient(invalid, TriDegree{1, 1, 1}),
                    InvalidParams);

    std::vector<GeneratorSpec> gens{g2, g1};
    sort_generators(gens);
    CHECK(gens[0].degree == TriDegree{1, 1, 1});
    CHECK(gens[1].degree == TriDegree{2, 1, 1});
    CHECK(family_name(AlgebraFamily::Polynomial) == "polynomial");
    CHECK(family_name(AlgebraFamily::Exterior) == "exterior");
    CHECK(family_name(AlgebraFamily::DividedPower) == "divided_power");
}

TEST_CASE("checked arithmetic") {
    const Dim big = INT64_MAX;
    CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 5) == -20);
    CHECK(checked_pow(2, 62) == (Dim(1) << 62));
    CHECK_THROWS_AS(checked_pow(2, 63), OverflowError);
    CHECK_THROWS_AS(checked_pow(2, -1), InvalidParams);
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(31));
    CHECK(!is_prime(1));
    CHECK(!is_prime(4));
    CHECK(!is_prime(9));
    CHECK_THROWS_AS(require_prime(6), InvalidParams);
}
