// Acceptance harness: ten end-to-end criteria, one pass/fail line each.
// Criteria with a time budget fail when they run over it.  Exit code is 0
// only when every criterion passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "extcalc/basic_ext.hpp"
#include "extcalc/complexes.hpp"
#include "extcalc/fcat.hpp"
#include "extcalc/pcalc.hpp"
#include "extcalc/stable.hpp"
#include "extcalc/verify.hpp"

using namespace extcalc;

namespace {

const Dim kPrimes[] = {2, 3};

std::string describe(const char* what, Dim p, int r, int j) {
    std::ostringstream out;
    out << what << " at p=" << p << " r=" << r << " j=" << j;
    return out.str();
}

std::string check_basic_tables() {
    for (Dim p : kPrimes) {
        for (int r = 0; r <= 4; ++r) {
            for (int j = 0; j <= r; ++j) {
                const Dim pj = checked_pow(p, j);
                const int gap = static_cast<int>(checked_pow(p, r - j));
                GradedDims v = basic_table(BasicSpace::V, p, r, j);
                if (v.total() != pj) return describe("V total", p, r, j);
                Dim m = 0;
                for (const auto& [deg, dim] : v.entries()) {
                    if (dim != 1 || deg != 2 * gap * m)
                        return describe("V slot layout", p, r, j);
                    ++m;
                }
                if (basic_table(BasicSpace::U, p, r, j) != v)
                    return describe("U = V", p, r, j);
                GradedDims w = basic_table(BasicSpace::W, p, r, j);
                if (w != v.shifted(gap - 1)) return describe("W shift", p, r, j);
                const int want_parity = (p == 2 && j < r) ? 1 : 0;
                for (const auto& [deg, dim] : w.entries())
                    if (deg % 2 != want_parity)
                        return describe("W parity", p, r, j);
                if (basic_table(BasicSpace::Vtilde, p, r, j) !=
                    v.shifted(2 * (gap - 1)))
                    return describe("V-tilde shift", p, r, j);
                if (j >= 1) {
                    GradedDims w_down = basic_table(BasicSpace::W, p, r, j - 1);
                    const int step =
                        static_cast<int>(checked_pow(p, r - j + 1)) - gap;
                    if (basic_table(BasicSpace::K, p, r, j) !=
                        w_down.shifted(step))
                        return describe("K shift", p, r, j);
                    if (basic_table(BasicSpace::C, p, r, j) !=
                        basic_table(BasicSpace::V, p, r, j - 1))
                        return describe("C table", p, r, j);
                }
            }
        }
    }
    if (basic_table(BasicSpace::V, 2, 2, 1) != GradedDims{{0, 1}, {4, 1}})
        return "frozen V(2,2,1)";
    if (basic_table(BasicSpace::W, 2, 2, 1) != GradedDims{{1, 1}, {5, 1}})
        return "frozen W(2,2,1)";
    if (basic_table(BasicSpace::K, 2, 2, 1) != GradedDims{{5, 1}})
        return "frozen K(2,2,1)";
    if (basic_table(BasicSpace::C, 2, 2, 1) != GradedDims{{0, 1}})
        return "frozen C(2,2,1)";
    if (basic_table(BasicSpace::Vtilde, 2, 1, 1) != GradedDims{{0, 1}, {2, 1}})
        return "frozen V-tilde(2,1,1)";
    return "";
}

std::string check_pair_power_tables() {
    struct Row {
        FunctorKind kind;
        BasicSpace space;
        PowerFlavor flavor;
    };
    const Row rows[] = {
        {FunctorKind::Sym, BasicSpace::V, PowerFlavor::Sym},
        {FunctorKind::Lambda, BasicSpace::W, PowerFlavor::Ext},
        {FunctorKind::Gamma, BasicSpace::Vtilde, PowerFlavor::Gamma},
    };
    for (Dim p : kPrimes) {
        for (int r = 0; r <= 3; ++r) {
            for (int j = 0; j <= r; ++j) {
                const Dim scale = checked_pow(p, r - j);
                for (const Row& row : rows) {
                    HopfPresentation pres =
                        ext_pair_P(p, FunctorKind::Gamma, r, row.kind, j);
                    for (Dim d = 1; d <= 4; ++d) {
                        GradedDims expected = power_dims(
                            basic_table(row.space, p, r, j), d, row.flavor);
                        const Dim max_coh = expected.max_degree() + 2;
                        std::vector<Dim> got = coefficients_by_coh(
                            pres, max_coh, d, checked_mul(d, scale));
                        for (Dim s = 0; s <= max_coh; ++s)
                            if (got[static_cast<size_t>(s)] !=
                                expected.at(static_cast<int>(s)))
                                return describe("power table mismatch", p, r,
                                                j) +
                                       " d=" + std::to_string(d) +
                                       " s=" + std::to_string(s);
                    }
                }
            }
        }
    }
    return "";
}

std::string check_identity_extensions() {
    for (Dim p : kPrimes) {
        FunctorAtom id{FunctorKind::Id, 1, 0};
        std::vector<Dim> dims = ext_F_by_coh(p, 1, id, id, 30);
        for (Dim s = 0; s <= 30; ++s) {
            Dim want = s % 2 == 0 ? 1 : 0;
            if (dims[static_cast<size_t>(s)] != want)
                return "p=" + std::to_string(p) + " s=" + std::to_string(s) +
                       " got " + std::to_string(dims[static_cast<size_t>(s)]);
        }
    }
    return "";
}

std::string check_split_scalars() {
    for (Dim p : kPrimes) {
        for (int n = 0; n <= 8; ++n) {
            for (int m = 0; m <= n; ++m) {
                SplitScalarReport report = sym_split_scalar_check(p, n, m);
                if (!report.passed() ||
                    (report.scalar != 0) != splitting_criterion(p, n, m))
                    return "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                           " m=" + std::to_string(m);
            }
        }
    }
    return "";
}

std::string check_bounds() {
    if (strong_m(2, 5) != 2) return "strong_m(2,5)";
    if (vanish_h(2, 6, 3) != 4) return "vanish_h(2,6,3)";
    if (gl_n_bound(2, 3) != 10) return "gl_n_bound(2,3)";
    if (weak_q(3, 1, 1) != 3) return "weak_q(3,1,1)";
    // Monotonicity over a 50-point grid (2 primes x 5 degrees x 5 powers).
    for (Dim p : kPrimes) {
        for (Dim s = 0; s <= 4; ++s) {
            for (Dim d = 1; d <= 5; ++d) {
                std::string at = " at p=" + std::to_string(p) +
                                 " s=" + std::to_string(s) +
                                 " d=" + std::to_string(d);
                if (vanish_h(p, s + 1, d) < vanish_h(p, s, d) ||
                    vanish_h(p, s, d + 1) < vanish_h(p, s, d))
                    return "vanish_h not monotone" + at;
                if (weak_m0(p, s + 1, d) < weak_m0(p, s, d) ||
                    weak_m0(p, s, d + 1) < weak_m0(p, s, d))
                    return "weak_m0 not monotone" + at;
                if (weak_q(p, s + 1, d) < weak_q(p, s, d) ||
                    weak_q(p, s, d + 1) < weak_q(p, s, d))
                    return "weak_q not monotone" + at;
                if (strong_m(p, s + 1) < strong_m(p, s))
                    return "strong_m not monotone" + at;
                if (gl_n_bound(s + 1, d) <= gl_n_bound(s, d) ||
                    gl_n_bound(s, d + 1) <= gl_n_bound(s, d))
                    return "gl_n_bound not increasing" + at;
            }
        }
    }
    return "";
}

std::string from_suite(SuiteResult (*fn)()) {
    SuiteResult result = fn();
    if (result.passed()) return "";
    std::string detail = result.failures.front();
    if (result.failures.size() > 1)
        detail += " (+" + std::to_string(result.failures.size() - 1) +
                  " more failures)";
    return detail;
}

std::string check_koszul_and_derham() {
    std::string koszul = from_suite(verify_koszul);
    if (!koszul.empty()) return koszul;
    return from_suite(verify_derham);
}

} // namespace

int main() {
    using clock = std::chrono::steady_clock;
    int number = 0;
    int failed = 0;

    auto criterion = [&](const char* description, double budget_seconds,
                         const std::function<std::string()>& body) {
        ++number;
        const auto start = clock::now();
        std::string detail;
        try {
            detail = body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(clock::now() - start).count();
        if (detail.empty() && budget_seconds > 0 && elapsed > budget_seconds) {
            std::ostringstream over;
            over << "exceeded the " << budget_seconds << "s budget";
            detail = over.str();
        }
        if (detail.empty()) {
            std::printf("ok %d - %s (%.2fs)\n", number, description, elapsed);
        } else {
            std::printf("FAIL %d - %s: %s (%.2fs)\n", number, description,
                        detail.c_str(), elapsed);
            ++failed;
        }
    };

    criterion("basic graded tables: layout, totals, parity, frozen values",
              1.0, check_basic_tables);
    criterion("pair presentations reproduce power-algebra tables", 5.0,
              check_pair_power_tables);
    criterion("four-term splice identity in every internal degree", 5.0,
              []() { return from_suite(verify_basic_identity); });
    criterion("Koszul exactness and de Rham homology over F_2 and F_3", 30.0,
              check_koszul_and_derham);
    criterion("generalized Koszul homology on random graded maps", 10.0,
              []() { return from_suite(verify_genkoszul); });
    criterion("every query agrees with its dual query", 0.0,
              []() { return from_suite(verify_duality); });
    criterion("identity functor self-extensions are one-dimensional in even "
              "degrees",
              0.0, check_identity_extensions);
    criterion("closed-form families over F_q match assembled dimensions", 0.0,
              []() { return from_suite(verify_family_vs_assembly); });
    criterion("symmetric splitting scalar matches the binomial criterion", 0.0,
              check_split_scalars);
    criterion("stability bounds: frozen values and monotonicity", 0.0,
              check_bounds);

    if (failed != 0) std::printf("%d of %d criteria failed\n", failed, number);
    return failed == 0 ? 0 : 1;
}
