#include "extcalc/graded.hpp"

#include <algorithm>

namespace extcalc {

GradedDims::GradedDims(std::initializer_list<std::pair<int, Dim>> entries) {
    for (const auto& [n, v] : entries) add(n, v);
}

Dim GradedDims::at(int n) const {
    auto it = table_.find(n);
    return it == table_.end() ? 0 : it->second;
}

void GradedDims::add(int n, Dim v) {
    if (n < 0) throw InvalidParams("GradedDims: negative degree");
    if (v == 0) return;
    Dim next = checked_add(at(n), v);
    if (next < 0) throw InvalidParams("GradedDims: negative dimension");
    if (next == 0)
        table_.erase(n);
    else
        table_[n] = next;
}

Dim GradedDims::total() const {
    Dim t = 0;
    for (const auto& [n, v] : table_) t = checked_add(t, v);
    return t;
}

int GradedDims::max_degree() const {
    return table_.empty() ? -1 : table_.rbegin()->first;
}

GradedDims GradedDims::shifted(int k) const {
    if (k < 0) throw InvalidParams("GradedDims::shifted: negative shift");
    GradedDims out;
    for (const auto& [n, v] : table_) out.add(n + k, v);
    return out;
}

GradedDims convolve(const GradedDims& a, const GradedDims& b) {
    GradedDims out;
    for (const auto& [na, va] : a.entries())
        for (const auto& [nb, vb] : b.entries())
            out.add(na + nb, checked_mul(va, vb));
    return out;
}

std::vector<Dim> convolve_trunc(const std::vector<Dim>& a,
                                const std::vector<Dim>& b, Dim max_degree) {
    if (max_degree < 0) throw InvalidParams("convolve_trunc: negative degree cap");
    std::vector<Dim> out(static_cast<size_t>(max_degree) + 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t k = 0; k < b.size() && i + k < out.size(); ++k)
            out[i + k] = checked_add(out[i + k], checked_mul(a[i], b[k]));
    }
    return out;
}

GradedDims power_dims(const GradedDims& base, int star, PowerFlavor flavor) {
    if (star < 0) throw InvalidParams("power_dims: negative power");
    // Polynomial state: coefficient of u^e t^n counts monomials of total
    // exponent e and internal degree n after processing a prefix of the
    // one-dimensional slots.  Exterior slots admit exponents {0,1}; symmetric
    // and divided-power slots admit 0..star.
    std::vector<GradedDims> by_exponent(static_cast<size_t>(star) + 1);
    by_exponent[0].add(0, 1);
    for (const auto& [deg, count] : base.entries()) {
        for (Dim copy = 0; copy < count; ++copy) {
            std::vector<GradedDims> next(static_cast<size_t>(star) + 1);
            int emax = (flavor == PowerFlavor::Ext) ? 1 : star;
            for (int have = 0; have <= star; ++have) {
                if (by_exponent[have].entries().empty()) continue;
                for (int e = 0; e <= emax && have + e <= star; ++e) {
                    for (const auto& [n, v] : by_exponent[have].entries())
                        next[have + e].add(n + e * deg, v);
                }
            }
            by_exponent = std::move(next);
        }
    }
    return by_exponent[static_cast<size_t>(star)];
}

Dim gauss_binom(int n, int k, Dim q) {
    if (n < 0) throw InvalidParams("gauss_binom: n must be >= 0");
    if (q < 0) throw InvalidParams("gauss_binom: q must be >= 0");
    if (k < 0 || k > n) return 0;
    // Row-by-row q-Pascal: [n k] = [n-1 k-1] + q^k [n-1 k].
    std::vector<Dim> row(1, 1);
    for (int i = 1; i <= n; ++i) {
        std::vector<Dim> next(static_cast<size_t>(i) + 1, 0);
        Dim qk = 1;
        for (int j = 0; j <= i; ++j) {
            Dim above = (j < i) ? row[static_cast<size_t>(j)] : 0;
            Dim left = (j > 0) ? row[static_cast<size_t>(j - 1)] : 0;
            next[static_cast<size_t>(j)] = checked_add(left, checked_mul(qk, above));
            if (j < i) qk = checked_mul(qk, q);
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

Dim a_dim(const std::vector<Dim>& dims, Dim q, int n) {
    if (n < 0) throw InvalidParams("a_dim: n must be >= 0");
    Dim out = 0;
    for (int k = 0; k <= n; ++k) {
        size_t idx = static_cast<size_t>(n - k);
        Dim d = idx < dims.size() ? dims[idx] : 0;
        out = checked_add(out, checked_mul(gauss_binom(n, k, q), d));
    }
    return out;
}

bool splitting_criterion(Dim p, Dim n, Dim m) {
    require_prime(p);
    if (n < 0 || m < 0) throw InvalidParams("splitting_criterion: negative input");
    while (n > 0 || m > 0) {
        if (m % p > n % p) return false;
        n /= p;
        m /= p;
    }
    return true;
}

} // namespace extcalc
