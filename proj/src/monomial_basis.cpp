#include "extcalc/monomial_basis.hpp"

namespace extcalc {

namespace {

void enumerate(int n, int d, int cap_per_slot, std::vector<int>& prefix,
               std::vector<std::vector<int>>& out) {
    if (static_cast<int>(prefix.size()) == n) {
        if (d == 0) out.push_back(prefix);
        return;
    }
    int top = cap_per_slot < 0 ? d : std::min(d, cap_per_slot);
    // Lexicographic order on full vectors: larger leading exponents first
    // would be reverse-lex; count upward for plain lex.
    for (int e = 0; e <= top; ++e) {
        prefix.push_back(e);
        enumerate(n, d - e, cap_per_slot, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> exponent_vectors(int n, int d) {
    if (n < 0 || d < 0) throw InvalidParams("exponent_vectors: negative input");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    enumerate(n, d, -1, prefix, out);
    return out;
}

std::vector<std::vector<int>> subset_vectors(int n, int d) {
    if (n < 0 || d < 0) throw InvalidParams("subset_vectors: negative input");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    enumerate(n, d, 1, prefix, out);
    return out;
}

Dim binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    Dim out = 1;
    for (int i = 1; i <= k; ++i) {
        // Exact at every step: the running product of i consecutive
        // binomial ratios is an integer.
        out = checked_mul(out, n - k + i) / i;
    }
    return out;
}

Dim basis_size(PowerFlavor flavor, int n, int d) {
    if (n < 0 || d < 0) throw InvalidParams("basis_size: negative input");
    if (d == 0) return 1;
    if (flavor == PowerFlavor::Ext) return binomial(n, d);
    return binomial(n + d - 1, d);
}

MonomialBasis::MonomialBasis(PowerFlavor flavor, int n, int d)
    : flavor_(flavor), n_(n), d_(d),
      elems_(flavor == PowerFlavor::Ext ? subset_vectors(n, d)
                                        : exponent_vectors(n, d)) {
    for (size_t i = 0; i < elems_.size(); ++i)
        index_[elems_[i]] = static_cast<int>(i);
}

int MonomialBasis::index_of(const std::vector<int>& exponents) const {
    auto it = index_.find(exponents);
    if (it == index_.end())
        throw InvalidParams("MonomialBasis: exponent vector not in basis");
    return it->second;
}

std::vector<int> support_of(const std::vector<int>& exponents) {
    std::vector<int> out;
    for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] != 0) out.push_back(static_cast<int>(i));
    return out;
}

} // namespace extcalc
