// Explicit monomial bases for power functors on a free module.
//
// Symmetric and divided powers of an n-dimensional space share the basis of
// exponent vectors summing to d (size binomial(n+d-1, d)); exterior powers
// use squarefree exponent vectors (size binomial(n, d)).  Vectors are listed
// in lexicographic order, and every basis supports O(log) index lookup,
// which is what the differential builders need.
#pragma once

#include <map>
#include <vector>

#include "extcalc/graded.hpp"

namespace extcalc {

/// All exponent vectors of length n with entries >= 0 summing to d,
/// lexicographically ordered.
std::vector<std::vector<int>> exponent_vectors(int n, int d);

/// All 0/1 exponent vectors of length n summing to d, lexicographically
/// ordered.
std::vector<std::vector<int>> subset_vectors(int n, int d);

/// binomial(n, k) as an exact checked integer (0 outside 0 <= k <= n).
Dim binomial(int n, int k);

/// Number of basis monomials of the d-th power of an n-dimensional space.
Dim basis_size(PowerFlavor flavor, int n, int d);

/// A materialized monomial basis with index lookup.
class MonomialBasis {
public:
    MonomialBasis(PowerFlavor flavor, int n, int d);

    PowerFlavor flavor() const { return flavor_; }
    int slots() const { return n_; }
    int power() const { return d_; }
    int size() const { return static_cast<int>(elems_.size()); }

    const std::vector<int>& at(int index) const { return elems_.at(static_cast<size_t>(index)); }

    /// Index of an exponent vector; throws InvalidParams when absent.
    int index_of(const std::vector<int>& exponents) const;

    const std::vector<std::vector<int>>& elements() const { return elems_; }

private:
    PowerFlavor flavor_;
    int n_;
    int d_;
    std::vector<std::vector<int>> elems_;
    std::map<std::vector<int>, int> index_;
};

/// Positions of the nonzero entries of a 0/1 exponent vector, increasing.
std::vector<int> support_of(const std::vector<int>& exponents);

} // namespace extcalc
