// Graded dimension vectors and the counting primitives built on them.
//
// A GradedDims records, for each internal degree n >= 0, the dimension of the
// degree-n slice of a graded F_p-vector space.  Everything downstream
// (presentations, Kunneth recursion, homology cross-checks) reduces to exact
// integer arithmetic on these tables:
//
//   * convolve        — graded tensor product;
//   * power_dims      — symmetric / exterior / divided-power functor of a
//                       graded space, degree by degree;
//   * gauss_binom     — Gaussian (q-)binomial coefficients;
//   * a_dim           — weighted dimension count with q-binomial weights;
//   * splitting_criterion — digitwise p-adic dominance, equivalent to a
//                       binomial coefficient being nonzero mod p.
#pragma once

#include <map>
#include <vector>

#include "extcalc/checked.hpp"

namespace extcalc {

/// Sparse table degree -> dimension.  Degrees are nonnegative, dimensions
/// positive (zero entries are never stored).
class GradedDims {
public:
    GradedDims() = default;

    /// Builds a table from explicit (degree, dim) pairs.
    GradedDims(std::initializer_list<std::pair<int, Dim>> entries);

    /// Dimension in degree n (0 when absent).
    Dim at(int n) const;

    /// Adds v to the dimension in degree n.  Degrees must be >= 0.
    void add(int n, Dim v);

    /// Sum of all dimensions.
    Dim total() const;

    /// Largest degree with a nonzero entry; -1 when empty.
    int max_degree() const;

    /// Copy with every degree shifted up by k (k >= 0).
    GradedDims shifted(int k) const;

    /// Ordered (degree, dim) view.
    const std::map<int, Dim>& entries() const { return table_; }

    bool operator==(const GradedDims&) const = default;

private:
    std::map<int, Dim> table_;
};

/// Graded tensor product: out[n] = sum_k a[k] * b[n-k].
GradedDims convolve(const GradedDims& a, const GradedDims& b);

/// Dense-vector convolution truncated to degrees 0..max_degree; the result
/// always has size max_degree + 1.
std::vector<Dim> convolve_trunc(const std::vector<Dim>& a,
                                const std::vector<Dim>& b, Dim max_degree);

/// Which kind of power functor a counting problem refers to.
/// Symmetric and divided powers count the same monomials (multisets of
/// slots); exterior powers count squarefree monomials (subsets), regardless
/// of slot degrees.
enum class PowerFlavor { Sym, Ext, Gamma };

/// Graded dimensions of the star-th power of a graded space with the given
/// slot table.  star must be >= 0; star == 0 yields the unit table {0: 1}.
GradedDims power_dims(const GradedDims& base, int star, PowerFlavor flavor);

/// Gaussian binomial coefficient [n choose k]_q via the q-Pascal recurrence,
/// overflow-checked.  Returns 0 for k < 0 or k > n.  Requires n >= 0, q >= 0.
/// At q = 1 this is the ordinary binomial coefficient.
Dim gauss_binom(int n, int k, Dim q);

/// Weighted dimension sum_{k=0}^{n} [n choose k]_q * dims[n - k], where
/// out-of-range indices of dims count as 0.  Requires n >= 0, q >= 0.
Dim a_dim(const std::vector<Dim>& dims, Dim q, int n);

/// True iff every base-p digit of m is <= the corresponding digit of n,
/// which happens exactly when binomial(n, m) is nonzero mod p.
/// Requires p prime and n, m >= 0.
bool splitting_criterion(Dim p, Dim n, Dim m);

} // namespace extcalc
