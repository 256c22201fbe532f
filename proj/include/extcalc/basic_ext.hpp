// Graded dimension tables of the basic twist-comparison Ext spaces.
//
// For a prime p and twists 0 <= j <= r, six one-dimensional-per-slot graded
// spaces control every Ext computation between twisted powers of the
// identity.  All six are given in closed form:
//
//   V   slots in degrees 2*p^(r-j)*m           for 0 <= m < p^j
//   U   the same table as V (the dual picture)
//   W   V shifted up by p^(r-j) - 1
//   Vt  W shifted up by p^(r-j) - 1 again      ("V-tilde")
//   K   the (j-1)-table of W shifted up by p^(r-j+1) - p^(r-j)   (j >= 1)
//   C   the (j-1)-table of V                                      (j >= 1)
//
// K and C are the kernel and cokernel tables of the connecting map one twist
// down; the degreewise exactness identity relating K, W, V, C is a test
// invariant, not an input.
//
// e_name spells out the canonical basis word e_r(m) attached to the slot of
// cohomological degree 2m.
#pragma once

#include <string>

#include "extcalc/graded.hpp"

namespace extcalc {

/// The six basic table kinds.
enum class BasicSpace { V, W, U, Vtilde, K, C };

/// Parses one of "V", "W", "U", "Vtilde", "K", "C".
BasicSpace parse_basic_space(const std::string& name);

/// Graded dimensions of the requested basic space.  Requires p prime and
/// 0 <= j <= r; K and C additionally require j >= 1.
GradedDims basic_table(BasicSpace space, Dim p, int r, int j);

/// A rendered basis word together with its cohomological degree.
struct ENameResult {
    std::string name;
    Dim coh_degree = 0;
};

/// The basis word e_r(m) for 0 <= m < p^r, spelled out through the base-p
/// digits of m: digit m_i contributes the factor e_{i+1}^{m_i (r-1-i)}, where
/// the parenthesized part is the twist annotation (omitted when zero).
/// m = 0 yields the unit word "1".  The cohomological degree is 2m.
ENameResult e_name(Dim p, int r, Dim m);

} // namespace extcalc
