// Dense matrices over the prime field F_p with exact rank computation.
//
// Entries are stored reduced mod p.  Rank is computed by Gaussian
// elimination; since p is prime every nonzero pivot is invertible, so the
// result is exact.  This is the only linear algebra the homology engine
// needs.
#pragma once

#include <vector>

#include "extcalc/checked.hpp"

namespace extcalc {

class FpMatrix {
public:
    /// rows x cols zero matrix over F_p.  Requires p prime, sizes >= 0.
    FpMatrix(Dim p, int rows, int cols);

    Dim p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// Entry access; values are always in [0, p).
    int at(int row, int col) const;

    /// Adds v (any integer) to the entry, reducing mod p.
    void add_at(int row, int col, Dim v);

    /// Sets the entry to v mod p.
    void set(int row, int col, Dim v);

    /// Matrix product this * rhs (this->cols() must equal rhs.rows()).
    FpMatrix multiply(const FpMatrix& rhs) const;

    /// Rank over F_p by Gaussian elimination.
    int rank() const;

    bool is_zero() const;

    bool operator==(const FpMatrix&) const = default;

private:
    int reduce(Dim v) const;

    Dim p_;
    int rows_;
    int cols_;
    std::vector<int> a_;
};

} // namespace extcalc
