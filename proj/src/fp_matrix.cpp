#include "extcalc/fp_matrix.hpp"

namespace extcalc {

namespace {

size_t checked_area(int rows, int cols) {
    if (rows < 0 || cols < 0) throw InvalidParams("FpMatrix: negative size");
    return static_cast<size_t>(rows) * static_cast<size_t>(cols);
}

} // namespace

FpMatrix::FpMatrix(Dim p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), a_(checked_area(rows, cols), 0) {
    require_prime(p);
}

int FpMatrix::reduce(Dim v) const {
    Dim r = v % p_;
    if (r < 0) r += p_;
    return static_cast<int>(r);
}

int FpMatrix::at(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw InvalidParams("FpMatrix: index out of range");
    return a_[static_cast<size_t>(row) * static_cast<size_t>(cols_) +
              static_cast<size_t>(col)];
}

void FpMatrix::add_at(int row, int col, Dim v) {
    set(row, col, at(row, col) + v);
}

void FpMatrix::set(int row, int col, Dim v) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw InvalidParams("FpMatrix: index out of range");
    a_[static_cast<size_t>(row) * static_cast<size_t>(cols_) +
       static_cast<size_t>(col)] = reduce(v);
}

FpMatrix FpMatrix::multiply(const FpMatrix& rhs) const {
    if (p_ != rhs.p_) throw InvalidParams("FpMatrix: mixed moduli");
    if (cols_ != rhs.rows_) throw InvalidParams("FpMatrix: size mismatch");
    FpMatrix out(p_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.add_at(i, j, static_cast<Dim>(v) * rhs.at(k, j));
        }
    return out;
}

int FpMatrix::rank() const {
    std::vector<int> m = a_;
    auto at_ = [&](int r, int c) -> int& {
        return m[static_cast<size_t>(r) * static_cast<size_t>(cols_) +
                 static_cast<size_t>(c)];
    };
    // Modular inverse by Fermat: x^(p-2) mod p.
    auto inv = [&](int x) {
        Dim out = 1, base = x, e = p_ - 2;
        while (e > 0) {
            if (e & 1) out = out * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<int>(out);
    };
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int row = rank; row < rows_; ++row)
            if (at_(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        for (int c = 0; c < cols_; ++c) std::swap(at_(rank, c), at_(pivot, c));
        int scale = inv(at_(rank, col));
        for (int c = col; c < cols_; ++c)
            at_(rank, c) = static_cast<int>(static_cast<Dim>(at_(rank, c)) * scale % p_);
        for (int row = 0; row < rows_; ++row) {
            if (row == rank || at_(row, col) == 0) continue;
            Dim factor = at_(row, col);
            for (int c = col; c < cols_; ++c) {
                Dim v = at_(row, c) - factor * at_(rank, c) % p_;
                at_(row, c) = static_cast<int>(((v % p_) + p_) % p_);
            }
        }
        ++rank;
    }
    return rank;
}

bool FpMatrix::is_zero() const {
    for (int v : a_)
        if (v != 0) return false;
    return true;
}

} // namespace extcalc
