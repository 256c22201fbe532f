#include "extcalc/complexes.hpp"

#include <ostream>

namespace extcalc {

ChainComplexFp::ChainComplexFp(Dim p, std::vector<Dim> term_dims,
                               std::vector<FpMatrix> differentials)
    : p_(p), term_dims_(std::move(term_dims)),
      differentials_(std::move(differentials)) {
    require_prime(p);
    if (term_dims_.empty())
        throw InvalidParams("ChainComplexFp: need at least one term");
    if (differentials_.size() + 1 != term_dims_.size())
        throw InvalidParams("ChainComplexFp: differential count mismatch");
    for (size_t k = 0; k < differentials_.size(); ++k) {
        const FpMatrix& d = differentials_[k];
        if (d.p() != p_) throw InvalidParams("ChainComplexFp: mixed moduli");
        if (d.cols() != term_dims_[k] || d.rows() != term_dims_[k + 1])
            throw InvalidParams("ChainComplexFp: differential shape mismatch");
    }
    for (size_t k = 0; k + 1 < differentials_.size(); ++k)
        if (!differentials_[k + 1].multiply(differentials_[k]).is_zero())
            throw InvalidParams("ChainComplexFp: d∘d is nonzero");
}

std::vector<Dim> homology_dims(const ChainComplexFp& complex) {
    const auto& dims = complex.term_dims();
    const auto& ds = complex.differentials();
    std::vector<Dim> out(dims.size(), 0);
    for (size_t k = 0; k < dims.size(); ++k) {
        Dim rank_out = k < ds.size() ? ds[k].rank() : 0;
        Dim rank_in = k > 0 ? ds[k - 1].rank() : 0;
        out[k] = dims[k] - rank_out - rank_in;
        if (out[k] < 0)
            throw InvalidParams("homology_dims: negative dimension (not a complex)");
    }
    return out;
}

namespace {

/// Index of the pair (left basis element, right basis element) with the
/// left factor major.
int pair_index(int left, int right, int right_size) {
    return left * right_size + right;
}

/// Sign (-1)^{number of elements of the increasing list `support` below i}.
int insertion_sign(const std::vector<int>& support, int i) {
    int below = 0;
    for (int t : support) {
        if (t < i) ++below;
    }
    return below % 2 == 0 ? 1 : -1;
}

} // namespace

ChainComplexFp build_koszul(Dim p, int n, int D) {
    require_prime(p);
    if (n < 0 || D < 0) throw InvalidParams("build_koszul: negative input");
    std::vector<MonomialBasis> ext_part, sym_part;
    for (int k = 0; k <= D; ++k) {
        ext_part.emplace_back(PowerFlavor::Ext, n, D - k);
        sym_part.emplace_back(PowerFlavor::Sym, n, k);
    }
    std::vector<Dim> dims;
    for (int k = 0; k <= D; ++k)
        dims.push_back(checked_mul(ext_part[static_cast<size_t>(k)].size(),
                                   sym_part[static_cast<size_t>(k)].size()));
    std::vector<FpMatrix> ds;
    for (int k = 0; k < D; ++k) {
        const auto& esrc = ext_part[static_cast<size_t>(k)];
        const auto& ssrc = sym_part[static_cast<size_t>(k)];
        const auto& etgt = ext_part[static_cast<size_t>(k) + 1];
        const auto& stgt = sym_part[static_cast<size_t>(k) + 1];
        FpMatrix d(p, static_cast<int>(dims[static_cast<size_t>(k) + 1]),
                   static_cast<int>(dims[static_cast<size_t>(k)]));
        for (int ei = 0; ei < esrc.size(); ++ei) {
            std::vector<int> support = support_of(esrc.at(ei));
            const int a = static_cast<int>(support.size());
            for (int si = 0; si < ssrc.size(); ++si) {
                int col = pair_index(ei, si, ssrc.size());
                for (int pos = 0; pos < a; ++pos) {
                    int slot = support[static_cast<size_t>(pos)];
                    std::vector<int> e = esrc.at(ei);
                    e[static_cast<size_t>(slot)] = 0;
                    std::vector<int> c = ssrc.at(si);
                    c[static_cast<size_t>(slot)] += 1;
                    int sign = (a - 1 - pos) % 2 == 0 ? 1 : -1;
                    int row = pair_index(etgt.index_of(e), stgt.index_of(c),
                                         stgt.size());
                    d.add_at(row, col, sign);
                }
            }
        }
        ds.push_back(std::move(d));
    }
    return ChainComplexFp(p, std::move(dims), std::move(ds));
}

namespace {

/// Shared builder for the dual Koszul and de Rham complexes: both extract a
/// slot from the left factor and insert it into an exterior right factor
/// with the insertion sign; they differ in the left factor's flavor and in
/// the extraction coefficient (1 for divided powers, the exponent for
/// symmetric powers).
ChainComplexFp build_left_to_ext(Dim p, int n, int D, bool derivative_coeff) {
    require_prime(p);
    if (n < 0 || D < 0) throw InvalidParams("complex builder: negative input");
    std::vector<MonomialBasis> left_part, ext_part;
    for (int k = 0; k <= D; ++k) {
        left_part.emplace_back(PowerFlavor::Sym, n, D - k);
        ext_part.emplace_back(PowerFlavor::Ext, n, k);
    }
    std::vector<Dim> dims;
    for (int k = 0; k <= D; ++k)
        dims.push_back(checked_mul(left_part[static_cast<size_t>(k)].size(),
                                   ext_part[static_cast<size_t>(k)].size()));
    std::vector<FpMatrix> ds;
    for (int k = 0; k < D; ++k) {
        const auto& lsrc = left_part[static_cast<size_t>(k)];
        const auto& esrc = ext_part[static_cast<size_t>(k)];
        const auto& ltgt = left_part[static_cast<size_t>(k) + 1];
        const auto& etgt = ext_part[static_cast<size_t>(k) + 1];
        FpMatrix d(p, static_cast<int>(dims[static_cast<size_t>(k) + 1]),
                   static_cast<int>(dims[static_cast<size_t>(k)]));
        for (int li = 0; li < lsrc.size(); ++li) {
            const std::vector<int>& c = lsrc.at(li);
            for (int ei = 0; ei < esrc.size(); ++ei) {
                const std::vector<int>& t = esrc.at(ei);
                std::vector<int> support = support_of(t);
                int col = pair_index(li, ei, esrc.size());
                for (int slot = 0; slot < n; ++slot) {
                    if (c[static_cast<size_t>(slot)] == 0) continue;
                    if (t[static_cast<size_t>(slot)] != 0) continue;
                    std::vector<int> c2 = c;
                    c2[static_cast<size_t>(slot)] -= 1;
                    std::vector<int> t2 = t;
                    t2[static_cast<size_t>(slot)] = 1;
                    Dim coeff = derivative_coeff ? c[static_cast<size_t>(slot)] : 1;
                    int sign = insertion_sign(support, slot);
                    int row = pair_index(ltgt.index_of(c2), etgt.index_of(t2),
                                         etgt.size());
                    d.add_at(row, col, sign * coeff);
                }
            }
        }
        ds.push_back(std::move(d));
    }
    return ChainComplexFp(p, std::move(dims), std::move(ds));
}

} // namespace

ChainComplexFp build_dual_koszul(Dim p, int n, int D) {
    // Divided powers share the exponent-vector basis with symmetric powers;
    // splitting one slot off a divided power carries coefficient 1.
    return build_left_to_ext(p, n, D, false);
}

ChainComplexFp build_derham(Dim p, int n, int D) {
    return build_left_to_ext(p, n, D, true);
}

Dim derham_expected_homology(Dim p, int n, int D, int k) {
    require_prime(p);
    if (n < 0 || D < 0 || k < 0) throw InvalidParams("derham_expected_homology");
    if (D % p != 0) return 0;
    Dim m = D / p;
    if (k > m) return 0;
    return checked_mul(basis_size(PowerFlavor::Sym, n, static_cast<int>(m) - k),
                       basis_size(PowerFlavor::Ext, n, k));
}

GradedLinearMap::GradedLinearMap(std::vector<int> src_degrees_,
                                 std::vector<int> tgt_degrees_, int shift_,
                                 FpMatrix matrix_)
    : src_degrees(std::move(src_degrees_)), tgt_degrees(std::move(tgt_degrees_)),
      shift(shift_), matrix(std::move(matrix_)) {
    if (matrix.rows() != static_cast<int>(tgt_degrees.size()) ||
        matrix.cols() != static_cast<int>(src_degrees.size()))
        throw InvalidParams("GradedLinearMap: matrix shape mismatch");
    for (int deg : src_degrees)
        if (deg < 0) throw InvalidParams("GradedLinearMap: negative degree");
    for (int deg : tgt_degrees)
        if (deg < 0) throw InvalidParams("GradedLinearMap: negative degree");
    for (int w = 0; w < matrix.rows(); ++w)
        for (int v = 0; v < matrix.cols(); ++v)
            if (matrix.at(w, v) != 0 &&
                tgt_degrees[static_cast<size_t>(w)] !=
                    src_degrees[static_cast<size_t>(v)] + shift)
                throw InvalidParams("GradedLinearMap: entry off the graded blocks");
}

namespace {

/// Rank of the block of f between source slots of degree g and target slots
/// of degree g + shift.
int block_rank(const GradedLinearMap& f, int g) {
    std::vector<int> cols, rows;
    for (size_t v = 0; v < f.src_degrees.size(); ++v)
        if (f.src_degrees[v] == g) cols.push_back(static_cast<int>(v));
    for (size_t w = 0; w < f.tgt_degrees.size(); ++w)
        if (f.tgt_degrees[w] == g + f.shift) rows.push_back(static_cast<int>(w));
    FpMatrix block(f.matrix.p(), static_cast<int>(rows.size()),
                   static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t k = 0; k < cols.size(); ++k)
            block.set(static_cast<int>(i), static_cast<int>(k),
                      f.matrix.at(rows[i], cols[k]));
    return block.rank();
}

} // namespace

GradedDims GradedLinearMap::kernel_dims() const {
    GradedDims counts;
    for (int deg : src_degrees) counts.add(deg, 1);
    GradedDims out;
    for (const auto& [g, count] : counts.entries())
        out.add(g, count - block_rank(*this, g));
    return out;
}

GradedDims GradedLinearMap::cokernel_dims() const {
    GradedDims counts;
    for (int deg : tgt_degrees) counts.add(deg, 1);
    GradedDims out;
    for (const auto& [n, count] : counts.entries())
        out.add(n, count - block_rank(*this, n - shift));
    return out;
}

ChainComplexFp build_gen_koszul(const GradedLinearMap& f, int d) {
    if (d < 0) throw InvalidParams("build_gen_koszul: negative power");
    const Dim p = f.matrix.p();
    const int nA = static_cast<int>(f.src_degrees.size());
    const int nB = static_cast<int>(f.tgt_degrees.size());
    std::vector<MonomialBasis> ext_part, sym_part;
    for (int k = 0; k <= d; ++k) {
        ext_part.emplace_back(PowerFlavor::Ext, nA, d - k);
        sym_part.emplace_back(PowerFlavor::Sym, nB, k);
    }
    std::vector<Dim> dims;
    for (int k = 0; k <= d; ++k)
        dims.push_back(checked_mul(ext_part[static_cast<size_t>(k)].size(),
                                   sym_part[static_cast<size_t>(k)].size()));
    std::vector<FpMatrix> ds;
    for (int k = 0; k < d; ++k) {
        const auto& esrc = ext_part[static_cast<size_t>(k)];
        const auto& ssrc = sym_part[static_cast<size_t>(k)];
        const auto& etgt = ext_part[static_cast<size_t>(k) + 1];
        const auto& stgt = sym_part[static_cast<size_t>(k) + 1];
        FpMatrix dmat(p, static_cast<int>(dims[static_cast<size_t>(k) + 1]),
                      static_cast<int>(dims[static_cast<size_t>(k)]));
        for (int ei = 0; ei < esrc.size(); ++ei) {
            std::vector<int> support = support_of(esrc.at(ei));
            for (int si = 0; si < ssrc.size(); ++si) {
                int col = pair_index(ei, si, ssrc.size());
                for (size_t pos = 0; pos < support.size(); ++pos) {
                    int slot = support[pos];
                    int sign = pos % 2 == 0 ? 1 : -1;
                    std::vector<int> e = esrc.at(ei);
                    e[static_cast<size_t>(slot)] = 0;
                    int erow = etgt.index_of(e);
                    for (int w = 0; w < nB; ++w) {
                        int coeff = f.matrix.at(w, slot);
                        if (coeff == 0) continue;
                        std::vector<int> c = ssrc.at(si);
                        c[static_cast<size_t>(w)] += 1;
                        int row = pair_index(erow, stgt.index_of(c), stgt.size());
                        dmat.add_at(row, col, sign * coeff);
                    }
                }
            }
        }
        ds.push_back(std::move(dmat));
    }
    return ChainComplexFp(p, std::move(dims), std::move(ds));
}

namespace {

/// Internal degree of the basis element (T, c) of Lambda(A) ⊗ S(B).
int internal_degree(const GradedLinearMap& f, const std::vector<int>& ext,
                    const std::vector<int>& sym) {
    int out = 0;
    for (size_t v = 0; v < ext.size(); ++v)
        if (ext[v] != 0) out += f.src_degrees[v];
    for (size_t w = 0; w < sym.size(); ++w)
        out += sym[static_cast<size_t>(w)] * f.tgt_degrees[w];
    return out;
}

} // namespace

std::map<int, ChainComplexFp> build_gen_koszul_graded(const GradedLinearMap& f,
                                                      int d) {
    ChainComplexFp whole = build_gen_koszul(f, d);
    const Dim p = whole.p();
    const int nA = static_cast<int>(f.src_degrees.size());
    const int nB = static_cast<int>(f.tgt_degrees.size());
    // Per term: which global basis position belongs to which weight bucket.
    std::vector<std::map<int, std::vector<int>>> buckets(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        MonomialBasis ext(PowerFlavor::Ext, nA, d - k);
        MonomialBasis sym(PowerFlavor::Sym, nB, k);
        for (int ei = 0; ei < ext.size(); ++ei)
            for (int si = 0; si < sym.size(); ++si) {
                int weight = internal_degree(f, ext.at(ei), sym.at(si)) -
                             k * f.shift;
                buckets[static_cast<size_t>(k)][weight].push_back(
                    pair_index(ei, si, sym.size()));
            }
    }
    std::map<int, bool> keys;
    for (const auto& per_term : buckets)
        for (const auto& [g, positions] : per_term) keys[g] = true;
    std::map<int, ChainComplexFp> out;
    for (const auto& [g, unused] : keys) {
        std::vector<Dim> dims;
        for (int k = 0; k <= d; ++k) {
            auto it = buckets[static_cast<size_t>(k)].find(g);
            dims.push_back(it == buckets[static_cast<size_t>(k)].end()
                               ? 0
                               : static_cast<Dim>(it->second.size()));
        }
        std::vector<FpMatrix> ds;
        for (int k = 0; k < d; ++k) {
            const auto& src_positions = buckets[static_cast<size_t>(k)][g];
            const auto& tgt_positions = buckets[static_cast<size_t>(k) + 1][g];
            FpMatrix dmat(p, static_cast<int>(tgt_positions.size()),
                          static_cast<int>(src_positions.size()));
            const FpMatrix& full = whole.differentials()[static_cast<size_t>(k)];
            for (size_t row = 0; row < tgt_positions.size(); ++row)
                for (size_t col = 0; col < src_positions.size(); ++col)
                    dmat.set(static_cast<int>(row), static_cast<int>(col),
                             full.at(tgt_positions[row], src_positions[col]));
            ds.push_back(std::move(dmat));
        }
        out.emplace(g, ChainComplexFp(p, std::move(dims), std::move(ds)));
    }
    return out;
}

bool gen_koszul_homology_check(const GradedLinearMap& f, int d) {
    std::map<int, ChainComplexFp> graded = build_gen_koszul_graded(f, d);
    // Actual homology, assembled as (term, internal degree) -> dimension.
    std::map<std::pair<int, int>, Dim> actual;
    for (const auto& [g, complex] : graded) {
        std::vector<Dim> h = homology_dims(complex);
        for (int k = 0; k <= d; ++k)
            if (h[static_cast<size_t>(k)] != 0)
                actual[{k, g + k * f.shift}] = h[static_cast<size_t>(k)];
    }
    GradedDims ker = f.kernel_dims();
    GradedDims coker = f.cokernel_dims();
    std::map<std::pair<int, int>, Dim> expected;
    for (int k = 0; k <= d; ++k) {
        GradedDims table = convolve(power_dims(ker, d - k, PowerFlavor::Ext),
                                    power_dims(coker, k, PowerFlavor::Sym));
        for (const auto& [n, dim] : table.entries()) expected[{k, n}] = dim;
    }
    return actual == expected;
}

SplitScalarReport sym_split_scalar_check(Dim p, int n, int m) {
    require_prime(p);
    if (n < 0 || m < 0 || m > n)
        throw InvalidParams("sym_split_scalar_check: need 0 <= m <= n");
    MonomialBasis whole(PowerFlavor::Sym, 2, n);
    MonomialBasis left(PowerFlavor::Sym, 2, m);
    MonomialBasis right(PowerFlavor::Sym, 2, n - m);
    const int pairs = left.size() * right.size();
    FpMatrix comult(p, pairs, whole.size());
    FpMatrix mult(p, whole.size(), pairs);
    for (int ci = 0; ci < whole.size(); ++ci) {
        const std::vector<int>& c = whole.at(ci);
        for (int ai = 0; ai < left.size(); ++ai) {
            const std::vector<int>& a = left.at(ai);
            std::vector<int> b(c.size());
            bool ok = true;
            for (size_t i = 0; i < c.size(); ++i) {
                b[i] = c[i] - a[i];
                if (b[i] < 0) ok = false;
            }
            if (!ok) continue;
            int bi = right.index_of(b);
            // Splitting x^c into x^a ⊗ x^b carries the product of slotwise
            // binomials; merging back carries coefficient 1.
            Dim coeff = 1;
            for (size_t i = 0; i < c.size(); ++i)
                coeff = checked_mul(coeff, binomial(c[i], a[i]));
            comult.add_at(pair_index(ai, bi, right.size()), ci, coeff);
            mult.add_at(ci, pair_index(ai, bi, right.size()), 1);
        }
    }
    FpMatrix round_trip = mult.multiply(comult);
    SplitScalarReport report;
    report.scalar = static_cast<int>(binomial(n, m) % p);
    report.is_scalar = true;
    for (int i = 0; i < round_trip.rows() && report.is_scalar; ++i)
        for (int k = 0; k < round_trip.cols(); ++k) {
            int want = i == k ? report.scalar : 0;
            if (round_trip.at(i, k) != want) {
                report.is_scalar = false;
                break;
            }
        }
    report.matches_criterion =
        (report.scalar != 0) == splitting_criterion(p, n, m);
    return report;
}

void dump_complex(const ChainComplexFp& complex, std::ostream& out) {
    bool first = true;
    for (const FpMatrix& d : complex.differentials()) {
        if (!first) out << "\n";
        first = false;
        out << d.rows() << " " << d.cols() << "\n";
        for (int row = 0; row < d.rows(); ++row) {
            for (int col = 0; col < d.cols(); ++col) {
                if (col > 0) out << " ";
                out << d.at(row, col);
            }
            out << "\n";
        }
    }
}

} // namespace extcalc
