// Finite chain complexes over F_p and the homology verification engine.
//
// A ChainComplexFp is a finite sequence of F_p-spaces with differentials
// going term k -> term k+1; d∘d = 0 is validated at construction.  Homology
// dimensions come from exact ranks: dim H^k = dim ker(d_k) - rank(d_{k-1}).
//
// Builders:
//   build_koszul       term k = Lambda^{D-k} ⊗ S^k      (n variables)
//   build_dual_koszul  term k = Gamma^{D-k} ⊗ Lambda^k
//   build_derham       term k = S^{D-k} ⊗ Lambda^k, monomial-derivative
//                      differential (exact except in degrees divisible by p)
//   build_gen_koszul   term k = Lambda^{d-k}(A) ⊗ S^k(B) for a graded map
//                      f: A -> B; homology is Lambda(ker f) ⊗ S(coker f)
//
// The Koszul and dual Koszul complexes are exact for D >= 1; the de Rham
// complex computes the Cartier homology (zero unless p divides D); the
// generalized Koszul complex is the engine behind the twist-lowering
// computations, and gen_koszul_homology_check verifies its homology against
// the kernel/cokernel prediction degree by degree.
#pragma once

#include <iosfwd>
#include <map>

#include "extcalc/fp_matrix.hpp"
#include "extcalc/graded.hpp"
#include "extcalc/monomial_basis.hpp"

namespace extcalc {

/// A finite cochain complex over F_p.  differentials[k] maps term k to term
/// k+1 (so it is a term_dims[k+1] x term_dims[k] matrix).
class ChainComplexFp {
public:
    /// Validates shapes and d∘d = 0; throws InvalidParams on violations.
    ChainComplexFp(Dim p, std::vector<Dim> term_dims,
                   std::vector<FpMatrix> differentials);

    Dim p() const { return p_; }
    const std::vector<Dim>& term_dims() const { return term_dims_; }
    const std::vector<FpMatrix>& differentials() const { return differentials_; }

private:
    Dim p_;
    std::vector<Dim> term_dims_;
    std::vector<FpMatrix> differentials_;
};

/// dim H^k for k = 0..last term.
std::vector<Dim> homology_dims(const ChainComplexFp& complex);

/// Koszul complex on n variables in total degree D >= 0:
/// term k = Lambda^{D-k} ⊗ S^k, d(e_T ⊗ x^c) alternately moves one exterior
/// slot into the symmetric factor.
ChainComplexFp build_koszul(Dim p, int n, int D);

/// Dual Koszul complex: term k = Gamma^{D-k} ⊗ Lambda^k, d splits one
/// divided-power slot off into the exterior factor.
ChainComplexFp build_dual_koszul(Dim p, int n, int D);

/// de Rham complex: term k = S^{D-k} ⊗ Lambda^k, d differentiates one
/// symmetric slot (coefficient = exponent mod p) into the exterior factor.
ChainComplexFp build_derham(Dim p, int n, int D);

/// Predicted de Rham homology dimension at term k (Cartier): zero unless
/// D = p*m, in which case dim S^{m-k}(n) * dim Lambda^k(n).
Dim derham_expected_homology(Dim p, int n, int D, int k);

/// A degree-homogeneous linear map between graded spaces with one slot per
/// listed degree: entry (w, v) may be nonzero only when
/// tgt_degrees[w] == src_degrees[v] + shift (validated at construction).
struct GradedLinearMap {
    GradedLinearMap(std::vector<int> src_degrees, std::vector<int> tgt_degrees,
                    int shift, FpMatrix matrix);

    std::vector<int> src_degrees;
    std::vector<int> tgt_degrees;
    int shift;
    FpMatrix matrix;

    /// Graded dimensions of the kernel (degrees from src) and cokernel
    /// (degrees from tgt), by block ranks.
    GradedDims kernel_dims() const;
    GradedDims cokernel_dims() const;
};

/// Generalized Koszul complex of a graded map f: term k =
/// Lambda^{d-k}(source slots) ⊗ S^k(target slots), differential extracting
/// one exterior slot, pushing it through f, and multiplying into the
/// symmetric factor.
ChainComplexFp build_gen_koszul(const GradedLinearMap& f, int d);

/// The same complex split by internal degree: the key is the conserved
/// weight (internal degree of term k) - k * shift, each value a subcomplex.
std::map<int, ChainComplexFp> build_gen_koszul_graded(const GradedLinearMap& f,
                                                      int d);

/// Checks, degree by degree, that the homology of the generalized Koszul
/// complex of f equals Lambda^{d-k}(ker f) ⊗ S^k(coker f).  Returns true on
/// full agreement.
bool gen_koszul_homology_check(const GradedLinearMap& f, int d);

/// Result of the split-scalar verification on two variables: composing the
/// degree-(m, n-m) comultiplication with multiplication on S^n must be the
/// scalar binomial(n, m) mod p, and invertibility must match
/// splitting_criterion(p, n, m).
struct SplitScalarReport {
    bool is_scalar = false;
    int scalar = 0;
    bool matches_criterion = false;
    bool passed() const { return is_scalar && matches_criterion; }
};

SplitScalarReport sym_split_scalar_check(Dim p, int n, int m);

/// Plain-text dump of every differential: per matrix a "rows cols" header
/// line, then the rows as space-separated digits, blank line between
/// matrices.
void dump_complex(const ChainComplexFp& complex, std::ostream& out);

} // namespace extcalc
