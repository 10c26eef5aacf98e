#ifndef ADJFACTOR_RECOMBINE_HPP
#define ADJFACTOR_RECOMBINE_HPP

#include <vector>

#include "adjfactor/adjoint.hpp"
#include "adjfactor/linalg.hpp"
#include "adjfactor/unifactor.hpp"

namespace af {

// The matrix of the trace/residue map T: one row per point of Z (modular
// factor, or root cluster on the non-separable path), one column per A-basis
// element, together with the reduced echelon basis of its left kernel.
struct RecombSystem {
    Mat M;
    std::vector<UPoly> row_labels;  // monic irreducible cluster polynomials
    std::vector<int> row_mult;      // root multiplicities (all 1 when separable)
    Mat left_kernel;
};

// power sums p_0 .. p_(count-1) of the roots of a monic polynomial via the
// Newton identities (valid in any characteristic)
std::vector<Coeff> trace_powers(const UPoly& f, int count);

// trace of multiplication by b on K[y]/(f)
Coeff trace_of(const UPoly& b, const UPoly& f);

// Rows M[i][j] = Tr_{k[y]/(f_i)}(H_j / dFy0 mod f_i); requires F(0,y) separable.
RecombSystem build_T_separable(const ASpace& A, const UniFactorization& fac, const UPoly& dFy0);

// coefficient of (y - root)^(-1) in the Laurent expansion of H/P at a root of
// multiplicity mult; result lives in the root's field
Coeff laurent_residue(const UPoly& h, const UPoly& p, const Coeff& root, int mult);

// Rows are distinct-root clusters of F(0,y) (with multiplicities); entries are
// traced residues of H_j(y) dy / F(0,y).
RecombSystem build_T_nonseparable(const ASpace& A, const UniFactorization& f0_factors,
                                  const UPoly& f0);

struct AbsoluteSystem {
    Mat L_basis;   // rows span L in k^d
    Mat B;         // d x d matrix of traces (Tr phi^(i+j))
    Mat im_alpha;  // rows: coefficient vectors of a basis of Im(alpha) in k[y]/(F0)
    int sbar = 0;
};

AbsoluteSystem build_absolute_system(const ASpace& A, const UPoly& f0, const UPoly& dFy0);

// reduced echelon basis of {v : v M = 0}, deterministic pivot order
Mat kernel_reduced_echelon(const Mat& m);

// all coordinates in {0,1}, supports pairwise disjoint and partitioning the rows
bool kernel_is_recombination_basis(const Mat& kernel);

std::string recomb_dump(const RecombSystem& sys);

}  // namespace af

#endif
