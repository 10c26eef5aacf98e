#ifndef ADJFACTOR_ADJOINT_HPP
#define ADJFACTOR_ADJOINT_HPP

#include <vector>

#include "adjfactor/branches.hpp"
#include "adjfactor/linalg.hpp"

namespace af {

// Basis of Adj(m), rows in reduced echelon form over the canonical monomial
// order (ascending y-degree, then ascending x-degree).
struct AdjointBasis {
    int degree = 0;
    Mat rows;                 // coefficient rows
    std::vector<BPoly> basis;

    int dim() const { return static_cast<int>(rows.rows()); }
};

// The space A: adjoints of degree d-2 restricted to x = 0, reduced echelon
// basis over (1, y, ..., y^(d-2)).
struct ASpace {
    Mat rows;
    std::vector<UPoly> basis;

    int dim() const { return static_cast<int>(rows.rows()); }
};

// Branch data of the whole singular locus.
struct CurveBranches {
    std::vector<SingPoint> points;
    std::vector<std::vector<PuiseuxBranch>> branches;  // parallel to points

    bool fully_resolved() const;  // no branch carries its own delta
};

CurveBranches curve_branch_data(const BPoly& f, int trunc, Rng& rng);

// Linear conditions on the coefficients of a degree <= m polynomial: one row
// per base-field component of each t-coefficient below each branch's
// vanishing order.
Mat adjoint_conditions(const CurveBranches& data, const Field& k, int m);

AdjointBasis adjoint_basis_from(const CurveBranches& data, const Field& k, int m);
AdjointBasis adjoint_basis(const BPoly& f, int m, Rng& rng);

ASpace restrict_to_A(const AdjointBasis& adj, int curve_degree);

// canonical column index of x^i y^j among monomials of total degree <= m
int monomial_index(int m, int i, int j);
int monomial_count(int m);

// exact re-verification: ord_t H(branch) >= vcond for every branch
bool verify_adjoint(const CurveBranches& data, const BPoly& h, int m, int curve_degree);

}  // namespace af

#endif
