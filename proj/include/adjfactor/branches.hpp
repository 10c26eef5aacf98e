#ifndef ADJFACTOR_BRANCHES_HPP
#define ADJFACTOR_BRANCHES_HPP

#include <vector>

#include "adjfactor/extension.hpp"
#include "adjfactor/poly.hpp"
#include "adjfactor/rng.hpp"

namespace af {

// A singular point of the projective curve F = 0, or one Galois orbit of
// conjugate singular points represented over its minimal field of definition.
struct SingPoint {
    bool at_infinity = false;
    Field pt_field;  // k or k[u]/(m)
    Coeff x0, y0;    // affine coordinates; at infinity the point is (1 : y0 : 0)
    int multiplicity = 0;
    // local equation in coordinates (U, V): affine U = x - x0, V = y - y0;
    // at infinity (chart x = 1) U = z, V = y - y0
    BPoly local;

    std::string describe() const;
};

// One analytic branch (or a Galois orbit of rel_deg conjugate branches) of the
// curve at a point: U = xunit * t^e, V = yseries(t).
struct PuiseuxBranch {
    Field ext;          // coefficient field, simple over k
    Embedding from_pt;  // point field -> ext
    int e = 1;          // ord_t of U
    Coeff xunit;
    UPoly yseries;      // truncated strictly below t^trunc
    int trunc = 0;
    int rel_deg = 1;    // number of conjugate analytic branches represented
    int fy_val = 0;     // ord_t of dG/dV along the branch
    int xprime_val = 0; // = e - 1
    int delta2 = 0;     // 2*delta invariant of the branch
    int vcond = 0;      // adjoint vanishing order: max(0, fy_val - xprime_val - delta2)
};

// All singular points of the projective closure, affine ones via resultant
// elimination, points at infinity via the chart swap.  Conjugate points are
// grouped into clusters over their minimal field of definition.
// Throws Err::NonSquarefree when gcd(F, dF/dy) over k(x) is nonconstant.
std::vector<SingPoint> singular_points(const BPoly& f, Rng& rng);

// Branches of the local curve at a point; retries internally with doubled
// truncation on TruncationInsufficient up to a hard cap.
std::vector<PuiseuxBranch> puiseux_branches(const SingPoint& p, int trunc, Rng& rng);

// Convenience: branches at an affine point given directly.
std::vector<PuiseuxBranch> puiseux_branches_at(const BPoly& f, const Field& pt_field,
                                               const Coeff& x0, const Coeff& y0, int trunc,
                                               Rng& rng);

// true iff the curve has exactly one analytic branch at the affine point
// (x0, y0); fast path when the gradient does not vanish.
bool locally_irreducible(const BPoly& f, const Field& pt_field, const Coeff& x0, const Coeff& y0,
                         Rng& rng);

// substitute the branch parametrization into H(U, V): H(xunit*t^e, yseries(t)) mod t^trunc
UPoly branch_substitute(const BPoly& h, const PuiseuxBranch& b);

// default starting truncation for a curve of total degree d
int default_truncation(int d);

// one line per branch: point; ext minpoly; e; truncated y-series
std::string branch_dump(const SingPoint& p, const std::vector<PuiseuxBranch>& branches);

}  // namespace af

#endif
