#ifndef ADJFACTOR_LIFTING_HPP
#define ADJFACTOR_LIFTING_HPP

#include <functional>
#include <vector>

#include "adjfactor/poly.hpp"

namespace af {

// product of the selected factors via a balanced product tree
UPoly subset_product(const std::vector<UPoly>& factors, const std::vector<int>& indicator);

// invoked after every doubling with the current x-adic precision and factors
using LiftObserver = std::function<void(int precision, const std::vector<Series>& factors)>;

// Multifactor Hensel lifting: F monic in y, g0 pairwise coprime (not
// necessarily squarefree) with prod(g0) = F(0,y).  Lifts to precision x^N by
// quadratic iteration, maintaining Bezout cofactors.  The returned
// polynomials are the truncations of the lifted factors.
// When require_exact is set, throws Err::LiftMismatch unless the truncated
// product reproduces F exactly (a true factor grouping with N > deg_x F).
std::vector<BPoly> multifactor_hensel(const BPoly& f, const std::vector<UPoly>& g0, int n,
                                      bool require_exact = false,
                                      const LiftObserver& observer = {});

}  // namespace af

#endif
