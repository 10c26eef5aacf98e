#ifndef ADJFACTOR_UNIFACTOR_HPP
#define ADJFACTOR_UNIFACTOR_HPP

#include <utility>
#include <vector>

#include "adjfactor/extension.hpp"
#include "adjfactor/poly.hpp"
#include "adjfactor/rng.hpp"

namespace af {

// unit * prod factors[i]^mult[i] reproduces the input exactly; factors are
// monic, pairwise distinct, and irreducible over the declared field.
struct UniFactorization {
    Coeff unit;
    std::vector<std::pair<UPoly, int>> factors;

    UPoly expand() const;
};

// true iff gcd(f, f') = 1; in characteristic p, f' == 0 gives false
bool is_separable(const UPoly& f);

// unit * prod parts[i]^i with parts squarefree and pairwise coprime
UniFactorization squarefree_decomposition(const UPoly& f);

// Complete irreducible factorization over the polynomial's field:
// F_p and its extensions by Cantor-Zassenhaus, Q by reduction + Hensel +
// subset recombination (desk scale, degree <= ~30), Q(alpha) by norms.
UniFactorization factor_univariate(const UPoly& f, Rng& rng);

// Rabin-style distinct-degree certificate over F_q
bool is_irreducible_fq(const UPoly& f, Rng& rng);

// sorts canonically: linear factors by ascending root, then by
// (degree, coefficient sequence)
void canonical_sort(std::vector<std::pair<UPoly, int>>& factors);

}  // namespace af

#endif
