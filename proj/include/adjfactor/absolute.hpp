#ifndef ADJFACTOR_ABSOLUTE_HPP
#define ADJFACTOR_ABSOLUTE_HPP

#include <vector>

#include "adjfactor/lifting.hpp"
#include "adjfactor/recombine.hpp"

namespace af {

// One output pair: q monic irreducible over k, Q monic in y with coefficients
// in k[t]/(q); F = unit * prod_i prod_{q_i(alpha)=0} Q_i(x, y, alpha).
struct AbsolutePair {
    UPoly q;      // in t, over k
    Field ext;    // k[t]/(q)
    BPoly Q;      // over ext
};

struct AbsoluteFactorization {
    Coeff unit;
    std::vector<AbsolutePair> pairs;
};

// mu = sum_j c_j * (Im(alpha) basis)_j as an element of k[y]/(F(0,y))
UPoly generic_section(const AbsoluteSystem& sys, const std::vector<Coeff>& c, const Field& k);

// monic minimal polynomial (in t) of mu as an element of k[y]/(P)
UPoly minimal_polynomial(const UPoly& mu, const UPoly& p);

// norm of Q from k[t]/(q) down to k: determinant of the multiplication matrix
BPoly ext_norm(const BPoly& q_poly, const Field& ext);

// Splits F along the level sets of the separating section mu with minimal
// polynomial q (deg q = sbar, squarefree): factors q over k, computes
// g_i = gcd(F(0,y), mu(y) - t) over k[t]/(q_i), lifts each grouping to
// precision x^(d+1), and verifies the product identity exactly.
// Throws Err::NotSeparating / Err::VerificationFailed for a bad section.
AbsoluteFactorization absolute_split(const BPoly& f, const UPoly& mu, const UPoly& q, Rng& rng);

}  // namespace af

#endif
