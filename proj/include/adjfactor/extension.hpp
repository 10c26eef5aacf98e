#ifndef ADJFACTOR_EXTENSION_HPP
#define ADJFACTOR_EXTENSION_HPP

#include "adjfactor/linalg.hpp"
#include "adjfactor/poly.hpp"

namespace af {

// K[w]/(q) re-expressed as a simple extension of the prime field.
struct TowerCollapse {
    Field big;        // k[v]/(M), simple over the base
    Embedding embed;  // K -> big
    Coeff root;       // image of w in big
};

// q must be monic and irreducible over K (k itself or a simple extension).
TowerCollapse collapse_tower(const Field& K, const UPoly& q);

// coefficient-wise injection of a base-field polynomial into an extension
UPoly lift_to(const UPoly& p, const Field& ext);
Embedding base_embedding(const Field& from_base, const Field& to);

// trace of the multiplication-by-c endomorphism of K over its prime field
Scalar field_trace(const Coeff& c);

}  // namespace af

#endif
