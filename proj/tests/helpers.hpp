#ifndef ADJFACTOR_TEST_HELPERS_HPP
#define ADJFACTOR_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "adjfactor/parser.hpp"
#include "adjfactor/unifactor.hpp"

namespace aft {

inline af::Field Q() { return af::Field::rationals(); }
inline af::Field Fp(std::uint64_t p) { return af::Field::prime(p); }

inline af::UPoly uy(const std::string& s, const af::Field& f = Q()) {
    return af::gpoly_to_upoly(af::parse_gpoly(s), f, 'y');
}
inline af::UPoly ux(const std::string& s, const af::Field& f = Q()) {
    return af::gpoly_to_upoly(af::parse_gpoly(s), f, 'x');
}
inline af::UPoly ut(const std::string& s, const af::Field& f = Q()) {
    return af::gpoly_to_upoly(af::parse_gpoly(s), f, 't');
}
inline af::BPoly bxy(const std::string& s, const af::Field& f = Q()) {
    return af::gpoly_to_bpoly(af::parse_gpoly(s), f);
}

// random dense polynomial of exact total degree d with unit y^d coefficient
// and the prescribed fiber F(0,y) = f0
inline af::BPoly random_curve_with_fiber(const af::UPoly& f0, int d, af::Rng& rng) {
    const af::Field& k = f0.field();
    std::uint64_t p = k.desc().modulus;
    af::BPoly g = af::BPoly::from_upoly_in_y(f0);
    for (int i = 1; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) {
            if (j >= d) continue;
            af::Coeff c = af::Coeff::from_scalar(k, af::Scalar::residue(k.desc(), rng.below(p)));
            std::vector<af::UPoly> yc(j + 1, af::UPoly::zero(k));
            yc[j] = af::UPoly::monomial(k, i, c);
            g = g + af::BPoly(k, std::move(yc));
        }
    return g;
}

// random monic irreducible univariate over F_p
inline af::UPoly random_irreducible(const af::Field& k, int deg, af::Rng& rng) {
    for (;;) {
        af::UPoly f = af::UPoly::random_monic(k, deg, rng);
        if (af::is_irreducible_fq(f, rng)) return f;
    }
}

// random irreducible bivariate of total degree d over F_p, certified by an
// irreducible fiber F(0,y)
inline af::BPoly random_irreducible_curve(const af::Field& k, int d, af::Rng& rng) {
    af::UPoly f0 = random_irreducible(k, d, rng);
    return random_curve_with_fiber(f0, d, rng);
}

}  // namespace aft

#endif
