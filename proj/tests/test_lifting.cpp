#include <doctest.h>

#include "adjfactor/lifting.hpp"
#include "helpers.hpp"

using namespace af;
using namespace aft;

TEST_CASE("subset_product") {
    std::vector<UPoly> fs{uy("y"), uy("y+1"), uy("y-1")};
    CHECK(subset_product(fs, {0, 0, 0}) == UPoly::one(Q()));
    CHECK(subset_product(fs, {1, 1, 0}) == uy("y^2+y"));
    // section-7 grouping (y+1)^2 (y-1) from clusters with multiplicities
    std::vector<UPoly> cl{pow_upoly(uy("y+1"), 2), pow_upoly(uy("y"), 2), uy("y-1")};
    CHECK(subset_product(cl, {1, 0, 1}) == uy("(y+1)^2*(y-1)"));
}

TEST_CASE("section-7 lift: coprime but not squarefree") {
    BPoly f = bxy("y^5+y^4-x*y^3-y^3-2*x*y^2-y^2+x^2+x*y+x");
    std::vector<UPoly> g0{uy("y^2"), uy("(y+1)^2*(y-1)")};
    auto lifted = multifactor_hensel(f, g0, 3, true);
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[0] == bxy("y^2-x"));
    CHECK(lifted[1] == bxy("(y+1)^2*(y-1)-x"));
}

TEST_CASE("derived example lift at full precision") {
    BPoly f = bxy("(y^2+y+x)*(y-1+x)");
    auto lifted = multifactor_hensel(f, {uy("y^2+y"), uy("y-1")}, 4, true);
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[0] == bxy("y^2+y+x"));
    CHECK(lifted[1] == bxy("y-1+x"));
}

TEST_CASE("single factor lifts to F itself") {
    BPoly f = bxy("y^3-x*y+x^2+1-y");
    auto lifted = multifactor_hensel(f, {f.eval_x0().monic()}, 4, true);
    REQUIRE(lifted.size() == 1);
    CHECK(lifted[0] == f);
}

TEST_CASE("products hold at every doubling step") {
    Field k = Fp(10007);
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 4 + static_cast<int>(rng.below(6));
        UPoly f0 = UPoly::random_monic(k, d, rng);
        UniFactorization fac = factor_univariate(f0, rng);
        if (fac.factors.size() < 2) continue;
        // group into pairwise coprime parts (not necessarily squarefree)
        std::vector<UPoly> parts;
        for (const auto& [g, m] : fac.factors) parts.push_back(pow_upoly(g, m));
        BPoly f = random_curve_with_fiber(f0, d, rng);
        int observed = 0;
        multifactor_hensel(f, parts, d + 1, false,
                           [&](int prec, const std::vector<Series>& gs) {
                               Series prod = Series::from_bpoly(BPoly::constant(Coeff::one(k)), prec);
                               for (const auto& g : gs) prod = prod * g;
                               CHECK(prod == Series::from_bpoly(f, prec));
                               ++observed;
                           });
        CHECK(observed >= 1);
    }
}

TEST_CASE("lifting exact factors is the identity") {
    Field k = Fp(10007);
    Rng rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        BPoly a = random_irreducible_curve(k, 2, rng);
        BPoly b = random_irreducible_curve(k, 3, rng);
        UPoly a0 = a.eval_x0(), b0 = b.eval_x0();
        if (gcd(a0, b0).deg() != 0) continue;
        BPoly f = a * b;
        for (int n : {3, f.total_degree() + 1, 2 * f.total_degree()}) {
            auto lifted = multifactor_hensel(f, {a0, b0}, n, false);
            CHECK(lifted[0] == Series::from_bpoly(a, n).to_bpoly());
            CHECK(lifted[1] == Series::from_bpoly(b, n).to_bpoly());
        }
    }
}

TEST_CASE("error paths: NotCoprime and LiftMismatch") {
    BPoly f = bxy("y^5+y^4-x*y^3-y^3-2*x*y^2-y^2+x^2+x*y+x");
    try {
        multifactor_hensel(f, {uy("y^2*(y+1)"), uy("(y+1)*(y-1)")}, 3);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::NotCoprime);
        CHECK(std::string(e.what()).find("y+1") != std::string::npos);
    }
    // wrong grouping: congruent mod x^3 but not exact
    try {
        multifactor_hensel(f, {uy("y^2*(y+1)^2"), uy("y-1")}, 3, true);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::LiftMismatch);
    }
}
