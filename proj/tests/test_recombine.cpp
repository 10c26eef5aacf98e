#include <doctest.h>

#include "adjfactor/pipeline.hpp"
#include "helpers.hpp"

using namespace af;
using namespace aft;

namespace {

Coeff cq(long n, long d = 1) {
    return Coeff::from_scalar(Q(), Scalar::from_mpq(Q().desc(), mpq_class(n, d)));
}

}  // namespace

TEST_CASE("trace_powers spec examples") {
    // f = y - c
    UPoly f1 = uy("y-5");
    auto p1 = trace_powers(f1, 2);
    CHECK(p1[0] == cq(1));
    CHECK(p1[1] == cq(5));
    // f = y^2 - 3y + 2 with roots 1, 2
    auto p2 = trace_powers(uy("y^2-3*y+2"), 3);
    CHECK(p2[0] == cq(2));
    CHECK(p2[1] == cq(3));
    CHECK(p2[2] == cq(5));
    // f = y^3 - y with roots -1, 0, 1
    auto p3 = trace_powers(uy("y^3-y"), 3);
    CHECK(p3[0] == cq(3));
    CHECK(p3[1] == cq(0));
    CHECK(p3[2] == cq(2));
    // characteristic p: identities remain valid; for y^5 = y + 1 the sum of
    // fifth powers is p1 + 5 = p1 mod 5
    Field k = Fp(5);
    auto p5 = trace_powers(uy("y^5-y-1", k), 6);
    CHECK(p5[5] == p5[1]);
}

TEST_CASE("trace_of spec examples") {
    CHECK(trace_of(uy("1"), uy("y^2-3*y+2")) == cq(2));
    CHECK(trace_of(uy("y"), uy("y^2-3*y+2")) == cq(3));
    CHECK(trace_of(uy("y^2"), uy("y^3-y")) == cq(2));
}

TEST_CASE("build_T_separable: derived three-point example") {
    Rng rng(0);
    BPoly f = bxy("(y^2+y+x)*(y-1+x)");
    PipelineOptions opt;
    CurveContext ctx = build_curve_context(f, opt, rng);
    REQUIRE(ctx.A.dim() == 1);
    // reduced echelon basis: 1 - y spans A (the pivot is the constant term)
    CHECK(ctx.A.basis[0] == uy("1-y"));
    RecombSystem sys = recombination_system(ctx);
    // rows in canonical order: roots -1, 0, 1; H = 1-y gives the column
    // (H(-1)/P'(-1), H(0)/P'(0), H(1)/P'(1)) = (1, -1, 0)
    REQUIRE(sys.row_labels.size() == 3);
    CHECK(sys.row_labels[0] == uy("y+1"));
    CHECK(sys.row_labels[1] == uy("y"));
    CHECK(sys.row_labels[2] == uy("y-1"));
    CHECK(sys.M.at(0, 0) == cq(1));
    CHECK(sys.M.at(1, 0) == cq(-1));
    CHECK(sys.M.at(2, 0) == cq(0));
    // reduced echelon left kernel {(1,1,0),(0,0,1)}
    REQUIRE(sys.left_kernel.rows() == 2);
    CHECK(sys.left_kernel.at(0, 0) == cq(1));
    CHECK(sys.left_kernel.at(0, 1) == cq(1));
    CHECK(sys.left_kernel.at(0, 2) == cq(0));
    CHECK(sys.left_kernel.at(1, 0) == cq(0));
    CHECK(sys.left_kernel.at(1, 1) == cq(0));
    CHECK(sys.left_kernel.at(1, 2) == cq(1));
    CHECK(kernel_is_recombination_basis(sys.left_kernel));
}

TEST_CASE("all-ones vector lies in the left kernel") {
    Field k = Fp(10007);
    Rng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        BPoly f = random_irreducible_curve(k, 2, rng) * random_irreducible_curve(k, 3, rng);
        if (!is_separable(f.eval_x0())) continue;
        PipelineOptions opt;
        opt.seed = trial;
        Rng r2(trial);
        CurveContext ctx = build_curve_context(f, opt, r2);
        RecombSystem sys = recombination_system(ctx);
        for (std::size_t j = 0; j < sys.M.cols(); ++j) {
            Coeff sum = Coeff::zero(k);
            for (std::size_t i = 0; i < sys.M.rows(); ++i) sum = sum + sys.M.at(i, j);
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("laurent_residue: simple and multiple roots (section 7 pins)") {
    UPoly f0 = uy("y^5+y^4-y^3-y^2");  // y^2 (y+1)^2 (y-1)
    // simple root 1: H(1)/4
    for (const char* hs : {"y+1", "y^2", "y^3"}) {
        UPoly h = uy(hs);
        Coeff r = laurent_residue(h, f0, Coeff::from_int(Q(), 1), 1);
        CHECK(r == h.eval(cq(1)) * cq(1, 4));
    }
    // double root -1: (-2 H'(-1) - 5 H(-1)) / 4
    for (const char* hs : {"y+1", "y^2", "y^3", "y^2-3*y"}) {
        UPoly h = uy(hs);
        Coeff expect = (cq(-2) * h.derivative().eval(cq(-1)) - cq(5) * h.eval(cq(-1))) * cq(1, 4);
        CHECK(laurent_residue(h, f0, cq(-1), 2) == expect);
    }
    // double root 0: H(0) - H'(0) (the paper's displayed matrix row, not the
    // misprinted formula H'(0) + H(0))
    for (const char* hs : {"y+1", "y^2", "y^3", "7*y-3"}) {
        UPoly h = uy(hs);
        Coeff expect = h.eval(cq(0)) - h.derivative().eval(cq(0));
        CHECK(laurent_residue(h, f0, cq(0), 2) == expect);
    }
    CHECK_THROWS_AS(laurent_residue(uy("y"), f0, cq(2), 1), Error);
    CHECK_THROWS_AS(laurent_residue(uy("y"), f0, cq(1), 2), Error);
}

TEST_CASE("residue theorem: traced residues sum to zero") {
    Field k = Fp(10007);
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        UPoly p = UPoly::random_monic(k, 2 + rng.below(8), rng);
        if (!is_separable(p)) continue;
        UPoly h = UPoly::random_monic(k, rng.below(p.deg() - 1), rng);
        UniFactorization fac = factor_univariate(p, rng);
        Coeff sum = Coeff::zero(k);
        for (const auto& [mi, mult] : fac.factors) {
            TowerCollapse tc = collapse_tower(k, mi);
            Coeff res = laurent_residue(lift_to(h, tc.big), lift_to(p, tc.big), tc.root, mult);
            sum = sum + Coeff::from_scalar(k, field_trace(res));
        }
        CHECK(sum.is_zero());
    }
}

TEST_CASE("section-7 matrix M and kernel") {
    Rng rng(0);
    BPoly f = bxy("y^5+y^4-x*y^3-y^3-2*x*y^2-y^2+x^2+x*y+x");
    PipelineOptions opt;
    CurveContext ctx = build_curve_context(f, opt, rng);
    RecombSystem sys = recombination_system(ctx);
    REQUIRE(sys.M.rows() == 3);
    REQUIRE(sys.M.cols() == 3);
    // row order (-1, 0, 1), column order (y+1, y^2, y^3)
    CHECK(sys.row_labels[0] == uy("y+1"));
    CHECK(sys.row_labels[1] == uy("y"));
    CHECK(sys.row_labels[2] == uy("y-1"));
    Coeff expected[3][3] = {{cq(-1, 2), cq(-1, 4), cq(-1, 4)},
                            {cq(0), cq(0), cq(0)},
                            {cq(1, 2), cq(1, 4), cq(1, 4)}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(sys.M.at(i, j) == expected[i][j]);
    // kernel {(0,1,0), (1,0,1)} as a set; reduced echelon order sorts by pivot
    REQUIRE(sys.left_kernel.rows() == 2);
    CHECK(sys.left_kernel.at(0, 0) == cq(1));
    CHECK(sys.left_kernel.at(0, 1) == cq(0));
    CHECK(sys.left_kernel.at(0, 2) == cq(1));
    CHECK(sys.left_kernel.at(1, 0) == cq(0));
    CHECK(sys.left_kernel.at(1, 1) == cq(1));
    CHECK(sys.left_kernel.at(1, 2) == cq(0));
    CHECK(kernel_is_recombination_basis(sys.left_kernel));
}

TEST_CASE("separable and non-separable paths agree on separable inputs") {
    Field k = Fp(10007);
    Rng rng(3);
    for (int trial = 0; trial < 8; ++trial) {
        BPoly f = random_irreducible_curve(k, 2, rng) * random_irreducible_curve(k, 2, rng);
        UPoly f0 = f.eval_x0();
        if (!is_separable(f0)) continue;
        PipelineOptions opt;
        Rng r2(trial);
        CurveContext ctx = build_curve_context(f, opt, r2);
        RecombSystem sep = build_T_separable(ctx.A, ctx.f0fac, f0.derivative());
        RecombSystem nonsep = build_T_nonseparable(ctx.A, ctx.f0fac, f0);
        CHECK(sep.M == nonsep.M);
        CHECK(sep.left_kernel == nonsep.left_kernel);
    }
}

TEST_CASE("kernel_reduced_echelon") {
    Field k = Q();
    // zero matrix: standard basis
    Mat z(k, 3, 2);
    Mat kz = kernel_reduced_echelon(z);
    CHECK(kz == Mat::identity(k, 3));
    // derived example: single column (-1, 1, 0)
    Mat m(k, 3, 1);
    m.at(0, 0) = cq(-1);
    m.at(1, 0) = cq(1);
    Mat ker = kernel_reduced_echelon(m);
    REQUIRE(ker.rows() == 2);
    CHECK(ker.at(0, 0) == cq(1));
    CHECK(ker.at(0, 1) == cq(1));
    CHECK(ker.at(0, 2) == cq(0));
}

TEST_CASE("recombination dump lists labeled rows and the kernel") {
    Rng rng(0);
    PipelineOptions opt;
    CurveContext ctx = build_curve_context(bxy("(y^2+y+x)*(y-1+x)"), opt, rng);
    std::string dump = recomb_dump(recombination_system(ctx));
    CHECK(dump.find("y+1:") != std::string::npos);
    CHECK(dump.find("kernel:") != std::string::npos);
}

TEST_CASE("build_absolute_system: dimensions, symmetry, constants") {
    Rng rng(0);
    BPoly f = bxy("y^2-2*(x+1)^2");
    PipelineOptions opt;
    CurveContext ctx = build_curve_context(f, opt, rng);
    CHECK(ctx.A.dim() == 0);
    UPoly f0 = ctx.fm.eval_x0();
    AbsoluteSystem sys = build_absolute_system(ctx.A, f0, f0.derivative());
    CHECK(sys.sbar == 2);
    CHECK(sys.L_basis.rows() == 2);  // L = k^2
    // B is symmetric Hankel
    for (std::size_t i = 0; i < sys.B.rows(); ++i)
        for (std::size_t j = 0; j < sys.B.cols(); ++j) CHECK(sys.B.at(i, j) == sys.B.at(j, i));
    // Im(alpha) = all of k[y]/(F0); contains the constant 1
    CHECK(sys.im_alpha.rows() == 2);
    Mat one_row(Q(), 1, 2);
    one_row.at(0, 0) = cq(1);
    Mat sp = sys.im_alpha;
    sp.append_row(one_row.row(0));
    CHECK(rank(sp) == 2);
}

TEST_CASE("dim L = d - dim A on section-7-style separable instances") {
    Field k = Fp(10007);
    Rng rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        BPoly f = random_irreducible_curve(k, 2, rng) * random_irreducible_curve(k, 3, rng);
        UPoly f0 = f.eval_x0();
        if (!is_separable(f0)) continue;
        PipelineOptions opt;
        Rng r2(trial);
        CurveContext ctx = build_curve_context(f, opt, r2);
        AbsoluteSystem sys = build_absolute_system(ctx.A, f0, f0.derivative());
        CHECK(sys.sbar == f.total_degree() - ctx.A.dim());
        // Hankel: entry depends on i+j only
        for (std::size_t i = 0; i + 1 < sys.B.rows(); ++i)
            for (std::size_t j = 1; j < sys.B.cols(); ++j)
                CHECK(sys.B.at(i + 1, j - 1) == sys.B.at(i, j));
    }
}
