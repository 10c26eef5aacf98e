#include "adjfactor/recombine.hpp"

#include <sstream>

#include "adjfactor/parser.hpp"

namespace af {

std::vector<Coeff> trace_powers(const UPoly& f, int count) {
    check(f.is_monic() && f.deg() >= 1, Err::BadInput, "trace_powers needs a monic polynomial");
    const Field& K = f.field();
    int n = f.deg();
    std::vector<Coeff> p;
    p.reserve(count);
    if (count <= 0) return p;
    p.push_back(Coeff::from_int(K, n));
    for (int i = 1; i < count; ++i) {
        Coeff acc = Coeff::zero(K);
        if (i <= n) acc = Coeff::from_int(K, i) * f.get(n - i);
        for (int j = 1; j < i && j <= n; ++j) acc = acc + f.get(n - j) * p[i - j];
        p.push_back(-acc);
    }
    return p;
}

Coeff trace_of(const UPoly& b, const UPoly& f) {
    check(f.is_monic() && f.deg() >= 1, Err::BadInput, "trace_of needs a monic modulus");
    UPoly r = b % f;
    std::vector<Coeff> p = trace_powers(f, f.deg());
    Coeff tr = Coeff::zero(f.field());
    for (int i = 0; i <= r.deg(); ++i) tr = tr + r.get(i) * p[i];
    return tr;
}

RecombSystem build_T_separable(const ASpace& A, const UniFactorization& fac, const UPoly& dFy0) {
    const Field& k = dFy0.field();
    RecombSystem sys;
    std::size_t n = fac.factors.size();
    std::size_t a = A.basis.size();
    sys.M = Mat(k, n, a);
    for (std::size_t i = 0; i < n; ++i) {
        const UPoly& fi = fac.factors[i].first;
        check(fac.factors[i].second == 1, Err::BadInput, "separable path needs multiplicity one");
        sys.row_labels.push_back(fi);
        sys.row_mult.push_back(1);
        UPoly winv = inverse_mod(dFy0, fi);
        for (std::size_t j = 0; j < a; ++j)
            sys.M.at(i, j) = trace_of((A.basis[j] * winv) % fi, fi);
    }
    sys.left_kernel = kernel_reduced_echelon(sys.M);
    return sys;
}

Coeff laurent_residue(const UPoly& h, const UPoly& p, const Coeff& root, int mult) {
    const Field& E = root.field();
    UPoly hE = h.field() == E ? h : lift_to(h, E);
    UPoly pE = p.field() == E ? p : lift_to(p, E);
    check(mult >= 1, Err::BadInput, "multiplicity must be positive");
    check(pE.eval(root).is_zero(), Err::RootMismatch, "P(root) != 0");

    UPoly lin = UPoly::linear_root(root);
    UPoly w = pE;
    for (int i = 0; i < mult; ++i) {
        UPoly q, r;
        divmod(w, lin, q, r);
        check(r.is_zero(), Err::RootMismatch, "root multiplicity smaller than claimed");
        w = q;
    }
    check(!w.eval(root).is_zero(), Err::RootMismatch, "root multiplicity larger than claimed");

    // Taylor coefficient of order mult-1 of H / (P/(y-root)^mult) at the root
    UPoly ws = w.taylor_shift(root).truncate(mult);
    UPoly hs = hE.taylor_shift(root).truncate(mult);
    UPoly r = (hs * series_inv(ws, mult)).truncate(mult);
    return r.get(mult - 1);
}

RecombSystem build_T_nonseparable(const ASpace& A, const UniFactorization& f0_factors,
                                  const UPoly& f0) {
    const Field& k = f0.field();
    RecombSystem sys;
    std::size_t n = f0_factors.factors.size();
    std::size_t a = A.basis.size();
    sys.M = Mat(k, n, a);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [mi, mult] = f0_factors.factors[i];
        sys.row_labels.push_back(mi);
        sys.row_mult.push_back(mult);
        TowerCollapse tc = collapse_tower(k, mi);
        const Field& E = tc.big;
        Coeff rho = tc.root;
        UPoly f0E = lift_to(f0, E);
        for (std::size_t j = 0; j < a; ++j) {
            Coeff res = laurent_residue(lift_to(A.basis[j], E), f0E, rho, mult);
            sys.M.at(i, j) = Coeff::from_scalar(k, field_trace(res));
        }
    }
    sys.left_kernel = kernel_reduced_echelon(sys.M);
    return sys;
}

AbsoluteSystem build_absolute_system(const ASpace& A, const UPoly& f0, const UPoly& dFy0) {
    const Field& k = f0.field();
    int d = f0.deg();
    check(d >= 1, Err::BadInput, "constant polynomial");
    check(f0.is_monic(), Err::BadInput, "F(0,y) must be normalized monic");
    check(is_separable(f0), Err::SingularTraceForm, "F(0,y) not separable");

    AbsoluteSystem sys;
    UPoly winv = inverse_mod(dFy0, f0);
    std::size_t a = A.basis.size();
    Mat N(k, a, d);
    for (std::size_t j = 0; j < a; ++j) {
        UPoly w = (A.basis[j] * winv) % f0;
        for (int i = 0; i < d; ++i) N.at(j, i) = w.get(i);
    }
    sys.L_basis = right_kernel(N);
    sys.sbar = static_cast<int>(sys.L_basis.rows());
    check(sys.sbar == d - static_cast<int>(rank(N)), Err::Internal, "kernel dimension mismatch");

    std::vector<Coeff> pows = trace_powers(f0, 2 * d - 1);
    sys.B = Mat(k, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) sys.B.at(i, j) = pows[i + j];
    check(rank(sys.B) == static_cast<std::size_t>(d), Err::SingularTraceForm,
          "degenerate trace form");

    sys.im_alpha = Mat(k, sys.L_basis.rows(), d);
    for (std::size_t r = 0; r < sys.L_basis.rows(); ++r) {
        std::vector<Coeff> v = sys.L_basis.row(r);
        std::vector<Coeff> w = solve(sys.B, v);
        for (int i = 0; i < d; ++i) sys.im_alpha.at(r, i) = w[i];
    }
    return sys;
}

Mat kernel_reduced_echelon(const Mat& m) { return left_kernel(m); }

bool kernel_is_recombination_basis(const Mat& kernel) {
    if (kernel.rows() == 0) return kernel.cols() == 0;
    const Field& k = kernel.field();
    Coeff one = Coeff::one(k);
    std::vector<int> covered(kernel.cols(), 0);
    for (std::size_t i = 0; i < kernel.rows(); ++i)
        for (std::size_t j = 0; j < kernel.cols(); ++j) {
            const Coeff& c = kernel.at(i, j);
            if (c.is_zero()) continue;
            if (c != one) return false;
            if (covered[j]++) return false;
        }
    for (int c : covered)
        if (!c) return false;
    return true;
}

std::string recomb_dump(const RecombSystem& sys) {
    std::ostringstream os;
    for (std::size_t i = 0; i < sys.M.rows(); ++i) {
        os << sys.row_labels[i].str("y");
        if (sys.row_mult[i] > 1) os << "^" << sys.row_mult[i];
        os << ":";
        for (std::size_t j = 0; j < sys.M.cols(); ++j) os << " " << sys.M.at(i, j).str();
        os << "\n";
    }
    os << "kernel:\n";
    for (std::size_t i = 0; i < sys.left_kernel.rows(); ++i) {
        os << " ";
        for (std::size_t j = 0; j < sys.left_kernel.cols(); ++j)
            os << " " << sys.left_kernel.at(i, j).str();
        os << "\n";
    }
    return os.str();
}

}  // namespace af
