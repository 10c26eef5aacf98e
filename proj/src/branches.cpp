#include "adjfactor/branches.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

#include "adjfactor/parser.hpp"
#include "adjfactor/unifactor.hpp"

namespace af {

namespace {

int ord_upoly(const UPoly& u) {
    for (int i = 0; i <= u.deg(); ++i)
        if (!u.get(i).is_zero()) return i;
    return -1;
}

int local_multiplicity(const BPoly& g) {
    int m = INT_MAX;
    for (int j = 0; j <= g.degy(); ++j) {
        int o = ord_upoly(g.ycoeff(j));
        if (o >= 0) m = std::min(m, o + j);
    }
    return m == INT_MAX ? -1 : m;
}

Coeff signed_pow(const Coeff& c, long e) {
    if (e >= 0) return c.pow(mpz_class(e));
    return c.pow(mpz_class(-e)).inv();
}

void bezout_int(int e, int q, long& a, long& b) {
    // a*e + b*q = 1
    long r0 = e, r1 = q, a0 = 1, a1 = 0, b0 = 0, b1 = 1;
    while (r1 != 0) {
        long k = r0 / r1;
        std::tie(r0, r1) = std::make_tuple(r1, r0 - k * r1);
        std::tie(a0, a1) = std::make_tuple(a1, a0 - k * a1);
        std::tie(b0, b1) = std::make_tuple(b1, b0 - k * b1);
    }
    check(r0 == 1, Err::Internal, "edge exponents not coprime");
    a = a0;
    b = b0;
}

Embedding compose_emb(const Embedding& outer, const Embedding& inner) {
    const Field& A = inner.from();
    if (!A.is_ext()) return base_embedding(A, outer.to());
    return Embedding(A, outer.to(), outer(inner(Coeff::gen(A))));
}

// H(s, Y = yser(s)) mod s^prec
UPoly eval_at_series(const BPoly& h, const UPoly& yser, int prec) {
    UPoly r = UPoly::zero(h.field());
    for (int j = h.degy(); j >= 0; --j) r = (r * yser).truncate(prec) + h.ycoeff(j).truncate(prec);
    if (h.degy() < 0) return r;
    return r.truncate(prec);
}

// unique series with g(s, y(s)) = 0 mod s^trunc; needs g(0,0) = 0 and
// dg/dY(0,0) invertible
UPoly newton_series(const BPoly& g, int trunc) {
    const Field& K = g.field();
    check(g.eval(Coeff::zero(K), Coeff::zero(K)).is_zero(), Err::Internal, "newton: not a root");
    BPoly gy = g.derivative_y();
    check(!gy.eval(Coeff::zero(K), Coeff::zero(K)).is_zero(), Err::Internal, "newton: singular root");
    UPoly y = UPoly::zero(K);
    int prec = 1;
    while (prec < trunc) {
        prec = std::min(2 * prec, trunc);
        UPoly gv = eval_at_series(g, y, prec);
        if (gv.is_zero()) break;  // exact root already
        UPoly gyv = eval_at_series(gy, y, prec);
        y = (y - gv * series_inv(gyv, prec)).truncate(prec);
    }
    return y;
}

struct Leaf {
    Field ext;
    Embedding from_start;
    int e = 1;
    Coeff xunit;
    UPoly yser;
    int rel = 1;
};

// rational Newton-Puiseux: branches (U(t), V(t)) of G = 0 with V -> 0,
// U = unit * t^e; keeps every leaf over the minimal extension
std::vector<Leaf> np_rec(const BPoly& g_in, const Field& K, int trunc, Rng& rng, int depth) {
    check(depth < 256, Err::Internal, "Newton-Puiseux recursion too deep");
    std::vector<Leaf> out;
    BPoly g = g_in;

    if (g.degy() >= 0 && g.ycoeff(0).is_zero()) {
        // V divides G once (the curve is reduced): the branch V = 0
        out.push_back(Leaf{K, Embedding::identity(K), 1, Coeff::one(K), UPoly::zero(K), 1});
        std::vector<UPoly> rest(g.ycoeffs().begin() + 1, g.ycoeffs().end());
        g = BPoly(K, std::move(rest));
        check(g.degy() < 0 || !g.ycoeff(0).is_zero(), Err::Internal, "curve not reduced at point");
    }
    if (g.is_zero() || !g.eval(Coeff::zero(K), Coeff::zero(K)).is_zero()) return out;

    check(ord_upoly(g.ycoeff(g.degy())) != -1, Err::Internal, "degenerate local equation");

    // Newton polygon data
    std::vector<int> iu(g.degy() + 1, -1);
    for (int j = 0; j <= g.degy(); ++j) iu[j] = ord_upoly(g.ycoeff(j));
    check(iu[0] >= 1, Err::Internal, "expected a singular constant term");
    int jstar = -1;
    for (int j = 1; j <= g.degy(); ++j)
        if (iu[j] == 0) {
            jstar = j;
            break;
        }
    check(jstar >= 1, Err::Internal, "no finite Newton polygon endpoint");

    // lower convex hull of (j, iu[j]) for j = 0..jstar
    std::vector<std::pair<int, int>> hull;  // (j, i)
    for (int j = 0; j <= jstar; ++j) {
        if (iu[j] < 0) continue;
        std::pair<int, int> pt{j, iu[j]};
        while (hull.size() >= 2) {
            auto [j1, i1] = hull[hull.size() - 2];
            auto [j2, i2] = hull[hull.size() - 1];
            // drop (j2,i2) if on or above the segment (j1,i1)-(pt)
            long lhs = static_cast<long>(pt.first - j1) * (i2 - i1);
            long rhs = static_cast<long>(j2 - j1) * (pt.second - i1);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }

    for (std::size_t edge = 0; edge + 1 < hull.size(); ++edge) {
        auto [j_lo, i_lo] = hull[edge];
        auto [j_hi, i_hi] = hull[edge + 1];
        int dj = j_hi - j_lo, di = i_lo - i_hi;
        check(dj > 0 && di > 0, Err::Internal, "bad Newton polygon edge");
        int gg = std::gcd(dj, di);
        int e = dj / gg, q = di / gg;
        if (K.characteristic() != 0)
            check(e % static_cast<int>(K.characteristic()) != 0, Err::CharacteristicTooSmall,
                  "ramification divisible by the characteristic");

        // edge polynomial in w = V^e / U^q
        std::vector<Coeff> phi(gg + 1, Coeff::zero(K));
        for (int l = 0; l <= gg; ++l) phi[l] = g.coeff(i_lo - l * q, j_lo + l * e);
        UPoly phihat(K, std::move(phi));
        check(!phihat.get(0).is_zero() && phihat.deg() == gg, Err::Internal, "bad edge polynomial");

        UniFactorization fac = factor_univariate(phihat, rng);
        for (const auto& [psi, mult] : fac.factors) {
            TowerCollapse tc = collapse_tower(K, psi);
            const Field& K2 = tc.big;
            Coeff w0 = tc.root;
            long a, b;
            bezout_int(e, q, a, b);
            Coeff mu = signed_pow(w0, -b);
            Coeff la = signed_pow(w0, a);
            BPoly gk = tc.embed(g);

            // G'(s, Y') = G(mu*s^e, la*s^q*(1+Y')) / s^(e*i_lo + q*j_lo), truncated
            int v0 = e * i_lo + q * j_lo;
            int strunc = std::max(trunc, 4);
            int dy = gk.degy();
            std::vector<std::vector<Coeff>> binom(dy + 1);
            for (int n = 0; n <= dy; ++n) {
                binom[n].assign(n + 1, Coeff::one(K2));
                for (int r = 1; r < n; ++r) binom[n][r] = binom[n - 1][r - 1] + binom[n - 1][r];
            }
            std::vector<std::vector<Coeff>> grid(dy + 1,
                                                 std::vector<Coeff>(strunc, Coeff::zero(K2)));
            for (int j = 0; j <= dy; ++j) {
                const UPoly& u = gk.ycoeff(j);
                Coeff lay = signed_pow(la, j);
                for (int i = 0; i <= u.deg(); ++i) {
                    Coeff c = u.get(i);
                    if (c.is_zero()) continue;
                    int spow = e * i + q * j - v0;
                    check(spow >= 0, Err::Internal, "edge valuation not minimal");
                    if (spow >= strunc) continue;
                    Coeff cc = c * signed_pow(mu, i) * lay;
                    for (int jj = 0; jj <= j; ++jj)
                        grid[jj][spow] = grid[jj][spow] + cc * binom[j][jj];
                }
            }
            std::vector<UPoly> ycs;
            ycs.reserve(dy + 1);
            for (int j = 0; j <= dy; ++j) ycs.push_back(UPoly(K2, grid[j]));
            BPoly gprime(K2, std::move(ycs));

            if (mult == 1) {
                UPoly ytail = newton_series(gprime, trunc);
                UPoly one_plus = UPoly::one(K2) + ytail;
                Leaf lf;
                lf.ext = K2;
                lf.from_start = tc.embed;
                lf.e = e;
                lf.xunit = mu;
                lf.yser = one_plus.shift_up(q).scale(la).truncate(trunc);
                lf.rel = psi.deg();
                out.push_back(lf);
            } else {
                for (const Leaf& sub : np_rec(gprime, K2, trunc, rng, depth + 1)) {
                    Leaf lf;
                    lf.ext = sub.ext;
                    lf.from_start = compose_emb(sub.from_start, tc.embed);
                    lf.e = e * sub.e;
                    Coeff mu2 = sub.from_start(mu);
                    Coeff la2 = sub.from_start(la);
                    lf.xunit = mu2 * sub.xunit.pow(e);
                    UPoly one_plus = UPoly::one(sub.ext) + sub.yser;
                    lf.yser = one_plus.shift_up(q * sub.e)
                                  .scale(la2 * sub.xunit.pow(q))
                                  .truncate(trunc);
                    lf.rel = psi.deg() * sub.rel;
                    out.push_back(lf);
                }
            }
        }
    }
    return out;
}

}  // namespace

int default_truncation(int d) { return d + 4; }

UPoly branch_substitute(const BPoly& h, const PuiseuxBranch& b) {
    const Field& E = b.ext;
    check(h.field() == E, Err::FieldMismatch, "substitute: embed the polynomial first");
    UPoly r = UPoly::zero(E);
    for (int j = h.degy(); j >= 0; --j) {
        r = (r * b.yseries).truncate(b.trunc);
        const UPoly& u = h.ycoeff(j);
        if (u.is_zero()) continue;
        std::vector<Coeff> term(std::min(b.trunc, u.deg() * b.e + 1), Coeff::zero(E));
        for (int i = 0; i <= u.deg(); ++i) {
            if (u.get(i).is_zero()) continue;
            if (i * b.e >= b.trunc) break;
            term[i * b.e] = u.get(i) * b.xunit.pow(i);
        }
        r = r + UPoly(E, std::move(term));
    }
    return r.truncate(b.trunc);
}

namespace {

// invariants for one leaf; throws TruncationInsufficient when trunc is too low
PuiseuxBranch finish_branch(const BPoly& local, const Leaf& lf, int trunc, int curve_deg) {
    PuiseuxBranch b;
    b.ext = lf.ext;
    b.from_pt = lf.from_start;
    b.e = lf.e;
    b.xunit = lf.xunit;
    b.yseries = lf.yser;
    b.trunc = trunc;
    if (b.e == 1 && !b.xunit.is_one()) {
        // reparametrize t -> t/xunit, possible rationally when unramified:
        // the coefficient of t^m scales by xunit^(-m)
        Coeff inv = b.xunit.inv();
        std::vector<Coeff> c;
        Coeff pw = Coeff::one(b.ext);
        for (int m = 0; m <= b.yseries.deg(); ++m) {
            c.push_back(b.yseries.get(m) * pw);
            pw = pw * inv;
        }
        b.yseries = UPoly(b.ext, std::move(c));
        b.xunit = Coeff::one(b.ext);
    }
    b.rel_deg = lf.rel;
    b.xprime_val = lf.e - 1;

    BPoly gv = lf.from_start(local.derivative_y());
    UPoly sub = branch_substitute(gv, b);
    int fy = ord_upoly(sub);
    check(fy >= 0, Err::TruncationInsufficient, "dG/dV vanishes to truncation order");
    check(trunc > fy + curve_deg + 1, Err::TruncationInsufficient, "insufficient margin");
    b.fy_val = fy;

    // 2*delta from the exponents of the y-series: sum over j of the least
    // exponent m with nonzero coefficient and j*m not divisible by e
    int twodelta = 0;
    for (int j = 1; j < b.e; ++j) {
        int found = -1;
        for (int m = 0; m <= b.yseries.deg(); ++m) {
            if (b.yseries.get(m).is_zero()) continue;
            if ((static_cast<long>(j) * m) % b.e != 0) {
                found = m;
                break;
            }
        }
        check(found >= 0, Err::TruncationInsufficient, "delta exponents not visible");
        twodelta += found;
    }
    if (b.e > 1) twodelta -= (b.e - 1);
    b.delta2 = twodelta;
    b.vcond = std::max(0, b.fy_val - b.xprime_val - b.delta2);
    return b;
}

}  // namespace

std::vector<PuiseuxBranch> puiseux_branches(const SingPoint& p, int trunc, Rng& rng) {
    int d = std::max(p.local.total_degree(), 2);
    int T = std::max(trunc, 4);
    for (int attempt = 0; attempt < 24; ++attempt) {
        try {
            std::vector<Leaf> leaves = np_rec(p.local, p.pt_field, T, rng, 0);
            std::vector<PuiseuxBranch> out;
            out.reserve(leaves.size());
            for (const auto& lf : leaves) out.push_back(finish_branch(p.local, lf, T, d));
            return out;
        } catch (const Error& e) {
            if (e.code() != Err::TruncationInsufficient) throw;
            T *= 2;
        }
    }
    throw Error(Err::Internal, "truncation did not stabilize");
}

std::vector<PuiseuxBranch> puiseux_branches_at(const BPoly& f, const Field& pt_field,
                                               const Coeff& x0, const Coeff& y0, int trunc,
                                               Rng& rng) {
    BPoly fl = f.field() == pt_field ? f : base_embedding(f.field(), pt_field)(f);
    SingPoint p;
    p.at_infinity = false;
    p.pt_field = pt_field;
    p.x0 = x0;
    p.y0 = y0;
    p.local = fl.translate(x0, y0);
    p.multiplicity = local_multiplicity(p.local);
    check(p.multiplicity >= 1, Err::BadInput, "point not on the curve");
    return puiseux_branches(p, trunc, rng);
}

bool locally_irreducible(const BPoly& f, const Field& pt_field, const Coeff& x0, const Coeff& y0,
                         Rng& rng) {
    BPoly fl = f.field() == pt_field ? f : base_embedding(f.field(), pt_field)(f);
    check(fl.eval(x0, y0).is_zero(), Err::BadInput, "point not on the curve");
    if (!fl.derivative_x().eval(x0, y0).is_zero() || !fl.derivative_y().eval(x0, y0).is_zero())
        return true;  // smooth point
    auto branches = puiseux_branches_at(f, pt_field, x0, y0,
                                        default_truncation(f.total_degree()), rng);
    int total = 0;
    for (const auto& b : branches) total += b.rel_deg;
    return total == 1;
}

namespace {

Field make_cluster_field(const Field& base, const UPoly& minpoly, Coeff& root_out) {
    TowerCollapse tc = collapse_tower(base, minpoly);
    root_out = tc.root;
    return tc.big;
}

}  // namespace

std::vector<SingPoint> singular_points(const BPoly& f, Rng& rng) {
    const Field& k = f.field();
    int d = f.total_degree();
    check(d >= 1, Err::BadInput, "singular points of a constant");
    std::vector<SingPoint> out;
    if (d == 1) return out;

    BPoly fy = f.derivative_y();
    BPoly fx = f.derivative_x();
    check(fy.degy() >= 0, Err::NonSquarefree, "dF/dy vanishes identically");
    UPoly disc = fy.degy() >= 1 ? resultant_y(f, fy) : UPoly::one(k);
    check(!disc.is_zero(), Err::NonSquarefree, "gcd(F, dF/dy) over k(x) is nonconstant");

    // affine singular clusters
    if (disc.deg() >= 1) {
        UPoly dsq = exact_div(disc, gcd(disc, disc.derivative()));
        UniFactorization xfac = factor_univariate(dsq, rng);
        for (const auto& [mx, mult_ignored] : xfac.factors) {
            Coeff xr;
            Field K1 = make_cluster_field(k, mx, xr);
            Embedding toK1 = base_embedding(k, K1);
            BPoly f1 = toK1(f);
            UPoly fy_at = f1.derivative_y().eval_x(xr);
            UPoly f_at = f1.eval_x(xr);
            UPoly mroots = gcd(f_at, fy_at);
            if (mroots.deg() < 1) continue;
            UniFactorization yfac = factor_univariate(mroots, rng);
            for (const auto& [my, m2] : yfac.factors) {
                TowerCollapse tc = collapse_tower(K1, my);
                const Field& L = tc.big;
                Coeff yr = tc.root;
                Coeff xrL = tc.embed(xr);
                BPoly fL = base_embedding(k, L)(f);
                if (!fL.derivative_x().eval(xrL, yr).is_zero()) continue;  // smooth, vertical tangent
                SingPoint p;
                p.at_infinity = false;
                p.pt_field = L;
                p.x0 = xrL;
                p.y0 = yr;
                p.local = fL.translate(xrL, yr);
                p.multiplicity = local_multiplicity(p.local);
                check(p.multiplicity >= 2, Err::Internal, "singular point of multiplicity < 2");
                out.push_back(std::move(p));
            }
        }
    }

    // points at infinity: (1 : r : 0) for multiple roots r of the leading form
    std::vector<Coeff> finf_c(d + 1, Coeff::zero(k));
    for (int j = 0; j <= std::min(d, f.degy()); ++j) finf_c[j] = f.coeff(d - j, j);
    UPoly finf(k, std::move(finf_c));
    check(finf.deg() == d, Err::BadInput, "leading form must have full y-degree");
    UPoly rep = gcd(finf, finf.derivative());
    if (rep.deg() >= 1) {
        BPoly chart = inf_chart(f);  // variables (z, y)
        UPoly repsq = exact_div(rep, gcd(rep, rep.derivative()));
        UniFactorization rfac = factor_univariate(repsq, rng);
        for (const auto& [mr, mm] : rfac.factors) {
            Coeff r;
            Field K = make_cluster_field(k, mr, r);
            BPoly chartK = base_embedding(k, K)(chart);
            BPoly local = chartK.translate(Coeff::zero(K), r);
            int mult = local_multiplicity(local);
            if (mult < 2) continue;  // smooth tangency with the line at infinity
            SingPoint p;
            p.at_infinity = true;
            p.pt_field = K;
            p.x0 = Coeff::zero(K);
            p.y0 = r;
            p.local = std::move(local);
            p.multiplicity = mult;
            out.push_back(std::move(p));
        }
    }
    return out;
}

namespace {

std::string minpoly_str(const Field& f, const std::string& var) {
    if (!f.is_ext()) return "1";
    Field fb = f.desc().kind == FieldKind::Rationals ? Field::rationals()
                                                     : Field::prime(f.desc().modulus);
    std::vector<Coeff> mc;
    for (const auto& s : f.ext().minpoly) mc.push_back(Coeff::from_scalar(fb, s));
    return UPoly(fb, std::move(mc)).str(var);
}

}  // namespace

std::string SingPoint::describe() const {
    std::ostringstream os;
    if (at_infinity)
        os << "(1 : " << y0.str("u") << " : 0)";
    else
        os << "(" << x0.str("u") << ", " << y0.str("u") << ")";
    if (pt_field.is_ext()) os << " over k[u]/(" << minpoly_str(pt_field, "u") << ")";
    os << "; mult " << multiplicity;
    return os.str();
}

std::string branch_dump(const SingPoint& p, const std::vector<PuiseuxBranch>& branches) {
    std::ostringstream os;
    for (const auto& b : branches) {
        os << (p.at_infinity ? "(1 : " + p.y0.str("u") + " : 0)"
                             : "(" + p.x0.str("u") + ", " + p.y0.str("u") + ")");
        os << "; " << minpoly_str(b.ext, "u") << "; " << b.e << "; " << b.yseries.str("t") << "\n";
    }
    return os.str();
}

}  // namespace af
