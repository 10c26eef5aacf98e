#include "adjfactor/absolute.hpp"

#include "adjfactor/unifactor.hpp"

namespace af {

UPoly generic_section(const AbsoluteSystem& sys, const std::vector<Coeff>& c, const Field& k) {
    check(c.size() == sys.im_alpha.rows(), Err::BadInput, "coefficient vector size mismatch");
    std::vector<Coeff> rep(sys.im_alpha.cols(), Coeff::zero(k));
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < sys.im_alpha.cols(); ++i)
            rep[i] = rep[i] + c[j] * sys.im_alpha.at(j, i);
    return UPoly(k, std::move(rep));
}

UPoly minimal_polynomial(const UPoly& mu, const UPoly& p) {
    const Field& k = p.field();
    check(p.deg() >= 1 && p.is_monic(), Err::BadInput, "modulus must be monic of degree >= 1");
    int d = p.deg();
    UPoly m = mu % p;
    std::vector<UPoly> pows{UPoly::one(k)};
    for (int s = 1; s <= d; ++s) pows.push_back((pows.back() * m) % p);
    for (int s = 1; s <= d; ++s) {
        Mat a(k, d, s);
        for (int j = 0; j < s; ++j)
            for (int i = 0; i < d; ++i) a.at(i, j) = pows[j].get(i);
        std::vector<Coeff> b(d, Coeff::zero(k));
        for (int i = 0; i < d; ++i) b[i] = pows[s].get(i);
        // mu^s in the span of lower powers?
        Mat aug(k, d, s + 1);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < s; ++j) aug.at(i, j) = a.at(i, j);
            aug.at(i, s) = b[i];
        }
        if (rank(aug) != rank(a)) continue;
        std::vector<Coeff> x = solve(a, b);
        std::vector<Coeff> qc(s + 1, Coeff::zero(k));
        for (int j = 0; j < s; ++j) qc[j] = -x[j];
        qc[s] = Coeff::one(k);
        return UPoly(k, std::move(qc));
    }
    throw Error(Err::Internal, "no minimal polynomial found");
}

BPoly ext_norm(const BPoly& q_poly, const Field& ext) {
    const FieldDesc base = q_poly.field().desc();
    Field k = base.kind == FieldKind::Rationals ? Field::rationals() : Field::prime(base.modulus);
    if (!ext.is_ext()) return q_poly;
    int s = ext.ext_degree();
    const detail::SVec& minp = ext.ext().minpoly;

    // components of Q over the power basis of t
    std::vector<BPoly> comp(s, BPoly::zero(k));
    for (int j = 0; j <= q_poly.degy(); ++j)
        for (int i = 0; i <= q_poly.ycoeff(j).deg(); ++i) {
            Coeff c = q_poly.coeff(i, j);
            const auto& rep = c.rep();
            for (std::size_t r = 0; r < rep.size(); ++r) {
                std::vector<UPoly> yc(j + 1, UPoly::zero(k));
                yc[j] = UPoly::monomial(k, i, Coeff::from_scalar(k, rep[r]));
                comp[r] = comp[r] + BPoly(k, std::move(yc));
            }
        }

    // multiplication matrix: column l holds the components of Q * t^l
    std::vector<std::vector<BPoly>> m(s, std::vector<BPoly>(s, BPoly::zero(k)));
    std::vector<BPoly> cur = comp;
    for (int l = 0; l < s; ++l) {
        for (int r = 0; r < s; ++r) m[r][l] = cur[r];
        if (l + 1 < s) {
            // multiply by t modulo the minimal polynomial
            std::vector<BPoly> next(s, BPoly::zero(k));
            for (int r = 0; r + 1 < s; ++r) next[r + 1] = cur[r];
            const BPoly& top = cur[s - 1];
            for (int r = 0; r < s; ++r)
                next[r] = next[r] - top.scale(Coeff::from_scalar(k, minp[r]));
            cur = std::move(next);
        }
    }
    return bareiss_det(m, BPolyRing{k});
}

AbsoluteFactorization absolute_split(const BPoly& f, const UPoly& mu, const UPoly& q, Rng& rng) {
    const Field& k = f.field();
    int d = f.degy();
    check(d >= 1 && f.ycoeff(d) == UPoly::one(k), Err::BadInput, "F must be monic in y");
    check(q.is_monic() && q.deg() >= 1, Err::BadInput, "q must be monic");
    check(is_separable(q), Err::NotSeparating, "minimal polynomial not squarefree");
    UPoly f0 = f.eval_x0();

    AbsoluteFactorization out{Coeff::one(k), {}};
    UniFactorization qfac = factor_univariate(q, rng);

    int degree_seen = 0;
    for (const auto& [qi, mult] : qfac.factors) {
        check(mult == 1, Err::NotSeparating, "minimal polynomial not squarefree");
        TowerCollapse tc = collapse_tower(k, qi);
        const Field& Ki = tc.big;
        Coeff tau = tc.root;
        UPoly f0i = lift_to(f0, Ki);
        UPoly mui = lift_to(mu, Ki);
        UPoly gi = gcd(f0i, mui - UPoly::constant(tau));
        if (gi.deg() < 1) throw Error(Err::VerificationFailed, "level set of the section is empty");
        degree_seen += qi.deg() * gi.deg();

        BPoly fi = base_embedding(k, Ki)(f);
        std::vector<BPoly> lifted;
        if (gi.deg() == d) {
            lifted = {fi};
        } else {
            UPoly hi = exact_div(f0i, gi);
            if (gcd(gi, hi).deg() != 0)
                throw Error(Err::VerificationFailed, "level sets not coprime");
            try {
                lifted = multifactor_hensel(fi, {gi, hi}, d + 1, /*require_exact=*/true);
            } catch (const Error& e) {
                if (e.code() == Err::LiftMismatch)
                    throw Error(Err::VerificationFailed, "grouping did not lift to a factor");
                throw;
            }
        }
        out.pairs.push_back(AbsolutePair{qi, Ki, lifted[0]});
    }
    if (degree_seen != d)
        throw Error(Err::NotSeparating, "section does not separate the absolute factors");

    // exact product identity over k
    BPoly prod = BPoly::constant(Coeff::one(k));
    for (const auto& pr : out.pairs) prod = prod * ext_norm(pr.Q, pr.ext);
    if (prod != f) throw Error(Err::VerificationFailed, "absolute product identity failed");
    return out;
}

}  // namespace af
