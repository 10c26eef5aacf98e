#include "adjfactor/lifting.hpp"

#include "adjfactor/errors.hpp"

namespace af {

UPoly subset_product(const std::vector<UPoly>& factors, const std::vector<int>& indicator) {
    check(indicator.size() == factors.size(), Err::BadInput, "indicator length mismatch");
    check(!factors.empty(), Err::BadInput, "empty factor list");
    const Field& k = factors[0].field();
    std::vector<UPoly> sel;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (indicator[i]) sel.push_back(factors[i]);
    if (sel.empty()) return UPoly::one(k);
    // balanced product tree
    while (sel.size() > 1) {
        std::vector<UPoly> next;
        for (std::size_t i = 0; i + 1 < sel.size(); i += 2) next.push_back(sel[i] * sel[i + 1]);
        if (sel.size() & 1) next.push_back(sel.back());
        sel = std::move(next);
    }
    return sel[0];
}

namespace {

Series product_all(const std::vector<Series>& g, int prec, const Field& k) {
    Series r = Series::from_bpoly(BPoly::constant(Coeff::one(k)), prec);
    for (const auto& s : g) r = r * s;
    return r;
}

Series product_except(const std::vector<Series>& g, std::size_t skip, int prec, const Field& k) {
    Series r = Series::from_bpoly(BPoly::constant(Coeff::one(k)), prec);
    for (std::size_t j = 0; j < g.size(); ++j)
        if (j != skip) r = r * g[j];
    return r;
}

[[noreturn]] void report_noncoprime(const std::vector<UPoly>& g0) {
    for (std::size_t i = 0; i < g0.size(); ++i)
        for (std::size_t j = i + 1; j < g0.size(); ++j) {
            UPoly g = gcd(g0[i], g0[j]);
            if (g.deg() > 0)
                throw Error(Err::NotCoprime, "factors " + g0[i].str("y") + " and " +
                                                 g0[j].str("y") + " share " + g.str("y"));
        }
    throw Error(Err::NotCoprime, "modular factors not pairwise coprime");
}

}  // namespace

std::vector<BPoly> multifactor_hensel(const BPoly& f, const std::vector<UPoly>& g0, int n,
                                      bool require_exact, const LiftObserver& observer) {
    const Field& k = f.field();
    check(n >= 1, Err::BadInput, "precision must be positive");
    check(!g0.empty(), Err::BadInput, "no factors to lift");
    int d = f.degy();
    check(d >= 0 && f.ycoeff(d) == UPoly::one(k), Err::BadInput, "F must be monic in y");

    UPoly f0 = f.eval_x0();
    UPoly prod = UPoly::one(k);
    for (const auto& g : g0) {
        check(g.is_monic(), Err::BadInput, "initial factors must be monic");
        prod = prod * g;
    }
    check(prod == f0, Err::BadInput, "product of initial factors must be F(0,y)");

    if (g0.size() == 1) {
        std::vector<BPoly> out{Series::from_bpoly(f, n).to_bpoly()};
        if (require_exact) check(out[0] == f, Err::LiftMismatch, "lift does not reproduce F");
        if (observer) observer(n, {Series::from_bpoly(f, n)});
        return out;
    }

    const int prec = n;
    Series fs = Series::from_bpoly(f, prec);
    std::vector<Series> g;
    g.reserve(g0.size());
    for (const auto& gi : g0) g.push_back(Series::from_bpoly(BPoly::from_upoly_in_y(gi), prec));

    // Bezout cofactors sigma_i with sigma_i * prod_{j != i} G_j = 1 mod (G_i, x^m)
    std::vector<Series> sigma;
    sigma.reserve(g0.size());
    for (std::size_t i = 0; i < g0.size(); ++i) {
        UPoly pi0 = UPoly::one(k);
        for (std::size_t j = 0; j < g0.size(); ++j)
            if (j != i) pi0 = (pi0 * g0[j]) % g0[i];
        UPoly inv;
        try {
            inv = inverse_mod(pi0, g0[i]);
        } catch (const NotInvertibleError&) {
            report_noncoprime(g0);
        }
        sigma.push_back(Series::from_bpoly(BPoly::from_upoly_in_y(inv), prec));
    }

    Series two = Series::from_bpoly(BPoly::constant(Coeff::from_int(k, 2)), prec);
    int m = 1;
    while (m < n) {
        int m2 = std::min(2 * m, n);
        // factor update: G_i += sigma_i * (F - prod G) mod G_i
        Series e = fs - product_all(g, prec, k);
        bool enonzero = !e.is_zero();
        if (enonzero) {
            for (std::size_t i = 0; i < g.size(); ++i) {
                Series q, r;
                divmod_y(sigma[i] * e, g[i], q, r);
                g[i] = g[i] + r;
            }
        }
        // cofactor update: sigma_i <- sigma_i (2 - Pi_i sigma_i) mod G_i
        for (std::size_t i = 0; i < g.size(); ++i) {
            Series pi = product_except(g, i, prec, k);
            Series q, r;
            divmod_y(sigma[i] * (two - pi * sigma[i]), g[i], q, r);
            sigma[i] = r;
        }
        if (observer) {
            std::vector<Series> snapshot;
            snapshot.reserve(g.size());
            for (const auto& s : g) snapshot.push_back(s.with_precision(m2));
            observer(m2, snapshot);
        }
        m = m2;
    }

    std::vector<BPoly> out;
    out.reserve(g.size());
    for (const auto& s : g) out.push_back(s.to_bpoly());
    if (require_exact) {
        BPoly prod2 = BPoly::constant(Coeff::one(k));
        for (const auto& gi : out) prod2 = prod2 * gi;
        check(prod2 == f, Err::LiftMismatch,
              "lifted product does not reproduce F exactly (wrong recombination)");
    }
    return out;
}

}  // namespace af
