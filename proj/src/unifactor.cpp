#include "adjfactor/unifactor.hpp"

#include <algorithm>
#include <map>

namespace af {

UPoly UniFactorization::expand() const {
    UPoly r = UPoly::constant(unit);
    for (const auto& [f, m] : factors) r = r * pow_upoly(f, m);
    return r;
}

bool is_separable(const UPoly& f) {
    check(!f.is_zero(), Err::BadInput, "separability of the zero polynomial");
    if (f.deg() <= 0) return true;
    UPoly d = f.derivative();
    if (d.is_zero()) return false;
    return gcd(f, d).deg() == 0;
}

namespace {

mpz_class field_size(const Field& f) {
    check(f.desc().kind == FieldKind::PrimeField, Err::BadInput, "finite field expected");
    mpz_class q = 1;
    for (int i = 0; i < f.ext_degree(); ++i) q *= static_cast<unsigned long>(f.desc().modulus);
    return q;
}

// f(y) = g(y^p): recover g, taking p-th roots of coefficients
UPoly pth_root_poly(const UPoly& f) {
    const Field& K = f.field();
    std::uint64_t p = K.characteristic();
    check(p != 0, Err::Internal, "p-th root in characteristic zero");
    std::vector<Coeff> c;
    for (int i = 0; i <= f.deg(); ++i) {
        if (i % static_cast<int>(p) == 0) {
            c.push_back(f.get(i).pth_root());
        } else {
            check(f.get(i).is_zero(), Err::Internal, "not a p-th power");
        }
    }
    return UPoly(K, std::move(c));
}

void sfd_char_p(const UPoly& f, int outer_mult, std::vector<std::pair<UPoly, int>>& out) {
    const Field& K = f.field();
    int p = static_cast<int>(K.characteristic());
    UPoly d = f.derivative();
    if (d.is_zero()) {
        sfd_char_p(pth_root_poly(f), outer_mult * p, out);
        return;
    }
    UPoly w = gcd(f, d);
    UPoly c = exact_div(f, w);
    int i = 1;
    while (c.deg() > 0) {
        UPoly y = gcd(w, c);
        UPoly z = exact_div(c, y);
        if (z.deg() > 0) out.emplace_back(z, i * outer_mult);
        c = y;
        w = exact_div(w, y);
        ++i;
    }
    if (w.deg() > 0) sfd_char_p(pth_root_poly(w), outer_mult * p, out);
}

void sfd_char_0(const UPoly& f, std::vector<std::pair<UPoly, int>>& out) {
    // Yun
    UPoly d = f.derivative();
    UPoly g = gcd(f, d);
    UPoly w = exact_div(f, g);
    UPoly s = exact_div(d, g);
    int i = 1;
    while (w.deg() > 0) {
        UPoly z = s - w.derivative();
        UPoly h = gcd(w, z);
        if (h.deg() > 0) out.emplace_back(h, i);
        w = exact_div(w, h);
        s = exact_div(z, h);
        ++i;
    }
}

// ------------------------------------------------------------ F_q path

std::vector<std::pair<UPoly, int>> ddf(const UPoly& f) {
    // distinct-degree factorization of a squarefree monic f; returns
    // (product-of-irreducibles, their common degree)
    const Field& K = f.field();
    mpz_class q = field_size(K);
    std::vector<std::pair<UPoly, int>> out;
    UPoly rest = f;
    UPoly h = UPoly::monomial(K, 1, Coeff::one(K));  // y
    const UPoly y = h;
    int d = 0;
    while (rest.deg() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, q, rest);
        UPoly g = gcd(h - y, rest);
        if (g.deg() > 0) {
            out.emplace_back(g, d);
            rest = exact_div(rest, g);
            h = h % rest;
        }
    }
    if (rest.deg() > 0) out.emplace_back(rest, rest.deg());
    return out;
}

void edf(const UPoly& f, int d, Rng& rng, std::vector<UPoly>& out) {
    // equal-degree splitting (Cantor-Zassenhaus); f squarefree monic,
    // all irreducible factors of degree d
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    const Field& K = f.field();
    mpz_class q = field_size(K);
    bool odd = K.desc().modulus != 2;
    mpz_class e;
    if (odd) {
        mpz_class qd = 1;
        for (int i = 0; i < d; ++i) qd *= q;
        e = (qd - 1) / 2;
    }
    for (;;) {
        UPoly a = UPoly::random_monic(K, 1 + static_cast<int>(rng.below(f.deg() - 1)), rng);
        UPoly b;
        if (odd) {
            b = powmod(a, e, f) - UPoly::one(K);
        } else {
            // additive trace over F_2
            int steps = d * K.ext_degree();
            UPoly t = a % f;
            UPoly acc = t;
            for (int i = 1; i < steps; ++i) {
                t = (t * t) % f;
                acc = acc + t;
            }
            b = acc;
        }
        UPoly g = gcd(b, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            edf(g, d, rng, out);
            edf(exact_div(f, g), d, rng, out);
            return;
        }
    }
}

UniFactorization factor_fq(const UPoly& f, Rng& rng) {
    const Field& K = f.field();
    UniFactorization r{f.lc(), {}};
    if (f.deg() == 0) return r;
    UPoly g = f.monic();
    std::vector<std::pair<UPoly, int>> sf;
    sfd_char_p(g, 1, sf);
    for (const auto& [part, mult] : sf) {
        for (const auto& [prod, d] : ddf(part)) {
            std::vector<UPoly> irr;
            edf(prod, d, rng, irr);
            for (const auto& p : irr) r.factors.emplace_back(p, mult);
        }
    }
    canonical_sort(r.factors);
    return r;
}

bool is_irreducible_fq_impl(const UPoly& f) {
    const Field& K = f.field();
    int n = f.deg();
    if (n <= 0) return false;
    if (n == 1) return true;
    mpz_class q = field_size(K);
    const UPoly y = UPoly::monomial(K, 1, Coeff::one(K));
    mpz_class qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    if (powmod(y, qn, f) != y % f) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0) continue;
        bool prime = true;
        for (int s = 2; s * s <= r; ++s)
            if (r % s == 0) prime = false;
        if (!prime) continue;
        mpz_class qm = 1;
        for (int i = 0; i < n / r; ++i) qm *= q;
        if (gcd(powmod(y, qm, f) - y, f).deg() != 0) return false;
    }
    return true;
}

// ------------------------------------------------------------ Q path

struct ZPoly {
    std::vector<mpz_class> c;  // little-endian

    int deg() const { return static_cast<int>(c.size()) - 1; }
    void strip() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

ZPoly to_zpoly_primitive(const UPoly& f, mpq_class& unit_out) {
    // f = unit_out * primitive(f_Z) with positive leading coefficient
    mpz_class den = 1;
    for (int i = 0; i <= f.deg(); ++i) den = lcm(den, f.get(i).scalar().rat().get_den());
    ZPoly z;
    z.c.resize(f.deg() + 1);
    mpz_class content = 0;
    for (int i = 0; i <= f.deg(); ++i) {
        mpq_class v = f.get(i).scalar().rat() * den;
        z.c[i] = v.get_num();
        content = gcd(content, z.c[i]);
    }
    if (content == 0) content = 1;
    if (z.c.back() < 0) content = -content;
    for (auto& x : z.c) x /= content;
    unit_out = mpq_class(content, den);
    unit_out.canonicalize();
    return z;
}

UPoly from_zpoly(const ZPoly& z, const Field& f) {
    std::vector<Coeff> c;
    c.reserve(z.c.size());
    for (const auto& x : z.c) c.push_back(Coeff::from_scalar(f, Scalar::from_mpz(f.desc(), x)));
    return UPoly(f, std::move(c));
}

mpz_class sym_rem(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

struct ModPoly {
    std::vector<mpz_class> c;
    int deg() const { return static_cast<int>(c.size()) - 1; }
};

void mp_strip(ModPoly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, const mpz_class& m) {
    if (a.c.empty() || b.c.empty()) return {};
    ModPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % m;
    }
    mp_strip(r);
    return r;
}

ModPoly mp_add(const ModPoly& a, const ModPoly& b, const mpz_class& m) {
    ModPoly r = a.c.size() >= b.c.size() ? a : b;
    const ModPoly& s = a.c.size() >= b.c.size() ? b : a;
    for (std::size_t i = 0; i < s.c.size(); ++i) r.c[i] = (r.c[i] + s.c[i]) % m;
    mp_strip(r);
    return r;
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, const mpz_class& m) {
    ModPoly nb = b;
    for (auto& x : nb.c) x = (m - x % m) % m;
    return mp_add(a, nb, m);
}

// division by a monic divisor
void mp_divmod_monic(const ModPoly& a, const ModPoly& b, const mpz_class& m, ModPoly& q, ModPoly& r) {
    r = a;
    q.c.clear();
    int db = b.deg();
    if (a.deg() < db) return;
    q.c.assign(a.deg() - db + 1, 0);
    for (int i = a.deg() - db; i >= 0; --i) {
        if (static_cast<int>(r.c.size()) - 1 < i + db) continue;
        mpz_class c = r.c[i + db] % m;
        if (c == 0) continue;
        q.c[i] = c;
        for (int j = 0; j <= db; ++j) {
            mpz_class t = (r.c[i + j] - c * b.c[j]) % m;
            if (t < 0) t += m;
            r.c[i + j] = t;
        }
        mp_strip(r);
    }
    mp_strip(q);
}

// division by a divisor with invertible leading coefficient
void mp_divmod(const ModPoly& a, const ModPoly& b, const mpz_class& m, ModPoly& q, ModPoly& r) {
    mpz_class lcinv;
    mpz_invert(lcinv.get_mpz_t(), b.c.back().get_mpz_t(), m.get_mpz_t());
    r = a;
    q.c.clear();
    int db = b.deg();
    if (a.deg() < db) return;
    q.c.assign(a.deg() - db + 1, 0);
    for (int i = a.deg() - db; i >= 0; --i) {
        if (static_cast<int>(r.c.size()) - 1 < i + db) continue;
        mpz_class c = r.c[i + db] * lcinv % m;
        if (c < 0) c += m;
        if (c == 0) continue;
        q.c[i] = c;
        for (int j = 0; j <= db; ++j) {
            mpz_class t = (r.c[i + j] - c * b.c[j]) % m;
            if (t < 0) t += m;
            r.c[i + j] = t;
        }
        mp_strip(r);
    }
    mp_strip(q);
}

// quadratic 2-factor Hensel step: f ≡ g*h (mod m) with lc(g) invertible and
// h monic, s*g + t*h ≡ 1 (mod m); lifts everything to mod m^2
void hensel_step(const ModPoly& f, ModPoly& g, ModPoly& h, ModPoly& s, ModPoly& t,
                 const mpz_class& m) {
    mpz_class m2 = m * m;
    ModPoly e = mp_sub(f, mp_mul(g, h, m2), m2);
    ModPoly q, r;
    mp_divmod_monic(mp_mul(s, e, m2), h, m2, q, r);
    ModPoly g1 = mp_add(g, mp_add(mp_mul(t, e, m2), mp_mul(q, g, m2), m2), m2);
    ModPoly h1 = mp_add(h, r, m2);
    ModPoly b = mp_sub(mp_add(mp_mul(s, g1, m2), mp_mul(t, h1, m2), m2),
                       ModPoly{{mpz_class(1)}}, m2);
    ModPoly c, d;
    mp_divmod_monic(mp_mul(s, b, m2), h1, m2, c, d);
    ModPoly s1 = mp_sub(s, d, m2);
    ModPoly t1 = mp_sub(t, mp_add(mp_mul(t, b, m2), mp_mul(c, g1, m2), m2), m2);
    g = g1;
    h = h1;
    s = s1;
    t = t1;
}

// Lifts f = (lc * prod parts) mod p to mod p^(2^iters); parts stay monic, the
// unit lc rides on the left node of each 2-factor split.
void hensel_lift_tree(const ModPoly& f, std::vector<ModPoly>& parts, const mpz_class& p,
                      int iters, const Field& fp) {
    mpz_class m = p;
    for (int i = 0; i < iters; ++i) m *= m;
    if (parts.size() <= 1) {
        if (parts.size() == 1) {
            // normalize f monic mod m
            ModPoly r = f;
            mpz_class lcinv;
            mpz_invert(lcinv.get_mpz_t(), r.c.back().get_mpz_t(), m.get_mpz_t());
            for (auto& x : r.c) {
                x = x * lcinv % m;
                if (x < 0) x += m;
            }
            parts[0] = r;
        }
        return;
    }
    std::size_t half = parts.size() / 2;
    mpz_class lc = f.c.back() % m;
    ModPoly g{{lc}}, h{{mpz_class(1)}};
    for (std::size_t i = 0; i < half; ++i) g = mp_mul(g, parts[i], m);
    for (std::size_t i = half; i < parts.size(); ++i) h = mp_mul(h, parts[i], m);
    // Bezout mod p via field xgcd
    UPoly gu = from_zpoly(ZPoly{g.c}, fp), hu = from_zpoly(ZPoly{h.c}, fp);
    UPoly gg, su, tu;
    xgcd(gu, hu, gg, su, tu);
    check(gg.deg() == 0, Err::NotCoprime, "modular factors not coprime");
    Coeff inv = gg.get(0).inv();
    su = su.scale(inv);
    tu = tu.scale(inv);
    auto to_mod = [&](const UPoly& u) {
        ModPoly r;
        for (int i = 0; i <= u.deg(); ++i) {
            mpz_class v(u.get(i).scalar().res());
            r.c.push_back(v);
        }
        mp_strip(r);
        return r;
    };
    ModPoly s = to_mod(su), t = to_mod(tu);
    mpz_class mm = p;
    for (int i = 0; i < iters; ++i) {
        hensel_step(f, g, h, s, t, mm);
        mm *= mm;
    }
    std::vector<ModPoly> left(parts.begin(), parts.begin() + half);
    std::vector<ModPoly> right(parts.begin() + half, parts.end());
    hensel_lift_tree(g, left, p, iters, fp);
    hensel_lift_tree(h, right, p, iters, fp);
    for (std::size_t i = 0; i < half; ++i) parts[i] = left[i];
    for (std::size_t i = half; i < parts.size(); ++i) parts[i] = right[i - half];
}

// Zassenhaus factorization of a squarefree primitive integer polynomial;
// lifts with the true leading coefficient (no monicization)
std::vector<ZPoly> zassenhaus(const ZPoly& g, Rng& rng) {
    const Field Q = Field::rationals();
    int n = g.deg();
    if (n <= 1) return {g};

    mpz_class lc = g.c.back();

    // choose a prime not dividing lc that keeps g squarefree
    std::uint64_t p = 0;
    for (std::uint64_t cand = 3; cand < 100000; cand = cand + 2) {
        if (!is_prime_u64(cand)) continue;
        if (mpz_class(lc % mpz_class(static_cast<unsigned long>(cand))) == 0) continue;
        Field fpc = Field::prime(cand);
        UPoly fmod = from_zpoly(g, fpc);
        if (fmod.deg() != n) continue;
        if (is_separable(fmod)) {
            p = cand;
            break;
        }
    }
    check(p != 0, Err::Internal, "no good prime found");
    Field fp = Field::prime(p);

    UniFactorization modfac = factor_fq(from_zpoly(g, fp).monic(), rng);
    if (modfac.factors.size() == 1) return {g};

    // Landau-Mignotte style bound for coefficients of lc * (factor of g)
    mpz_class norm2 = 0;
    for (const auto& x : g.c) norm2 += x * x;
    mpz_class bound = 1;
    mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
    bound = (bound + 1) * abs(lc);
    mpz_class two_n = 1;
    two_n <<= (n + 1);
    bound *= two_n;

    mpz_class pk(static_cast<unsigned long>(p));
    int iters = 0;
    while (pk <= 2 * bound) {
        pk *= pk;
        ++iters;
    }

    std::vector<ModPoly> parts;
    for (const auto& [fac, mult] : modfac.factors) {
        check(mult == 1, Err::Internal, "squarefree input expected");
        ModPoly mp;
        for (int i = 0; i <= fac.deg(); ++i) mp.c.push_back(mpz_class(fac.get(i).scalar().res()));
        parts.push_back(mp);
    }
    ModPoly ftree;
    for (const auto& x : g.c) {
        mpz_class v = x % pk;
        if (v < 0) v += pk;
        ftree.c.push_back(v);
    }
    mp_strip(ftree);
    hensel_lift_tree(ftree, parts, mpz_class(static_cast<unsigned long>(p)), iters, fp);

    // subset recombination against g
    std::vector<ZPoly> found;
    std::vector<int> live(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) live[i] = static_cast<int>(i);
    UPoly remaining = from_zpoly(g, Q);

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        mpz_class lcm = lc % pk;
        if (lcm < 0) lcm += pk;
        ModPoly prod{{lcm}};
        for (int idx : subset) prod = mp_mul(prod, parts[idx], pk);
        // candidate lc * factor: symmetric remainder, then primitive part
        ZPoly cand;
        cand.c.resize(prod.c.size());
        for (std::size_t i = 0; i < prod.c.size(); ++i) cand.c[i] = sym_rem(prod.c[i], pk);
        cand.strip();
        if (cand.c.empty()) return false;
        mpz_class content = 0;
        for (const auto& x : cand.c) content = gcd(content, x);
        if (content == 0) return false;
        if (cand.c.back() < 0) content = -content;
        for (auto& x : cand.c) x /= content;
        UPoly candq = from_zpoly(cand, Q);
        if (candq.deg() < 1) return false;
        UPoly q, r;
        divmod(remaining, candq, q, r);
        if (!r.is_zero()) return false;
        found.push_back(cand);
        remaining = q;
        return true;
    };

    for (std::size_t card = 1; !live.empty() && card <= live.size(); ++card) {
        bool progressed = true;
        while (progressed && card <= live.size()) {
            progressed = false;
            std::vector<int> idx(card);
            std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) -> bool {
                if (pos == card) {
                    std::vector<int> subset;
                    for (std::size_t i = 0; i < card; ++i) subset.push_back(live[idx[i]]);
                    if (try_subset(subset)) {
                        std::vector<int> keep;
                        for (std::size_t i = 0, j = 0; i < live.size(); ++i) {
                            if (j < card && static_cast<int>(i) == idx[j]) {
                                ++j;
                                continue;
                            }
                            keep.push_back(live[i]);
                        }
                        live = keep;
                        return true;
                    }
                    return false;
                }
                for (std::size_t s = start; s + (card - pos - 1) < live.size(); ++s) {
                    idx[pos] = static_cast<int>(s);
                    if (rec(pos + 1, s + 1)) return true;
                }
                return false;
            };
            if (rec(0, 0)) progressed = true;
        }
        if (remaining.deg() <= 0) break;
    }
    if (remaining.deg() > 0) {
        mpq_class u;
        found.push_back(to_zpoly_primitive(remaining, u));
    }
    return found;
}

UniFactorization factor_q(const UPoly& f, Rng& rng) {
    const Field Q = Field::rationals();
    UniFactorization r{f.lc(), {}};
    if (f.deg() == 0) return r;
    UPoly g = f.monic();
    std::vector<std::pair<UPoly, int>> sf;
    sfd_char_0(g, sf);
    for (const auto& [part, mult] : sf) {
        mpq_class u;
        ZPoly z = to_zpoly_primitive(part, u);
        for (const auto& zf : zassenhaus(z, rng)) {
            UPoly fac = from_zpoly(zf, Q).monic();
            r.factors.emplace_back(fac, mult);
        }
    }
    canonical_sort(r.factors);
    return r;
}

// ------------------------------------------------------------ Q(alpha): Trager

UniFactorization factor_ext_q(const UPoly& f, Rng& rng) {
    const Field& K = f.field();
    const Field Q = Field::rationals();
    UniFactorization r{f.lc(), {}};
    if (f.deg() == 0) return r;
    UPoly g0 = f.monic();
    std::vector<std::pair<UPoly, int>> sf;
    sfd_char_0(g0, sf);
    const detail::SVec& msv = K.ext().minpoly;
    UPoly m(Q);
    {
        std::vector<Coeff> mc;
        for (const auto& s : msv) mc.push_back(Coeff::from_scalar(Q, s));
        m = UPoly(Q, std::move(mc));
    }
    Coeff u = Coeff::gen(K);
    for (const auto& [part, mult] : sf) {
        if (part.deg() == 1) {
            r.factors.emplace_back(part, mult);
            continue;
        }
        // find a shift making the norm squarefree
        for (long lam = 0;; lam = lam <= 0 ? -lam + 1 : -lam) {
            Coeff shift = Coeff::from_int(K, -lam) * u;
            UPoly glam = part.taylor_shift(shift);  // g(w - lam*u)
            // bivariate in (x=w, y=u) over Q: eliminate u
            std::vector<UPoly> yc;
            for (int j = 0; j < K.ext_degree(); ++j) {
                std::vector<Coeff> row(glam.deg() + 1, Coeff::zero(Q));
                for (int i = 0; i <= glam.deg(); ++i) {
                    const detail::SVec rep = glam.get(i).rep();
                    if (j < static_cast<int>(rep.size())) row[i] = Coeff::from_scalar(Q, rep[j]);
                }
                yc.push_back(UPoly(Q, std::move(row)));
            }
            BPoly gl(Q, std::move(yc));
            if (gl.degy() < 1) continue;  // norm would be a perfect power; reshift
            BPoly mb = BPoly::from_upoly_in_y(m);
            UPoly norm = resultant_y(mb, gl);  // in x = w
            if (!is_separable(norm)) continue;
            UniFactorization nf = factor_q(norm, rng);
            for (const auto& [ni, nm] : nf.factors) {
                UPoly ni_K = lift_to(ni, K);
                UPoly gi = gcd(glam, ni_K);
                check(gi.deg() >= 1, Err::Internal, "Trager: lost a factor");
                r.factors.emplace_back(gi.taylor_shift(-shift).monic(), mult);
            }
            break;
        }
    }
    canonical_sort(r.factors);
    return r;
}

}  // namespace

UniFactorization squarefree_decomposition(const UPoly& f) {
    check(!f.is_zero(), Err::BadInput, "squarefree decomposition of zero");
    UniFactorization r{f.lc(), {}};
    if (f.deg() == 0) return r;
    if (f.field().characteristic() == 0)
        sfd_char_0(f.monic(), r.factors);
    else
        sfd_char_p(f.monic(), 1, r.factors);
    return r;
}

UniFactorization factor_univariate(const UPoly& f, Rng& rng) {
    check(!f.is_zero(), Err::BadInput, "factorization of zero");
    const Field& K = f.field();
    if (K.desc().kind == FieldKind::PrimeField) return factor_fq(f, rng);
    if (K.is_ext()) return factor_ext_q(f, rng);
    return factor_q(f, rng);
}

bool is_irreducible_fq(const UPoly& f, Rng&) { return is_irreducible_fq_impl(f); }

void canonical_sort(std::vector<std::pair<UPoly, int>>& factors) {
    std::stable_sort(factors.begin(), factors.end(),
                     [](const std::pair<UPoly, int>& a, const std::pair<UPoly, int>& b) {
                         const UPoly& fa = a.first;
                         const UPoly& fb = b.first;
                         bool la = fa.deg() == 1 && fa.get(0).in_base();
                         bool lb = fb.deg() == 1 && fb.get(0).in_base();
                         if (la != lb) return la;  // linear clusters first
                         if (la && lb) {
                             // ascending root: root = -c0 for monic y + c0
                             Scalar ra = (-fa.get(0)).scalar();
                             Scalar rb = (-fb.get(0)).scalar();
                             int c = ra.cmp(rb);
                             if (c != 0) return c < 0;
                             return false;
                         }
                         return UPoly::canonical_cmp(fa, fb) < 0;
                     });
}

}  // namespace af
