#include "adjfactor/extension.hpp"

namespace af {

namespace {

Field base_of(const Field& f) {
    return f.desc().kind == FieldKind::Rationals ? Field::rationals() : Field::prime(f.desc().modulus);
}

// flatten an element of K[w]/(q) into the k-basis { u^i w^j }
std::vector<Coeff> flatten(const UPoly& el, int a, int b, const Field& f0) {
    std::vector<Coeff> v(static_cast<std::size_t>(a) * b, Coeff::zero(f0));
    for (int j = 0; j <= el.deg(); ++j) {
        const detail::SVec rep = el.get(j).rep();
        for (std::size_t i = 0; i < rep.size(); ++i)
            v[i + static_cast<std::size_t>(a) * j] = Coeff::from_scalar(f0, rep[i]);
    }
    return v;
}

}  // namespace

Embedding base_embedding(const Field& from_base, const Field& to) {
    check(!from_base.is_ext(), Err::BadInput, "base_embedding needs a base field domain");
    return Embedding(from_base, to, Coeff::one(to));
}

UPoly lift_to(const UPoly& p, const Field& ext) {
    if (p.field() == ext) return p;
    Embedding e = base_embedding(p.field(), ext);
    return e(p);
}

TowerCollapse collapse_tower(const Field& K, const UPoly& q) {
    check(q.is_monic(), Err::BadInput, "tower collapse needs a monic polynomial");
    check(q.field() == K, Err::FieldMismatch, "tower/polynomial field mismatch");
    const int b = q.deg();
    check(b >= 1, Err::BadInput, "tower collapse needs deg >= 1");

    if (b == 1) return TowerCollapse{K, Embedding::identity(K), -q.get(0)};

    if (!K.is_ext()) {
        detail::SVec m;
        m.reserve(b + 1);
        for (int i = 0; i <= b; ++i) m.push_back(q.get(i).scalar());
        Field big = Field::extension(K.desc(), m);
        return TowerCollapse{big, base_embedding(K, big), Coeff::gen(big)};
    }

    const int a = K.ext_degree();
    const int D = a * b;
    Field f0 = base_of(K);
    Coeff u = Coeff::gen(K);

    // candidate primitive elements: w + lambda*u, then (u + lambda)*w
    for (int attempt = 0; attempt < 128; ++attempt) {
        bool second_form = attempt >= 64;
        long lam = second_form ? attempt - 64 : attempt;
        if (K.desc().kind == FieldKind::PrimeField &&
            static_cast<std::uint64_t>(lam) >= K.desc().modulus)
            break;
        Coeff lc = Coeff::from_int(K, lam);
        UPoly v = second_form ? UPoly(K, {Coeff::zero(K), u + lc})            // (u+lam)*w
                              : UPoly(K, {lc * u, Coeff::one(K)});            // w + lam*u
        // powers of v in K[w]/(q)
        std::vector<UPoly> pows;
        pows.reserve(D + 1);
        UPoly cur = UPoly::one(K);
        for (int i = 0; i <= D; ++i) {
            pows.push_back(cur);
            cur = (cur * v) % q;
        }
        Mat A(f0, D, D);  // columns are flattened powers v^0..v^{D-1}
        for (int j = 0; j < D; ++j) {
            auto col = flatten(pows[j], a, b, f0);
            for (int i = 0; i < D; ++i) A.at(i, j) = col[i];
        }
        if (rank(A) != static_cast<std::size_t>(D)) continue;

        std::vector<Coeff> minco = solve(A, flatten(pows[D], a, b, f0));
        detail::SVec m(D + 1, Scalar::zero(f0.desc()));
        for (int i = 0; i < D; ++i) m[i] = (-minco[i]).scalar();
        m[D] = Scalar::one(f0.desc());
        Field big = Field::extension(f0.desc(), m);

        // express u in powers of v
        std::vector<Coeff> uco = solve(A, flatten(UPoly::constant(u), a, b, f0));
        Coeff gen = Coeff::gen(big);
        Coeff u_img = Coeff::zero(big);
        Coeff gp = Coeff::one(big);
        for (int i = 0; i < D; ++i) {
            u_img = u_img + Coeff::from_scalar(big, uco[i].scalar()) * gp;
            gp = gp * gen;
        }
        Coeff w_img = second_form ? gen * (u_img + Coeff::from_int(big, lam)).inv()
                                  : gen - Coeff::from_int(big, lam) * u_img;
        return TowerCollapse{big, Embedding(K, big, u_img), w_img};
    }
    throw Error(Err::Internal, "no primitive element found for tower collapse");
}

Scalar field_trace(const Coeff& c) {
    const Field& K = c.field();
    if (!K.is_ext()) return c.scalar();
    const detail::SVec& m = K.ext().minpoly;
    int n = detail::sdeg(m);
    // power sums of the roots of m via Newton identities
    std::vector<Scalar> p(n, Scalar::zero(K.desc()));
    p[0] = Scalar::from_int(K.desc(), n);
    for (int i = 1; i < n; ++i) {
        Scalar acc = Scalar::from_int(K.desc(), i) * m[n - i];
        for (int j = 1; j < i; ++j) acc = acc + m[n - j] * p[i - j];
        p[i] = -acc;
    }
    Scalar tr = Scalar::zero(K.desc());
    for (std::size_t i = 0; i < c.rep().size(); ++i) tr = tr + c.rep()[i] * p[i];
    return tr;
}

}  // namespace af
