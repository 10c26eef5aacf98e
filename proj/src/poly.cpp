#include "adjfactor/poly.hpp"

#include <algorithm>
#include <sstream>

namespace af {

// ---------------------------------------------------------------- UPoly

UPoly UPoly::constant(const Coeff& c) {
    UPoly p(c.field());
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

UPoly UPoly::from_ints(const Field& f, std::initializer_list<long> lowest_first) {
    std::vector<Coeff> c;
    c.reserve(lowest_first.size());
    for (long v : lowest_first) c.push_back(Coeff::from_int(f, v));
    return UPoly(f, std::move(c));
}

UPoly UPoly::monomial(const Field& f, int deg, const Coeff& c) {
    if (c.is_zero()) return UPoly(f);
    std::vector<Coeff> v(deg + 1, Coeff::zero(f));
    v[deg] = c;
    return UPoly(f, std::move(v));
}

UPoly UPoly::linear_root(const Coeff& c) {
    const Field& f = c.field();
    return UPoly(f, {-c, Coeff::one(f)});
}

UPoly UPoly::random_monic(const Field& f, int deg, Rng& rng) {
    check(f.desc().kind == FieldKind::PrimeField, Err::BadInput, "random polynomials need a finite field");
    std::uint64_t p = f.desc().modulus;
    int m = f.ext_degree();
    std::vector<Coeff> c(deg + 1, Coeff::zero(f));
    for (int i = 0; i < deg; ++i) {
        detail::SVec rep;
        for (int j = 0; j < m; ++j) rep.push_back(Scalar::residue(f.desc(), rng.below(p)));
        c[i] = Coeff(f, std::move(rep));
    }
    c[deg] = Coeff::one(f);
    return UPoly(f, std::move(c));
}

const Coeff& UPoly::lc() const {
    check(!c_.empty(), Err::BadInput, "leading coefficient of zero polynomial");
    return c_.back();
}

Coeff UPoly::get(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Coeff::zero(f_);
    return c_[i];
}

UPoly UPoly::operator-() const {
    std::vector<Coeff> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return UPoly(f_, std::move(c));
}

UPoly UPoly::operator+(const UPoly& o) const {
    require_same(o);
    std::vector<Coeff> c = c_.size() >= o.c_.size() ? c_ : o.c_;
    const auto& sm = c_.size() >= o.c_.size() ? o.c_ : c_;
    for (std::size_t i = 0; i < sm.size(); ++i) c[i] = c[i] + sm[i];
    return UPoly(f_, std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    require_same(o);
    if (is_zero() || o.is_zero()) return UPoly(f_);
    std::vector<Coeff> c(c_.size() + o.c_.size() - 1, Coeff::zero(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
    }
    return UPoly(f_, std::move(c));
}

UPoly UPoly::scale(const Coeff& c) const {
    std::vector<Coeff> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x * c);
    return UPoly(f_, std::move(v));
}

UPoly UPoly::shift_up(int k) const {
    if (is_zero()) return *this;
    std::vector<Coeff> v(c_.size() + k, Coeff::zero(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return UPoly(f_, std::move(v));
}

UPoly UPoly::monic() const {
    if (is_zero() || lc().is_one()) return *this;
    return scale(lc().inv());
}

UPoly UPoly::truncate(int n) const {
    if (deg() < n) return *this;
    std::vector<Coeff> v(c_.begin(), c_.begin() + std::max(n, 0));
    return UPoly(f_, std::move(v));
}

bool UPoly::operator==(const UPoly& o) const {
    if (f_ != o.f_ || c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

Coeff UPoly::eval(const Coeff& x) const {
    Coeff r = Coeff::zero(f_);
    for (int i = deg(); i >= 0; --i) r = r * x + c_[i];
    return r;
}

UPoly UPoly::derivative() const {
    if (deg() <= 0) return UPoly(f_);
    std::vector<Coeff> v;
    v.reserve(c_.size() - 1);
    for (int i = 1; i <= deg(); ++i) v.push_back(c_[i] * Coeff::from_int(f_, i));
    return UPoly(f_, std::move(v));
}

UPoly UPoly::taylor_shift(const Coeff& a) const {
    // Horner: p(y+a) = (...((c_n)(y+a) + c_{n-1})(y+a) + ...)
    UPoly r(f_);
    UPoly lin(f_, {a, Coeff::one(f_)});
    for (int i = deg(); i >= 0; --i) r = r * lin + UPoly::constant(c_[i]);
    return r;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        bool wrapped = cs.find('+') != std::string::npos || (cs.find('-') != std::string::npos && cs.rfind('-', 0) != 0);
        bool neg = !wrapped && cs.size() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        if (i == 0) {
            os << (wrapped ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") os << (wrapped ? "(" + cs + ")" : cs) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

int UPoly::canonical_cmp(const UPoly& a, const UPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (int i = 0; i <= a.deg(); ++i) {
        const Coeff& ca = a.c_[i];
        const Coeff& cb = b.c_[i];
        if (ca == cb) continue;
        int la = static_cast<int>(ca.rep().size());
        int lb = static_cast<int>(cb.rep().size());
        if (la != lb) return la < lb ? -1 : 1;
        for (int j = 0; j < la; ++j) {
            int c = ca.rep()[j].cmp(cb.rep()[j]);
            if (c != 0) return c;
        }
    }
    return 0;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    check(!b.is_zero(), Err::DivisionByZero, "polynomial division by zero");
    const Field& f = a.field();
    check(f == b.field(), Err::FieldMismatch, "polynomial field mismatch");
    std::vector<Coeff> rem(a.coeffs());
    int db = b.deg();
    if (a.deg() < db) {
        q = UPoly::zero(f);
        r = a;
        return;
    }
    Coeff lcinv = b.lc().inv();
    std::vector<Coeff> quo(a.deg() - db + 1, Coeff::zero(f));
    for (int i = a.deg() - db; i >= 0; --i) {
        Coeff c = rem[i + db] * lcinv;
        if (c.is_zero()) continue;
        quo[i] = c;
        for (int j = 0; j <= db; ++j) rem[i + j] = rem[i + j] - c * b.get(j);
    }
    q = UPoly(f, std::move(quo));
    r = UPoly(f, std::move(rem));
}

UPoly operator%(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divmod(a, b, q, r);
    return r;
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divmod(a, b, q, r);
    check(r.is_zero(), Err::Internal, "inexact polynomial division");
    return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        UPoly r = r0 % r1;
        r0 = r1;
        r1 = r;
    }
    return r0.is_zero() ? r0 : r0.monic();
}

void xgcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t) {
    const Field& f = a.field();
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::one(f), s1 = UPoly::zero(f);
    UPoly t0 = UPoly::zero(f), t1 = UPoly::one(f);
    while (!r1.is_zero()) {
        UPoly q, r;
        divmod(r0, r1, q, r);
        UPoly s2 = s0 - q * s1;
        UPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    g = r0;
    s = s0;
    t = t0;
    if (!g.is_zero() && !g.lc().is_one()) {
        Coeff c = g.lc().inv();
        g = g.scale(c);
        s = s.scale(c);
        t = t.scale(c);
    }
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
    check(m.deg() >= 1, Err::BadInput, "inverse_mod needs deg(m) >= 1");
    UPoly g, s, t;
    xgcd(a % m, m, g, s, t);
    if (g.deg() != 0)
        throw NotInvertibleError(g, "element not invertible modulo " + m.str() + "; gcd = " + g.str());
    return s.scale(g.lc().inv()) % m;
}

namespace {

// raw arithmetic over the base prime field for the modular-power hot path
using U64Vec = std::vector<std::uint64_t>;

void fp_strip(U64Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

U64Vec fp_mulmod(const U64Vec& a, const U64Vec& b, const U64Vec& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    U64Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        unsigned __int128 ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint64_t>((ai * b[j] + r[i + j]) % p);
    }
    // reduce modulo the monic m
    std::size_t dm = m.size() - 1;
    for (std::size_t i = r.size(); i-- > dm;) {
        std::uint64_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        unsigned __int128 cc = p - c;  // subtracting c*m
        for (std::size_t j = 0; j < dm; ++j)
            r[i - dm + j] = static_cast<std::uint64_t>((r[i - dm + j] + cc * m[j]) % p);
    }
    r.resize(dm);
    fp_strip(r);
    return r;
}

}  // namespace

UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& mod) {
    check(e >= 0, Err::BadInput, "negative exponent");
    const Field& f = base.field();
    if (f.desc().kind == FieldKind::PrimeField && !f.is_ext() && mod.deg() >= 1) {
        std::uint64_t p = f.desc().modulus;
        UPoly modm = mod.monic();
        U64Vec m(modm.deg() + 1);
        for (int i = 0; i <= modm.deg(); ++i) m[i] = modm.get(i).scalar().res();
        UPoly br = base % modm;
        U64Vec b(br.deg() + 1 > 0 ? br.deg() + 1 : 0);
        for (int i = 0; i <= br.deg(); ++i) b[i] = br.get(i).scalar().res();
        fp_strip(b);
        U64Vec r{1 % p};
        mpz_class k = e;
        while (k > 0) {
            if (mpz_odd_p(k.get_mpz_t())) r = fp_mulmod(r, b, m, p);
            k >>= 1;
            if (k > 0) b = fp_mulmod(b, b, m, p);
        }
        std::vector<Coeff> out;
        out.reserve(r.size());
        for (std::uint64_t v : r)
            out.push_back(Coeff::from_scalar(f, Scalar::residue(f.desc(), v)));
        return UPoly(f, std::move(out));
    }
    UPoly r = UPoly::one(f) % mod;
    UPoly b = base % mod;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = (r * b) % mod;
        b = (b * b) % mod;
        k >>= 1;
    }
    return r;
}

UPoly pow_upoly(const UPoly& base, int e) {
    check(e >= 0, Err::BadInput, "negative exponent");
    UPoly r = UPoly::one(base.field());
    UPoly b = base;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

UPoly series_inv(const UPoly& a, int n) {
    const Field& f = a.field();
    check(!a.get(0).is_zero(), Err::DivisionByZero, "series inverse needs invertible constant term");
    UPoly r = UPoly::constant(a.get(0).inv());
    int prec = 1;
    UPoly two = UPoly::from_ints(f, {2});
    while (prec < n) {
        prec = std::min(2 * prec, n);
        r = (r * (two - (a.truncate(prec) * r).truncate(prec))).truncate(prec);
    }
    return r;
}

// ---------------------------------------------------------------- BPoly

BPoly BPoly::from_upoly_in_y(const UPoly& p) {
    std::vector<UPoly> yc;
    yc.reserve(p.deg() + 1);
    for (int j = 0; j <= p.deg(); ++j) yc.push_back(UPoly::constant(p.get(j)));
    return BPoly(p.field(), std::move(yc));
}

BPoly BPoly::from_upoly_in_x(const UPoly& p) { return BPoly(p.field(), {p}); }

BPoly BPoly::constant(const Coeff& c) { return BPoly(c.field(), {UPoly::constant(c)}); }

int BPoly::degx() const {
    int d = -1;
    for (const auto& u : yc_) d = std::max(d, u.deg());
    return d;
}

int BPoly::total_degree() const {
    int d = -1;
    for (int j = 0; j <= degy(); ++j)
        if (!yc_[j].is_zero()) d = std::max(d, j + yc_[j].deg());
    return d;
}

Coeff BPoly::coeff(int i, int j) const {
    if (j < 0 || j > degy()) return Coeff::zero(f_);
    return yc_[j].get(i);
}

const UPoly& BPoly::ycoeff(int j) const {
    static const UPoly empty;
    check(j >= 0 && j <= degy(), Err::BadInput, "y-coefficient out of range");
    return yc_[j];
}

BPoly BPoly::operator-() const {
    std::vector<UPoly> yc;
    yc.reserve(yc_.size());
    for (const auto& u : yc_) yc.push_back(-u);
    return BPoly(f_, std::move(yc));
}

BPoly BPoly::operator+(const BPoly& o) const {
    require_same(o);
    std::vector<UPoly> yc(std::max(yc_.size(), o.yc_.size()), UPoly::zero(f_));
    for (std::size_t j = 0; j < yc.size(); ++j) {
        UPoly s = UPoly::zero(f_);
        if (j < yc_.size()) s = s + yc_[j];
        if (j < o.yc_.size()) s = s + o.yc_[j];
        yc[j] = s;
    }
    return BPoly(f_, std::move(yc));
}

BPoly BPoly::operator-(const BPoly& o) const { return *this + (-o); }

BPoly BPoly::operator*(const BPoly& o) const {
    require_same(o);
    if (is_zero() || o.is_zero()) return BPoly(f_);
    std::vector<UPoly> yc(yc_.size() + o.yc_.size() - 1, UPoly::zero(f_));
    for (std::size_t i = 0; i < yc_.size(); ++i) {
        if (yc_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.yc_.size(); ++j) yc[i + j] = yc[i + j] + yc_[i] * o.yc_[j];
    }
    return BPoly(f_, std::move(yc));
}

BPoly BPoly::scale(const Coeff& c) const {
    std::vector<UPoly> yc;
    yc.reserve(yc_.size());
    for (const auto& u : yc_) yc.push_back(u.scale(c));
    return BPoly(f_, std::move(yc));
}

bool BPoly::operator==(const BPoly& o) const {
    if (f_ != o.f_ || yc_.size() != o.yc_.size()) return false;
    for (std::size_t j = 0; j < yc_.size(); ++j)
        if (yc_[j] != o.yc_[j]) return false;
    return true;
}

UPoly BPoly::eval_x(const Coeff& a) const {
    std::vector<Coeff> c;
    c.reserve(yc_.size());
    for (const auto& u : yc_) c.push_back(u.eval(a));
    return UPoly(f_, std::move(c));
}

UPoly BPoly::eval_y(const Coeff& b) const {
    UPoly r = UPoly::zero(f_);
    for (int j = degy(); j >= 0; --j) r = r.scale(b) + yc_[j];
    return r;
}

Coeff BPoly::eval(const Coeff& a, const Coeff& b) const { return eval_x(a).eval(b); }

BPoly BPoly::derivative_x() const {
    std::vector<UPoly> yc;
    yc.reserve(yc_.size());
    for (const auto& u : yc_) yc.push_back(u.derivative());
    return BPoly(f_, std::move(yc));
}

BPoly BPoly::derivative_y() const {
    if (degy() <= 0) return BPoly(f_);
    std::vector<UPoly> yc;
    yc.reserve(yc_.size() - 1);
    for (int j = 1; j <= degy(); ++j) yc.push_back(yc_[j].scale(Coeff::from_int(f_, j)));
    return BPoly(f_, std::move(yc));
}

BPoly BPoly::translate(const Coeff& a, const Coeff& b) const {
    // shift x first, then y via Horner over translated x-coefficients
    std::vector<UPoly> shifted;
    shifted.reserve(yc_.size());
    for (const auto& u : yc_) shifted.push_back(u.taylor_shift(a));
    BPoly r(f_);
    BPoly lin(f_, {UPoly::constant(b), UPoly::one(f_)});  // y + b
    for (int j = static_cast<int>(shifted.size()) - 1; j >= 0; --j)
        r = r * lin + BPoly::from_upoly_in_x(shifted[j]);
    return r;
}

BPoly BPoly::sub_x_linear(const Coeff& lambda) const {
    // F(x + lambda*y, y) = sum_{i,j} F_ij (x + lambda*y)^i y^j, Horner in i
    BPoly res(f_);
    BPoly xl = BPoly(f_, {UPoly::monomial(f_, 1, Coeff::one(f_)), UPoly::constant(lambda)});
    for (int j = 0; j <= degy(); ++j) {
        BPoly acc(f_);
        const UPoly& u = yc_[j];
        for (int i = u.deg(); i >= 0; --i) acc = acc * xl + BPoly::constant(u.get(i));
        std::vector<UPoly> shifted(j, UPoly::zero(f_));
        for (const auto& w : acc.ycoeffs()) shifted.push_back(w);
        res = res + BPoly(f_, std::move(shifted));
    }
    return res;
}

BPoly BPoly::swap_vars() const {
    int dx = degx();
    if (dx < 0) return BPoly(f_);
    std::vector<UPoly> yc(dx + 1, UPoly::zero(f_));
    for (int i = 0; i <= dx; ++i) {
        std::vector<Coeff> c(degy() + 1, Coeff::zero(f_));
        for (int j = 0; j <= degy(); ++j) c[j] = coeff(i, j);
        yc[i] = UPoly(f_, std::move(c));
    }
    return BPoly(f_, std::move(yc));
}

std::string BPoly::str(const std::string& xvar, const std::string& yvar) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = degy(); j >= 0; --j) {
        const UPoly& u = yc_[j];
        for (int i = u.deg(); i >= 0; --i) {
            Coeff c = u.get(i);
            if (c.is_zero()) continue;
            std::string cs = c.str();
            bool wrapped = cs.find('+') != std::string::npos ||
                           (cs.find('-') != std::string::npos && cs.rfind('-', 0) != 0);
            bool neg = !wrapped && cs.size() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? "-" : "+");
            }
            bool printed = false;
            if (i == 0 && j == 0) {
                os << (wrapped ? "(" + cs + ")" : cs);
                printed = true;
            } else if (cs != "1" || wrapped) {
                os << (wrapped ? "(" + cs + ")" : cs);
                printed = true;
            }
            if (j > 0) {
                if (printed) os << "*";
                os << yvar;
                if (j > 1) os << "^" << j;
                printed = true;
            }
            if (i > 0) {
                if (printed) os << "*";
                os << xvar;
                if (i > 1) os << "^" << i;
            }
        }
    }
    return os.str();
}

BPoly exact_div(const BPoly& a, const BPoly& b) {
    check(!b.is_zero(), Err::DivisionByZero, "bivariate division by zero");
    const Field& f = a.field();
    if (a.is_zero()) return a;
    int db = b.degy();
    std::vector<UPoly> rem = a.ycoeffs();
    int da = a.degy();
    check(da >= db, Err::Internal, "inexact bivariate division");
    std::vector<UPoly> quo(da - db + 1, UPoly::zero(f));
    const UPoly& blc = b.ycoeff(db);
    for (int i = da - db; i >= 0; --i) {
        // strip current top
        while (static_cast<int>(rem.size()) - 1 > i + db && rem.back().is_zero()) rem.pop_back();
        if (static_cast<int>(rem.size()) - 1 < i + db) continue;
        UPoly c = exact_div(rem[i + db], blc);
        quo[i] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[i + j] = rem[i + j] - c * b.ycoeff(j);
    }
    for (const auto& u : rem) check(u.is_zero(), Err::Internal, "inexact bivariate division");
    return BPoly(f, std::move(quo));
}

// subresultant PRS; validated against the Sylvester-determinant oracle
UPoly resultant_y(const BPoly& a, const BPoly& b) {
    check(a.degy() >= 1 && b.degy() >= 1, Err::BadInput, "resultant_y needs deg_y >= 1");
    const Field& f = a.field();
    check(f == b.field(), Err::FieldMismatch, "resultant field mismatch");

    std::vector<UPoly> A = a.ycoeffs(), B = b.ycoeffs();
    auto degv = [](const std::vector<UPoly>& v) { return static_cast<int>(v.size()) - 1; };
    auto stripv = [](std::vector<UPoly>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    int s = 1;
    if (degv(A) < degv(B)) {
        std::swap(A, B);
        if ((degv(A) & 1) && (degv(B) & 1)) s = -s;
    }
    UPoly g = UPoly::one(f), h = UPoly::one(f);
    while (degv(B) > 0) {
        int da = degv(A), db = degv(B);
        int delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        // pseudo-remainder: lc(B)^(delta+1) * A reduced by B
        UPoly lcB = B.back();
        std::vector<UPoly> R = A;
        for (auto& u : R) u = u * pow_upoly(lcB, delta + 1);
        for (int i = degv(R) - db; i >= 0; --i) {
            stripv(R);
            if (degv(R) < i + db) continue;
            UPoly c = exact_div(R[i + db], lcB);
            if (c.is_zero()) continue;
            for (int j = 0; j <= db; ++j) R[i + j] = R[i + j] - c * B[j];
        }
        stripv(R);
        check(degv(R) < db, Err::Internal, "pseudo-division failed");
        A = B;
        UPoly divisor = g * pow_upoly(h, delta);
        for (auto& u : R) u = exact_div(u, divisor);
        B = R;
        g = A.back();
        if (delta > 0) h = exact_div(pow_upoly(g, delta), pow_upoly(h, delta - 1));
    }
    if (B.empty()) return UPoly::zero(f);
    int da = degv(A);  // >= 1 here since both inputs had positive y-degree
    UPoly res = exact_div(pow_upoly(B[0], da), pow_upoly(h, da - 1));
    if (s < 0) res = -res;
    return res;
}

BPoly inf_chart(const BPoly& f) {
    int d = f.total_degree();
    check(d >= 0, Err::BadInput, "chart of zero polynomial");
    const Field& F = f.field();
    // monomial x^i y^j -> y^j z^(d-i-j); output variables are (z, y)
    std::vector<UPoly> yc(d + 1, UPoly::zero(F));
    for (int j = 0; j <= f.degy(); ++j) {
        for (int i = 0; i <= f.ycoeff(j).deg(); ++i) {
            Coeff c = f.coeff(i, j);
            if (c.is_zero()) continue;
            int zp = d - i - j;
            yc[j] = yc[j] + UPoly::monomial(F, zp, c);
        }
    }
    return BPoly(F, std::move(yc));
}

// ---------------------------------------------------------------- Series

Series::Series(const Field& f, int prec, std::vector<UPoly> ycoeffs)
    : f_(f), prec_(prec), yc_(std::move(ycoeffs)) {
    for (auto& u : yc_) u = u.truncate(prec_);
    strip();
}

Series Series::from_bpoly(const BPoly& p, int prec) {
    return Series(p.field(), prec, p.ycoeffs());
}

BPoly Series::to_bpoly() const { return BPoly(f_, yc_); }

const UPoly& Series::ycoeff(int j) const {
    static const UPoly empty;
    check(j >= 0 && j <= degy(), Err::BadInput, "y-coefficient out of range");
    return yc_[j];
}

bool Series::is_monic_in_y() const {
    if (yc_.empty()) return false;
    return yc_.back() == UPoly::one(f_);
}

Series Series::operator-() const {
    std::vector<UPoly> yc;
    yc.reserve(yc_.size());
    for (const auto& u : yc_) yc.push_back(-u);
    return Series(f_, prec_, std::move(yc));
}

Series Series::operator+(const Series& o) const {
    require_compat(o);
    std::vector<UPoly> yc(std::max(yc_.size(), o.yc_.size()), UPoly::zero(f_));
    for (std::size_t j = 0; j < yc.size(); ++j) {
        UPoly s = UPoly::zero(f_);
        if (j < yc_.size()) s = s + yc_[j];
        if (j < o.yc_.size()) s = s + o.yc_[j];
        yc[j] = s;
    }
    return Series(f_, prec_, std::move(yc));
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
    require_compat(o);
    if (is_zero() || o.is_zero()) return Series(f_, prec_);
    std::vector<UPoly> yc(yc_.size() + o.yc_.size() - 1, UPoly::zero(f_));
    for (std::size_t i = 0; i < yc_.size(); ++i) {
        if (yc_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.yc_.size(); ++j)
            yc[i + j] = (yc[i + j] + yc_[i] * o.yc_[j]).truncate(prec_);
    }
    return Series(f_, prec_, std::move(yc));
}

bool Series::operator==(const Series& o) const {
    if (f_ != o.f_ || prec_ != o.prec_ || yc_.size() != o.yc_.size()) return false;
    for (std::size_t j = 0; j < yc_.size(); ++j)
        if (yc_[j] != o.yc_[j]) return false;
    return true;
}

Series Series::with_precision(int n) const { return Series(f_, n, yc_); }

void divmod_y(const Series& a, const Series& b, Series& q, Series& r) {
    check(b.is_monic_in_y(), Err::BadInput, "series division needs a monic divisor");
    const Field& f = a.field();
    int prec = a.precision();
    int db = b.degy();
    std::vector<UPoly> rem = a.ycoeffs();
    auto degv = [](const std::vector<UPoly>& v) { return static_cast<int>(v.size()) - 1; };
    auto stripv = [](std::vector<UPoly>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    if (degv(rem) < db) {
        q = Series(f, prec);
        r = a;
        return;
    }
    std::vector<UPoly> quo(degv(rem) - db + 1, UPoly::zero(f));
    for (int i = degv(rem) - db; i >= 0; --i) {
        stripv(rem);
        if (degv(rem) < i + db) continue;
        UPoly c = rem[i + db];
        quo[i] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[i + j] = (rem[i + j] - c * b.ycoeff(j)).truncate(prec);
    }
    q = Series(f, prec, std::move(quo));
    r = Series(f, prec, std::move(rem));
}

// ---------------------------------------------------------------- Embedding

Embedding::Embedding(const Field& from, const Field& to, const Coeff& gen_image)
    : from_(from), to_(to) {
    check(from.desc() == to.desc(), Err::FieldMismatch, "embedding must preserve the base field");
    int n = from.ext_degree();
    gen_pows_.reserve(n);
    Coeff p = Coeff::one(to);
    for (int i = 0; i < n; ++i) {
        gen_pows_.push_back(p);
        if (i + 1 < n) p = p * gen_image;
    }
}

Embedding Embedding::identity(const Field& f) {
    Coeff g = f.is_ext() ? Coeff::gen(f) : Coeff::one(f);
    return Embedding(f, f, g);
}

Coeff Embedding::operator()(const Coeff& c) const {
    check(c.field() == from_, Err::FieldMismatch, "embedding domain mismatch");
    Coeff r = Coeff::zero(to_);
    for (std::size_t i = 0; i < c.rep().size(); ++i)
        r = r + gen_pows_[i] * Coeff::from_scalar(to_, c.rep()[i]);
    return r;
}

UPoly Embedding::operator()(const UPoly& p) const {
    std::vector<Coeff> c;
    c.reserve(p.deg() + 1);
    for (int i = 0; i <= p.deg(); ++i) c.push_back((*this)(p.get(i)));
    return UPoly(to_, std::move(c));
}

BPoly Embedding::operator()(const BPoly& p) const {
    std::vector<UPoly> yc;
    yc.reserve(p.degy() + 1);
    for (int j = 0; j <= p.degy(); ++j) yc.push_back((*this)(p.ycoeff(j)));
    return BPoly(to_, std::move(yc));
}

}  // namespace af
