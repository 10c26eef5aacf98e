#include "adjfactor/field.hpp"

#include <algorithm>
#include <sstream>

namespace af {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((u128)a * b % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    check(a % p != 0, Err::DivisionByZero, "division by zero in F_p");
    // extended Euclid on signed 128-bit to avoid overflow
    __int128 t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        __int128 qq = r / newr;
        __int128 tmp = t - qq * newt;
        t = newt;
        newt = tmp;
        tmp = r - qq * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::from_int(const FieldDesc& fd, long v) {
    Scalar s;
    s.q_.reset();
    s.fd_ = fd;
    if (fd.kind == FieldKind::Rationals) {
        s.q_ = mpq_class(v);
    } else {
        long long m = static_cast<long long>(fd.modulus);
        long long r = v % m;
        if (r < 0) r += m;
        s.r_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::from_mpz(const FieldDesc& fd, const mpz_class& v) {
    Scalar s;
    s.q_.reset();
    s.fd_ = fd;
    if (fd.kind == FieldKind::Rationals) {
        s.q_ = mpq_class(v);
    } else {
        mpz_class m(static_cast<unsigned long>(fd.modulus));
        mpz_class r = v % m;
        if (r < 0) r += m;
        s.r_ = r.get_ui();
    }
    return s;
}

Scalar Scalar::from_mpq(const FieldDesc& fd, const mpq_class& v) {
    if (fd.kind == FieldKind::Rationals) {
        Scalar s;
        s.fd_ = fd;
        s.q_ = v;
        s.q_->canonicalize();
        return s;
    }
    Scalar num = from_mpz(fd, v.get_num());
    Scalar den = from_mpz(fd, v.get_den());
    return num / den;
}

Scalar Scalar::residue(const FieldDesc& fd, std::uint64_t r) {
    check(fd.kind == FieldKind::PrimeField, Err::BadInput, "residue requires a prime field");
    Scalar s;
    s.q_.reset();
    s.fd_ = fd;
    s.r_ = r % fd.modulus;
    return s;
}

bool Scalar::is_zero() const {
    return fd_.kind == FieldKind::Rationals ? *q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return fd_.kind == FieldKind::Rationals ? *q_ == 1 : r_ == 1 % fd_.modulus;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (fd_.kind == FieldKind::Rationals)
        s.q_ = -*q_;
    else
        s.r_ = r_ == 0 ? 0 : fd_.modulus - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(o);
    Scalar s = *this;
    if (fd_.kind == FieldKind::Rationals) {
        s.q_ = *q_ + *o.q_;
    } else {
        std::uint64_t v = r_ + o.r_;  // p < 2^63 so no overflow
        if (v >= fd_.modulus) v -= fd_.modulus;
        s.r_ = v;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(o);
    Scalar s = *this;
    if (fd_.kind == FieldKind::Rationals)
        s.q_ = *q_ * *o.q_;
    else
        s.r_ = mulmod_u64(r_, o.r_, fd_.modulus);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::inv() const {
    Scalar s = *this;
    if (fd_.kind == FieldKind::Rationals) {
        check(*q_ != 0, Err::DivisionByZero, "division by zero in Q");
        s.q_ = 1 / *q_;
    } else {
        s.r_ = invmod_u64(r_, fd_.modulus);
    }
    return s;
}

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar r = Scalar::one(fd_);
    Scalar b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (fd_ != o.fd_) return false;
    return fd_.kind == FieldKind::Rationals ? *q_ == *o.q_ : r_ == o.r_;
}

int Scalar::cmp(const Scalar& o) const {
    require_same(o);
    if (fd_.kind == FieldKind::Rationals) return ::cmp(*q_, *o.q_);
    return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
}

std::string Scalar::str() const {
    if (fd_.kind == FieldKind::Rationals) return q_->get_str();
    return std::to_string(r_);
}

// ---------------------------------------------------------------- SVec

namespace detail {

void strip(SVec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

int sdeg(const SVec& v) { return static_cast<int>(v.size()) - 1; }

SVec sadd(const SVec& a, const SVec& b) {
    SVec r = a.size() >= b.size() ? a : b;
    const SVec& sm = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < sm.size(); ++i) r[i] = r[i] + sm[i];
    strip(r);
    return r;
}

SVec ssub(const SVec& a, const SVec& b) {
    SVec nb;
    nb.reserve(b.size());
    for (const auto& c : b) nb.push_back(-c);
    return sadd(a, nb);
}

SVec smul(const SVec& a, const SVec& b) {
    if (a.empty() || b.empty()) return {};
    SVec r(a.size() + b.size() - 1, Scalar::zero(a[0].field()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    strip(r);
    return r;
}

SVec sscale(const SVec& a, const Scalar& c) {
    if (c.is_zero()) return {};
    SVec r = a;
    for (auto& x : r) x = x * c;
    strip(r);
    return r;
}

void sdivmod(const SVec& a, const SVec& b, SVec& q, SVec& r) {
    check(!b.empty(), Err::DivisionByZero, "polynomial division by zero");
    r = a;
    q.clear();
    if (a.size() < b.size()) return;
    Scalar lcinv = b.back().inv();
    q.assign(a.size() - b.size() + 1, Scalar::zero(b.back().field()));
    for (int i = static_cast<int>(a.size()) - static_cast<int>(b.size()); i >= 0; --i) {
        if (static_cast<std::size_t>(i) + b.size() - 1 >= r.size()) continue;
        Scalar c = r[i + b.size() - 1] * lcinv;
        if (c.is_zero()) continue;
        q[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] - c * b[j];
    }
    strip(r);
    strip(q);
}

SVec srem(const SVec& a, const SVec& b) {
    SVec q, r;
    sdivmod(a, b, q, r);
    return r;
}

void sxgcd(const SVec& a, const SVec& b, SVec& g, SVec& s, SVec& t) {
    FieldDesc fd = !a.empty() ? a[0].field() : (!b.empty() ? b[0].field() : FieldDesc{});
    SVec r0 = a, r1 = b;
    SVec s0 = {Scalar::one(fd)}, s1 = {};
    SVec t0 = {}, t1 = {Scalar::one(fd)};
    while (!r1.empty()) {
        SVec q, r;
        sdivmod(r0, r1, q, r);
        SVec s2 = ssub(s0, smul(q, s1));
        SVec t2 = ssub(t0, smul(q, t1));
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
    if (!g.empty() && !g.back().is_one()) {
        Scalar c = g.back().inv();
        g = sscale(g, c);
        s = sscale(s, c);
        t = sscale(t, c);
    }
}

Scalar seval(const SVec& a, const Scalar& x) {
    Scalar r = Scalar::zero(x.field());
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) r = r * x + a[i];
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------- Field

Field Field::rationals() {
    Field f;
    f.desc_ = {FieldKind::Rationals, 0};
    return f;
}

Field Field::prime(std::uint64_t p) {
    check(p >= 2 && (p >> 62) == 0, Err::BadInput, "modulus out of range");
    check(is_prime_u64(p), Err::BadInput, "modulus is not prime");
    Field f;
    f.desc_ = {FieldKind::PrimeField, p};
    return f;
}

Field Field::extension(const FieldDesc& base, const detail::SVec& minpoly) {
    check(detail::sdeg(minpoly) >= 1, Err::BadInput, "extension needs degree >= 1 minimal polynomial");
    check(minpoly.back().is_one(), Err::BadInput, "minimal polynomial must be monic");
    if (detail::sdeg(minpoly) == 1) {
        // k[u]/(u - c) is k itself; callers resolve the root separately
        Field f;
        f.desc_ = base;
        return f;
    }
    Field f;
    f.desc_ = base;
    f.ext_ = std::make_shared<ExtRep>(ExtRep{base, minpoly});
    return f;
}

int Field::ext_degree() const { return ext_ ? detail::sdeg(ext_->minpoly) : 1; }

bool Field::operator==(const Field& o) const {
    if (desc_ != o.desc_) return false;
    if (!ext_ && !o.ext_) return true;
    if (!ext_ || !o.ext_) return false;
    if (ext_ == o.ext_) return true;
    if (ext_->minpoly.size() != o.ext_->minpoly.size()) return false;
    for (std::size_t i = 0; i < ext_->minpoly.size(); ++i)
        if (ext_->minpoly[i] != o.ext_->minpoly[i]) return false;
    return true;
}

// ---------------------------------------------------------------- Coeff

void Coeff::normalize() {
    if (f_.is_ext() && detail::sdeg(rep_) >= detail::sdeg(f_.ext().minpoly))
        rep_ = detail::srem(rep_, f_.ext().minpoly);
    detail::strip(rep_);
    check(f_.is_ext() || rep_.size() <= 1, Err::Internal, "base-field element with extension rep");
}

Coeff Coeff::from_scalar(const Field& f, const Scalar& s) {
    check(s.field() == f.desc(), Err::FieldMismatch, "scalar/field mismatch");
    if (s.is_zero()) return Coeff(f, {});
    return Coeff(f, {s});
}

Coeff Coeff::gen(const Field& f) {
    check(f.is_ext(), Err::BadInput, "base field has no generator");
    return Coeff(f, {Scalar::zero(f.desc()), Scalar::one(f.desc())});
}

bool Coeff::is_one() const { return rep_.size() == 1 && rep_[0].is_one(); }

Scalar Coeff::scalar() const {
    check(rep_.size() <= 1, Err::BadInput, "extension element is not a base scalar");
    return rep_.empty() ? Scalar::zero(f_.desc()) : rep_[0];
}

Coeff Coeff::operator-() const {
    detail::SVec r;
    r.reserve(rep_.size());
    for (const auto& c : rep_) r.push_back(-c);
    return Coeff(f_, std::move(r));
}

Coeff Coeff::operator+(const Coeff& o) const {
    require_same(o);
    return Coeff(f_, detail::sadd(rep_, o.rep_));
}

Coeff Coeff::operator-(const Coeff& o) const {
    require_same(o);
    return Coeff(f_, detail::ssub(rep_, o.rep_));
}

Coeff Coeff::operator*(const Coeff& o) const {
    require_same(o);
    return Coeff(f_, detail::smul(rep_, o.rep_));
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inv(); }

Coeff Coeff::inv() const {
    check(!is_zero(), Err::DivisionByZero, "division by zero");
    if (!f_.is_ext()) return from_scalar(f_, rep_[0].inv());
    detail::SVec g, s, t;
    detail::sxgcd(rep_, f_.ext().minpoly, g, s, t);
    check(detail::sdeg(g) == 0, Err::Internal, "non-invertible element in a field extension");
    return Coeff(f_, detail::sscale(s, g[0].inv()));
}

Coeff Coeff::pow(const mpz_class& e) const {
    check(e >= 0, Err::BadInput, "negative exponent");
    Coeff r = Coeff::one(f_);
    Coeff b = *this;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

Coeff Coeff::pth_root() const {
    std::uint64_t p = f_.characteristic();
    check(p != 0, Err::BadInput, "p-th root only in characteristic p");
    int m = f_.ext_degree();
    // x -> x^(p^(m-1)) inverts Frobenius on F_{p^m}
    mpz_class e = 1;
    for (int i = 0; i + 1 < m; ++i) e *= static_cast<unsigned long>(p);
    return pow(e);
}

bool Coeff::operator==(const Coeff& o) const {
    if (f_ != o.f_) return false;
    if (rep_.size() != o.rep_.size()) return false;
    for (std::size_t i = 0; i < rep_.size(); ++i)
        if (rep_[i] != o.rep_[i]) return false;
    return true;
}

std::string Coeff::str(const std::string& var) const {
    if (rep_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = detail::sdeg(rep_); i >= 0; --i) {
        const Scalar& c = rep_[i];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = cs.size() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace af
