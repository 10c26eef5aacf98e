#ifndef ADJFACTOR_POLY_HPP
#define ADJFACTOR_POLY_HPP

#include <functional>
#include <string>
#include <vector>

#include "adjfactor/field.hpp"
#include "adjfactor/rng.hpp"

namespace af {

// Dense univariate polynomial over a Field, lowest degree first,
// trailing zeros stripped.  deg(0) = -1.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(const Field& f) : f_(f) {}
    UPoly(const Field& f, std::vector<Coeff> c) : f_(f), c_(std::move(c)) { strip(); }

    static UPoly zero(const Field& f) { return UPoly(f); }
    static UPoly one(const Field& f) { return constant(Coeff::one(f)); }
    static UPoly constant(const Coeff& c);
    static UPoly from_ints(const Field& f, std::initializer_list<long> lowest_first);
    static UPoly monomial(const Field& f, int deg, const Coeff& c);
    // y - c
    static UPoly linear_root(const Coeff& c);
    static UPoly random_monic(const Field& f, int deg, Rng& rng);

    const Field& field() const { return f_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const Coeff& lc() const;
    Coeff get(int i) const;
    const std::vector<Coeff>& coeffs() const { return c_; }

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scale(const Coeff& c) const;
    UPoly shift_up(int k) const;  // * y^k
    UPoly monic() const;
    UPoly truncate(int n) const;  // mod y^n

    bool operator==(const UPoly& o) const;
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    Coeff eval(const Coeff& x) const;
    UPoly derivative() const;
    UPoly taylor_shift(const Coeff& a) const;  // p(y + a)

    std::string str(const std::string& var = "y") const;

    // canonical total order for sorted factor lists: degree, then
    // coefficients from the constant term up
    static int canonical_cmp(const UPoly& a, const UPoly& b);

private:
    Field f_;
    std::vector<Coeff> c_;

    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void require_same(const UPoly& o) const {
        check(f_ == o.f_, Err::FieldMismatch, "polynomial field mismatch");
    }
};

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly operator%(const UPoly& a, const UPoly& b);
UPoly exact_div(const UPoly& a, const UPoly& b);
// monic gcd; gcd(0,0) = 0
UPoly gcd(const UPoly& a, const UPoly& b);
// g = gcd monic, s*a + t*b = g
void xgcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t);
// b with a*b = 1 mod m; throws Err::NotInvertible carrying gcd in message
UPoly inverse_mod(const UPoly& a, const UPoly& m);
UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& mod);
UPoly pow_upoly(const UPoly& base, int e);
// inverse of a as a power series mod y^n (requires a(0) invertible)
UPoly series_inv(const UPoly& a, int n);

// thrown by inverse_mod; carries the nontrivial gcd (a lucky factor)
class NotInvertibleError : public Error {
public:
    NotInvertibleError(const UPoly& g, const std::string& msg)
        : Error(Err::NotInvertible, msg), gcd_(g) {}
    const UPoly& gcd_witness() const { return gcd_; }

private:
    UPoly gcd_;
};

// Dense bivariate polynomial; coefficient of y^j is a UPoly in x.
class BPoly {
public:
    BPoly() = default;
    explicit BPoly(const Field& f) : f_(f) {}
    BPoly(const Field& f, std::vector<UPoly> ycoeffs) : f_(f), yc_(std::move(ycoeffs)) { strip(); }

    static BPoly zero(const Field& f) { return BPoly(f); }
    static BPoly from_upoly_in_y(const UPoly& p);
    static BPoly from_upoly_in_x(const UPoly& p);
    static BPoly constant(const Coeff& c);

    const Field& field() const { return f_; }
    bool is_zero() const { return yc_.empty(); }
    int degy() const { return static_cast<int>(yc_.size()) - 1; }
    int degx() const;
    int total_degree() const;
    Coeff coeff(int i, int j) const;  // of x^i y^j
    const std::vector<UPoly>& ycoeffs() const { return yc_; }
    const UPoly& ycoeff(int j) const;

    BPoly operator-() const;
    BPoly operator+(const BPoly& o) const;
    BPoly operator-(const BPoly& o) const;
    BPoly operator*(const BPoly& o) const;
    BPoly scale(const Coeff& c) const;

    bool operator==(const BPoly& o) const;
    bool operator!=(const BPoly& o) const { return !(*this == o); }

    UPoly eval_x(const Coeff& a) const;  // -> UPoly in y
    UPoly eval_x0() const { return eval_x(Coeff::zero(f_)); }
    UPoly eval_y(const Coeff& b) const;  // -> UPoly in x
    Coeff eval(const Coeff& a, const Coeff& b) const;
    BPoly derivative_x() const;
    BPoly derivative_y() const;
    BPoly translate(const Coeff& a, const Coeff& b) const;  // F(x+a, y+b)
    BPoly sub_x_linear(const Coeff& lambda) const;          // F(x + lambda*y, y)
    BPoly swap_vars() const;

    std::string str(const std::string& xvar = "x", const std::string& yvar = "y") const;

private:
    Field f_;
    std::vector<UPoly> yc_;

    void strip() {
        while (!yc_.empty() && yc_.back().is_zero()) yc_.pop_back();
    }
    void require_same(const BPoly& o) const {
        check(f_ == o.f_, Err::FieldMismatch, "polynomial field mismatch");
    }
};

BPoly exact_div(const BPoly& a, const BPoly& b);
// resultant w.r.t. y by the subresultant pseudo-remainder sequence;
// sign convention: determinant of the Sylvester matrix (rows of a first)
UPoly resultant_y(const BPoly& a, const BPoly& b);
// chart swap x <-> z: G(x', y) = F_hom(1, y, x') where x' is the old z
BPoly inf_chart(const BPoly& f);

// Truncated element of k[y][[x]]/(x^N), stored by y-power.
class Series {
public:
    Series() : prec_(0) {}
    Series(const Field& f, int prec) : f_(f), prec_(prec) {}
    Series(const Field& f, int prec, std::vector<UPoly> ycoeffs);

    static Series from_bpoly(const BPoly& p, int prec);
    BPoly to_bpoly() const;

    const Field& field() const { return f_; }
    int precision() const { return prec_; }
    int degy() const { return static_cast<int>(yc_.size()) - 1; }
    bool is_zero() const { return yc_.empty(); }
    const UPoly& ycoeff(int j) const;
    const std::vector<UPoly>& ycoeffs() const { return yc_; }
    bool is_monic_in_y() const;

    Series operator-() const;
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;

    bool operator==(const Series& o) const;
    bool operator!=(const Series& o) const { return !(*this == o); }

    // precision shift; lowering is lossless on retained terms
    Series with_precision(int n) const;

    std::string str() const { return to_bpoly().str(); }

private:
    Field f_;
    int prec_;
    std::vector<UPoly> yc_;  // each truncated mod x^prec_

    void strip() {
        while (!yc_.empty() && yc_.back().is_zero()) yc_.pop_back();
    }
    void require_compat(const Series& o) const {
        check(f_ == o.f_, Err::FieldMismatch, "series field mismatch");
        check(prec_ == o.prec_, Err::BadInput, "series precision mismatch");
    }
};

// quotient/remainder in y; divisor must be monic in y
void divmod_y(const Series& a, const Series& b, Series& q, Series& r);

// Ring embedding determined by the image of the generator; both fields must
// share the same base FieldDesc.
class Embedding {
public:
    Embedding() = default;
    Embedding(const Field& from, const Field& to, const Coeff& gen_image);
    static Embedding identity(const Field& f);

    const Field& from() const { return from_; }
    const Field& to() const { return to_; }
    Coeff operator()(const Coeff& c) const;
    UPoly operator()(const UPoly& p) const;
    BPoly operator()(const BPoly& p) const;

private:
    Field from_, to_;
    std::vector<Coeff> gen_pows_;  // powers of the generator image
};

// Fraction-free determinant (Bareiss) over a commutative ring; Ring must
// provide zero(), one(), is_zero, mul, sub, exact_div.
template <class Elem, class Ring>
Elem bareiss_det(std::vector<std::vector<Elem>> m, const Ring& R) {
    const std::size_t n = m.size();
    if (n == 0) return R.one();
    Elem prev = R.one();
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && R.is_zero(m[piv][k])) ++piv;
        if (piv == n) return R.zero();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Elem t = R.sub(R.mul(m[k][k], m[i][j]), R.mul(m[i][k], m[k][j]));
                m[i][j] = R.exact_div(t, prev);
            }
            m[i][k] = R.zero();
        }
        prev = m[k][k];
    }
    Elem det = m[n - 1][n - 1];
    return sign < 0 ? R.sub(R.zero(), det) : det;
}

struct UPolyRing {
    Field f;
    UPoly zero() const { return UPoly::zero(f); }
    UPoly one() const { return UPoly::one(f); }
    bool is_zero(const UPoly& a) const { return a.is_zero(); }
    UPoly mul(const UPoly& a, const UPoly& b) const { return a * b; }
    UPoly sub(const UPoly& a, const UPoly& b) const { return a - b; }
    UPoly exact_div(const UPoly& a, const UPoly& b) const { return af::exact_div(a, b); }
};

struct BPolyRing {
    Field f;
    BPoly zero() const { return BPoly::zero(f); }
    BPoly one() const { return BPoly::constant(Coeff::one(f)); }
    bool is_zero(const BPoly& a) const { return a.is_zero(); }
    BPoly mul(const BPoly& a, const BPoly& b) const { return a * b; }
    BPoly sub(const BPoly& a, const BPoly& b) const { return a - b; }
    BPoly exact_div(const BPoly& a, const BPoly& b) const { return af::exact_div(a, b); }
};

}  // namespace af

#endif
