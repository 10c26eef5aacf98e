#ifndef ADJFACTOR_FIELD_HPP
#define ADJFACTOR_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "adjfactor/errors.hpp"

namespace af {

enum class FieldKind { Rationals, PrimeField };

struct FieldDesc {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t modulus = 0;  // PrimeField only

    bool operator==(const FieldDesc& o) const {
        return kind == o.kind && (kind == FieldKind::Rationals || modulus == o.modulus);
    }
    bool operator!=(const FieldDesc& o) const { return !(*this == o); }
};

bool is_prime_u64(std::uint64_t n);

// Element of the base field: exact rational or residue mod p.
// Canonical form is unique per value; equality is structural.
class Scalar {
public:
    Scalar() : fd_{FieldKind::Rationals, 0}, q_(mpq_class(0)), r_(0) {}

    static Scalar zero(const FieldDesc& fd) { return from_int(fd, 0); }
    static Scalar one(const FieldDesc& fd) { return from_int(fd, 1); }
    static Scalar from_int(const FieldDesc& fd, long v);
    static Scalar from_mpz(const FieldDesc& fd, const mpz_class& v);
    static Scalar from_mpq(const FieldDesc& fd, const mpq_class& v);
    static Scalar residue(const FieldDesc& fd, std::uint64_t r);

    const FieldDesc& field() const { return fd_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inv() const;
    Scalar pow(std::uint64_t e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // total order used for canonical sorting (rationals: numeric; F_p: residue)
    int cmp(const Scalar& o) const;

    const mpq_class& rat() const { return *q_; }
    std::uint64_t res() const { return r_; }

    std::string str() const;

private:
    FieldDesc fd_;
    std::optional<mpq_class> q_;  // engaged only over the rationals
    std::uint64_t r_;

    void require_same(const Scalar& o) const {
        check(fd_ == o.fd_, Err::FieldMismatch, "scalar field mismatch");
    }
};

namespace detail {
// Dense little-endian polynomials over Scalar; the are the representation
// backbone for extension-field elements.
using SVec = std::vector<Scalar>;

void strip(SVec& v);
int sdeg(const SVec& v);
SVec sadd(const SVec& a, const SVec& b);
SVec ssub(const SVec& a, const SVec& b);
SVec smul(const SVec& a, const SVec& b);
SVec sscale(const SVec& a, const Scalar& c);
void sdivmod(const SVec& a, const SVec& b, SVec& q, SVec& r);
SVec srem(const SVec& a, const SVec& b);
// g = gcd (monic), and s with s*a = g mod b  (t not tracked)
void sxgcd(const SVec& a, const SVec& b, SVec& g, SVec& s, SVec& t);
Scalar seval(const SVec& a, const Scalar& x);
}  // namespace detail

struct ExtRep {
    FieldDesc base;
    detail::SVec minpoly;  // monic, degree >= 1
};

// Base field k or a simple extension k[u]/(m).  Towers are always collapsed
// to a simple extension before use.
class Field {
public:
    Field() : desc_{FieldKind::Rationals, 0} {}

    static Field rationals();
    static Field prime(std::uint64_t p);
    static Field extension(const FieldDesc& base, const detail::SVec& minpoly);

    const FieldDesc& desc() const { return desc_; }
    bool is_ext() const { return ext_ != nullptr; }
    const ExtRep& ext() const { return *ext_; }
    // [K : k]; 1 for the base field itself
    int ext_degree() const;
    std::uint64_t characteristic() const {
        return desc_.kind == FieldKind::PrimeField ? desc_.modulus : 0;
    }

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    FieldDesc desc_;
    std::shared_ptr<const ExtRep> ext_;
};

// Element of a Field (base-field scalar or extension element).
class Coeff {
public:
    Coeff() = default;
    Coeff(const Field& f, detail::SVec rep) : f_(f), rep_(std::move(rep)) { normalize(); }

    static Coeff zero(const Field& f) { return Coeff(f, {}); }
    static Coeff one(const Field& f) { return from_scalar(f, Scalar::one(f.desc())); }
    static Coeff from_scalar(const Field& f, const Scalar& s);
    static Coeff from_int(const Field& f, long v) {
        return from_scalar(f, Scalar::from_int(f.desc(), v));
    }
    static Coeff gen(const Field& f);  // the class of u in k[u]/(m)

    const Field& field() const { return f_; }
    const detail::SVec& rep() const { return rep_; }
    bool is_zero() const { return rep_.empty(); }
    bool is_one() const;
    // defined only for elements that lie in the base field
    Scalar scalar() const;
    bool in_base() const { return rep_.size() <= 1; }

    Coeff operator-() const;
    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const;
    Coeff inv() const;
    Coeff pow(const mpz_class& e) const;
    Coeff pth_root() const;  // char p only

    bool operator==(const Coeff& o) const;
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    std::string str(const std::string& var = "t") const;

private:
    Field f_;
    detail::SVec rep_;  // degree < ext_degree, trailing zeros stripped

    void normalize();
    void require_same(const Coeff& o) const {
        check(f_ == o.f_, Err::FieldMismatch, "coefficient field mismatch");
    }
};

}  // namespace af

#endif
