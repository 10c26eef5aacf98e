#include "adjfactor/adjfactor.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "adjfactor/parser.hpp"
#include "adjfactor/pipeline.hpp"

using namespace af;

struct af_context {
    Field field;
    std::string last_error;
};

struct af_poly {
    BPoly p;
};

struct af_rational_result {
    std::string unit;
    std::vector<af_poly> factors;
};

struct af_absolute_result {
    std::string unit;
    std::vector<std::string> q;
    std::vector<af_poly> factors;
};

struct af_basis_result {
    std::vector<std::string> polys;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

af_status status_of(const Error& e) {
    switch (e.code()) {
        case Err::Parse:
            return AF_ERR_PARSE;
        case Err::UnsupportedField:
        case Err::HprimeViolated:
        case Err::CharacteristicTooSmall:
            return AF_ERR_UNSUPPORTED;
        case Err::RetryExhausted:
            return AF_ERR_RETRY_EXHAUSTED;
        case Err::BadInput:
        case Err::FieldMismatch:
        case Err::NonSquarefree:
            return AF_ERR_BAD_INPUT;
        default:
            return AF_ERR_INTERNAL;
    }
}

template <class Fn>
af_status guarded(af_context* ctx, Fn&& fn) {
    try {
        fn();
        ctx->last_error.clear();
        return AF_OK;
    } catch (const Error& e) {
        ctx->last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return AF_ERR_INTERNAL;
    }
}

PipelineOptions make_options(const af_options* opt, const Field& k) {
    PipelineOptions po;
    if (!opt) return po;
    po.seed = opt->seed;
    po.trunc_override = opt->truncation;
    if (opt->adjoint_basis)
        po.external_A = parse_aspace_lines(opt->adjoint_basis, k);
    return po;
}

std::string poly_string(const BPoly& p) {
    return p.field().is_ext() ? print_bpoly_xyt(p) : print_bpoly(p);
}

}  // namespace

extern "C" {

af_context* af_context_new_rationals(void) {
    return new af_context{Field::rationals(), {}};
}

af_context* af_context_new_prime_field(uint64_t p) {
    try {
        return new af_context{Field::prime(p), {}};
    } catch (...) {
        return nullptr;
    }
}

void af_context_free(af_context* ctx) { delete ctx; }

const char* af_last_error(const af_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

const char* af_version(void) { return "adjfactor 1.0.0"; }

af_status af_poly_parse(af_context* ctx, const char* text, af_poly** out) {
    return guarded(ctx, [&] {
        check(text != nullptr && out != nullptr, Err::BadInput, "null argument");
        *out = new af_poly{gpoly_to_bpoly(parse_gpoly(text), ctx->field)};
    });
}

void af_poly_free(af_poly* p) { delete p; }

char* af_poly_to_string(const af_poly* p) { return dup_string(poly_string(p->p)); }

int32_t af_poly_total_degree(const af_poly* p) { return p->p.total_degree(); }
int32_t af_poly_degx(const af_poly* p) { return p->p.degx(); }
int32_t af_poly_degy(const af_poly* p) { return p->p.degy(); }

char* af_poly_coeff_string(const af_poly* p, int32_t i, int32_t j) {
    return dup_string(p->p.coeff(i, j).str("t"));
}

void af_string_free(char* s) { std::free(s); }

af_status af_factor_rational(af_context* ctx, const af_poly* f, const af_options* opt,
                             af_rational_result** out) {
    return guarded(ctx, [&] {
        check(f != nullptr && out != nullptr, Err::BadInput, "null argument");
        RationalFactorization r = factor_rational(f->p, make_options(opt, ctx->field));
        auto* res = new af_rational_result;
        res->unit = r.unit.str();
        for (auto& fac : r.factors) res->factors.push_back(af_poly{std::move(fac)});
        *out = res;
    });
}

void af_rational_result_free(af_rational_result* r) { delete r; }
char* af_rational_result_unit(const af_rational_result* r) { return dup_string(r->unit); }
size_t af_rational_result_count(const af_rational_result* r) { return r->factors.size(); }
const af_poly* af_rational_result_factor(const af_rational_result* r, size_t i) {
    return i < r->factors.size() ? &r->factors[i] : nullptr;
}

af_status af_factor_absolute(af_context* ctx, const af_poly* f, const af_options* opt,
                             af_absolute_result** out) {
    return guarded(ctx, [&] {
        check(f != nullptr && out != nullptr, Err::BadInput, "null argument");
        AbsoluteFactorization r = factor_absolute(f->p, make_options(opt, ctx->field));
        auto* res = new af_absolute_result;
        res->unit = r.unit.str();
        for (auto& pr : r.pairs) {
            res->q.push_back(print_upoly(pr.q, 't'));
            res->factors.push_back(af_poly{std::move(pr.Q)});
        }
        *out = res;
    });
}

void af_absolute_result_free(af_absolute_result* r) { delete r; }
char* af_absolute_result_unit(const af_absolute_result* r) { return dup_string(r->unit); }
size_t af_absolute_result_count(const af_absolute_result* r) { return r->q.size(); }
char* af_absolute_result_q(const af_absolute_result* r, size_t i) {
    return i < r->q.size() ? dup_string(r->q[i]) : nullptr;
}
const af_poly* af_absolute_result_factor(const af_absolute_result* r, size_t i) {
    return i < r->factors.size() ? &r->factors[i] : nullptr;
}

af_status af_analyze(af_context* ctx, const af_poly* f, const af_options* opt, af_analysis* out) {
    return guarded(ctx, [&] {
        check(f != nullptr && out != nullptr, Err::BadInput, "null argument");
        CurveAnalysis an = analyze(f->p, make_options(opt, ctx->field));
        out->d = an.d;
        out->n = an.n;
        out->s = an.s;
        out->sbar = an.sbar;
        out->dim_a = an.dimA;
        out->genus_report = an.genus_report;
        out->genus_is_geometric = an.genus_is_geometric ? 1 : 0;
        out->hypothesis = an.hypothesis == HypothesisClass::Separable ? 0 : 1;
    });
}

af_status af_adjoint_basis(af_context* ctx, const af_poly* f, int32_t degree,
                           const af_options* opt, af_basis_result** out) {
    return guarded(ctx, [&] {
        check(f != nullptr && out != nullptr, Err::BadInput, "null argument");
        PipelineOptions po = make_options(opt, ctx->field);
        Rng rng(po.seed);
        AdjointBasis basis = adjoint_basis(f->p, degree, rng);
        auto* res = new af_basis_result;
        for (const auto& b : basis.basis) res->polys.push_back(print_bpoly(b));
        *out = res;
    });
}

af_status af_aspace_basis(af_context* ctx, const af_poly* f, const af_options* opt,
                          af_basis_result** out) {
    return guarded(ctx, [&] {
        check(f != nullptr && out != nullptr, Err::BadInput, "null argument");
        PipelineOptions po = make_options(opt, ctx->field);
        Rng rng(po.seed);
        CurveContext cc = build_curve_context(f->p, po, rng);
        auto* res = new af_basis_result;
        for (const auto& b : cc.A.basis) res->polys.push_back(print_upoly(b, 'y'));
        *out = res;
    });
}

void af_basis_result_free(af_basis_result* r) { delete r; }
size_t af_basis_result_count(const af_basis_result* r) { return r->polys.size(); }
char* af_basis_result_poly(const af_basis_result* r, size_t i) {
    return i < r->polys.size() ? dup_string(r->polys[i]) : nullptr;
}

}  // extern "C"
