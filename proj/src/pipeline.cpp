#include "adjfactor/pipeline.hpp"

#include <sstream>

#include "adjfactor/parser.hpp"

namespace af {

namespace {

bool char_ok_for_branches(const Field& k, int d) {
    std::uint64_t p = k.characteristic();
    return p == 0 || p > static_cast<std::uint64_t>(d);
}

Coeff residue_sum(const UPoly& h, const CurveContext& ctx) {
    const Field& k = ctx.fm.field();
    UPoly f0 = ctx.fm.eval_x0();
    Coeff sum = Coeff::zero(k);
    for (const auto& [mi, mult] : ctx.f0fac.factors) {
        if (mult == 1 && ctx.report.cls == HypothesisClass::Separable) {
            UPoly winv = inverse_mod(f0.derivative(), mi);
            sum = sum + trace_of((h * winv) % mi, mi);
        } else {
            TowerCollapse tc = collapse_tower(k, mi);
            Coeff res = laurent_residue(lift_to(h, tc.big), lift_to(f0, tc.big), tc.root, mult);
            sum = sum + Coeff::from_scalar(k, field_trace(res));
        }
    }
    return sum;
}

}  // namespace

HypothesisReport check_hypothesis(const BPoly& f, Rng& rng) {
    HypothesisReport rep;
    check(!f.is_zero(), Err::BadInput, "zero polynomial");
    const Field& k = f.field();
    rep.d = f.total_degree();
    if (rep.d < 1) {
        rep.cls = HypothesisClass::Unsupported;
        rep.diagnostic = "constant polynomial";
        return rep;
    }
    UPoly f0 = f.eval_x0();
    if (f0.deg() != rep.d) {
        rep.cls = HypothesisClass::Unsupported;
        rep.diagnostic = "deg F(0,y) = " + std::to_string(f0.deg()) + " < deg F = " +
                         std::to_string(rep.d) + "; the fiber x = 0 degenerates";
        return rep;
    }
    if (is_separable(f0)) {
        rep.cls = HypothesisClass::Separable;
        return rep;
    }
    // F must still define a reduced curve
    BPoly fy = f.derivative_y();
    if (fy.degy() >= 1 && resultant_y(f, fy).is_zero()) {
        rep.cls = HypothesisClass::Unsupported;
        rep.diagnostic = "F is not squarefree";
        return rep;
    }
    if (!char_ok_for_branches(k, rep.d)) {
        rep.cls = HypothesisClass::Unsupported;
        rep.diagnostic = "characteristic too small to certify local irreducibility";
        return rep;
    }
    UPoly sqpart = gcd(f0, f0.derivative());
    UniFactorization mfac = factor_univariate(exact_div(sqpart, gcd(sqpart, sqpart.derivative())),
                                              rng);
    for (const auto& [mi, mult] : mfac.factors) {
        TowerCollapse tc = collapse_tower(k, mi);
        Coeff rho = tc.root;
        if (!locally_irreducible(f, tc.big, Coeff::zero(tc.big), rho, rng)) {
            rep.cls = HypothesisClass::Unsupported;
            rep.diagnostic = "curve not analytically irreducible at (0, y) with minpoly(y) = " +
                             mi.str("y") +
                             "; factors share branches modulo (x) and cannot be "
                             "computed with Hensel's lemma";
            return rep;
        }
    }
    rep.cls = HypothesisClass::HPrime;
    return rep;
}

std::vector<UPoly> parse_aspace_lines(const std::string& text, const Field& k) {
    std::vector<UPoly> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        out.push_back(gpoly_to_upoly(parse_gpoly(line), k, 'y'));
    }
    return out;
}

void validate_external_A(const std::vector<UPoly>& basis, const CurveContext& ctx) {
    for (const auto& h : basis) {
        check(!h.is_zero(), Err::BadInput, "zero element in supplied A basis");
        check(h.deg() <= ctx.d - 2, Err::BadInput,
              "supplied A element of degree > d-2: " + h.str("y"));
        check(residue_sum(h, ctx).is_zero(), Err::BadInput,
              "supplied A element violates the residue-sum identity: " + h.str("y"));
    }
}

CurveContext build_curve_context(const BPoly& f, const PipelineOptions& opt, Rng& rng,
                                 bool need_adjoints) {
    CurveContext ctx;
    const Field& k = f.field();
    check(!f.is_zero(), Err::BadInput, "zero polynomial");
    int d = f.total_degree();
    UPoly lead = f.degy() == d ? f.ycoeff(d) : UPoly::zero(k);

    Rng hyprng(opt.seed ^ 0x5eedULL);
    ctx.report = check_hypothesis(f, hyprng);
    ctx.d = ctx.report.d;
    if (ctx.report.cls == HypothesisClass::Unsupported)
        throw Error(Err::UnsupportedField, "hypothesis check failed: " + ctx.report.diagnostic);

    check(lead.deg() == 0, Err::Internal, "leading coefficient not constant");
    ctx.unit = lead.get(0);
    ctx.fm = f.scale(ctx.unit.inv());

    ctx.f0fac = factor_univariate(ctx.fm.eval_x0(), rng);
    check(ctx.f0fac.unit.is_one(), Err::Internal, "normalization lost the unit");

    if (opt.external_A) {
        ctx.a_external = true;
        validate_external_A(*opt.external_A, ctx);
        Mat rows(k, 0, std::max(ctx.d - 1, 0));
        for (const auto& h : *opt.external_A) {
            std::vector<Coeff> row(std::max(ctx.d - 1, 0), Coeff::zero(k));
            for (int i = 0; i <= h.deg(); ++i) row[i] = h.get(i);
            rows.append_row(row);
        }
        ctx.A.rows = row_space(rows);
        for (std::size_t r = 0; r < ctx.A.rows.rows(); ++r) {
            std::vector<Coeff> c(ctx.A.rows.cols(), Coeff::zero(k));
            for (std::size_t j = 0; j < ctx.A.rows.cols(); ++j) c[j] = ctx.A.rows.at(r, j);
            ctx.A.basis.push_back(UPoly(k, std::move(c)));
        }
        return ctx;
    }

    if (!need_adjoints) return ctx;

    check(char_ok_for_branches(k, ctx.d), Err::CharacteristicTooSmall,
          "adjoint computation needs characteristic 0 or p > deg F; supply --adjoint-basis");
    int trunc = opt.trunc_override > 0 ? opt.trunc_override : default_truncation(ctx.d);
    CurveBranches data = curve_branch_data(ctx.fm, trunc, rng);
    AdjointBasis adm2 = adjoint_basis_from(data, k, ctx.d - 2);
    AdjointBasis adm3 = adjoint_basis_from(data, k, ctx.d - 3);
    ctx.dim_adj_dm2 = adm2.dim();
    ctx.dim_adj_dm3 = adm3.dim();
    ctx.genus_is_geometric = data.fully_resolved();
    ctx.A = restrict_to_A(adm2, ctx.d);
    return ctx;
}

RecombSystem recombination_system(const CurveContext& ctx) {
    UPoly f0 = ctx.fm.eval_x0();
    if (ctx.report.cls == HypothesisClass::Separable)
        return build_T_separable(ctx.A, ctx.f0fac, f0.derivative());
    return build_T_nonseparable(ctx.A, ctx.f0fac, f0);
}

RationalFactorization factor_rational(const BPoly& f, const PipelineOptions& opt) {
    Rng rng(opt.seed);
    CurveContext ctx = build_curve_context(f, opt, rng);
    RationalFactorization out{ctx.unit, {}};

    bool separable = ctx.report.cls == HypothesisClass::Separable;
    // dim A = d-1 forces sbar = 1 (only claimed under (H): no singular points on x = 0)
    if (separable && ctx.A.dim() == ctx.d - 1) {
        out.factors.push_back(ctx.fm);
        return out;
    }
    if (ctx.f0fac.factors.size() == 1) {
        out.factors.push_back(ctx.fm);
        return out;
    }

    RecombSystem sys = recombination_system(ctx);
    check(kernel_is_recombination_basis(sys.left_kernel), Err::VerificationFailed,
          "recombination kernel is not a {0,1} partition basis; invalid A input?");
    std::size_t s = sys.left_kernel.rows();
    if (s == 1) {
        out.factors.push_back(ctx.fm);
        return out;
    }

    std::vector<UPoly> parts;
    for (std::size_t r = 0; r < s; ++r) {
        UPoly g = UPoly::one(ctx.fm.field());
        for (std::size_t i = 0; i < sys.left_kernel.cols(); ++i) {
            if (sys.left_kernel.at(r, i).is_zero()) continue;
            g = g * pow_upoly(sys.row_labels[i], sys.row_mult[i]);
        }
        parts.push_back(g);
    }
    std::vector<BPoly> lifted = multifactor_hensel(ctx.fm, parts, ctx.d + 1,
                                                   /*require_exact=*/true);
    out.factors = std::move(lifted);
    return out;
}

AbsoluteFactorization factor_absolute(const BPoly& f, const PipelineOptions& opt) {
    Rng rng(opt.seed);
    CurveContext ctx = build_curve_context(f, opt, rng);
    const Field& k = f.field();
    check(ctx.report.cls == HypothesisClass::Separable, Err::UnsupportedField,
          "absolute factorization along a non-separable fiber is not supported; factors sharing "
          "branches cannot be lifted");
    std::uint64_t p = k.characteristic();
    check(p == 0 || p > static_cast<std::uint64_t>(ctx.d) * (ctx.d - 1),
          Err::CharacteristicTooSmall,
          "absolute factorization needs characteristic 0 or p > d(d-1)");

    UPoly f0 = ctx.fm.eval_x0();
    AbsoluteSystem sys = build_absolute_system(ctx.A, f0, f0.derivative());
    check(sys.sbar == ctx.d - ctx.A.dim(), Err::Internal, "dim L != d - dim A");

    for (int attempt = 0; attempt < opt.max_retries; ++attempt) {
        std::vector<Coeff> c;
        for (int j = 0; j < sys.sbar; ++j) {
            if (attempt == 0)
                c.push_back(Coeff::from_int(k, j));  // deterministic first try
            else if (k.desc().kind == FieldKind::PrimeField)
                c.push_back(Coeff::from_scalar(k, Scalar::residue(k.desc(), rng.below(k.desc().modulus))));
            else
                c.push_back(Coeff::from_int(k, static_cast<long>(rng.below(64 * (attempt + 1))) -
                                                   32 * (attempt + 1)));
        }
        UPoly mu = generic_section(sys, c, k);
        UPoly q = minimal_polynomial(mu, f0);
        if (q.deg() != sys.sbar) continue;  // not separating, redraw
        try {
            AbsoluteFactorization out = absolute_split(ctx.fm, mu, q, rng);
            out.unit = ctx.unit;
            return out;
        } catch (const Error& e) {
            if (e.code() != Err::NotSeparating && e.code() != Err::VerificationFailed) throw;
        }
    }
    throw Error(Err::RetryExhausted, "no separating section found after retries");
}

CurveAnalysis analyze(const BPoly& f, const PipelineOptions& opt) {
    Rng rng(opt.seed);
    CurveContext ctx = build_curve_context(f, opt, rng);
    CurveAnalysis an;
    an.d = ctx.d;
    an.hypothesis = ctx.report.cls;
    an.n = static_cast<int>(ctx.f0fac.factors.size());
    an.dimA = ctx.A.dim();
    an.sbar = ctx.d - an.dimA;
    RecombSystem sys = recombination_system(ctx);
    an.s = static_cast<int>(sys.left_kernel.rows());
    an.genus_report = ctx.dim_adj_dm3;
    an.genus_is_geometric = ctx.genus_is_geometric;
    return an;
}

}  // namespace af
