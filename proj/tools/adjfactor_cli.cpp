// Command-line driver; talks to the library exclusively through the C API.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "adjfactor/adjfactor.h"

namespace {

using nlohmann::json;

struct CliConfig {
    std::string command;
    bool absolute = false;
    bool rational = false;
    std::string field = "q";
    std::string input;
    std::string adjoint_basis_file;
    std::uint64_t seed = 0;
    bool json_mode = false;
    int trunc = 0;
    int adj_degree = -1;  // adjoints: explicit Adj(m) dump instead of A
};

std::string take_string(char* s) {
    std::string out = s ? s : "";
    af_string_free(s);
    return out;
}

std::string read_input(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(arg);
    if (in.good()) {
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    return arg;  // literal polynomial text
}

af_context* open_context(const std::string& field, std::string& err) {
    if (field == "q" || field == "Q") return af_context_new_rationals();
    if (field.rfind("fp:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(field.substr(3));
        } catch (...) {
            err = "bad modulus in --field";
            return nullptr;
        }
        af_context* ctx = af_context_new_prime_field(p);
        if (!ctx) err = "modulus is not prime";
        return ctx;
    }
    err = "unknown field '" + field + "' (use q or fp:P)";
    return nullptr;
}

json poly_record(const af_poly* p) {
    json coeffs = json::array();
    int degy = af_poly_degy(p);
    int degx = af_poly_degx(p);
    for (int j = 0; j <= degy; ++j) {
        json row = json::array();
        for (int i = 0; i <= degx; ++i)
            row.push_back(take_string(af_poly_coeff_string(p, i, j)));
        coeffs.push_back(row);
    }
    return json{{"poly", take_string(af_poly_to_string(p))},
                {"degx", degx},
                {"degy", degy},
                {"coeffs_y_major", coeffs}};
}

int fail_with(af_context* ctx, af_status st) {
    std::cerr << "error: " << af_last_error(ctx) << "\n";
    switch (st) {
        case AF_ERR_PARSE:
        case AF_ERR_BAD_INPUT:
            return 1;
        case AF_ERR_UNSUPPORTED:
            return 2;
        case AF_ERR_RETRY_EXHAUSTED:
            return 3;
        default:
            return 4;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rational and absolute factorization of bivariate polynomials "
                 "via adjoint curves"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "polynomial, file, or - for stdin")->required();
        sub->add_option("--field", cfg.field, "coefficient field: q or fp:P (default q)");
        sub->add_option("--adjoint-basis", cfg.adjoint_basis_file,
                        "file with a precomputed basis of A (one polynomial in y per line)");
        sub->add_option("--seed", cfg.seed, "seed for the randomized steps (default 0)");
        sub->add_option("--trunc", cfg.trunc, "initial Puiseux truncation override");
        sub->add_flag("--json", cfg.json_mode, "machine-readable json-lines output");
    };

    CLI::App* fac = app.add_subcommand("factor", "factor a squarefree bivariate polynomial");
    add_common(fac);
    fac->add_flag("--rational", cfg.rational, "rational factorization (default)");
    fac->add_flag("--absolute", cfg.absolute, "absolute factorization over the algebraic closure");

    CLI::App* ana = app.add_subcommand("analyze", "report d, n, s, sbar, dim A and genus data");
    add_common(ana);

    CLI::App* adj = app.add_subcommand("adjoints", "print a basis of A (or of Adj(m) with --degree)");
    add_common(adj);
    adj->add_option("--degree", cfg.adj_degree, "dump the Adj(m) basis for this degree instead");

    CLI11_PARSE(app, argc, argv);
    cfg.command = app.get_subcommands()[0]->get_name();
    if (cfg.absolute && cfg.rational) {
        std::cerr << "error: --rational and --absolute are mutually exclusive\n";
        return 1;
    }

    std::string err;
    af_context* ctx = open_context(cfg.field, err);
    if (!ctx) {
        std::cerr << "error: " << err << "\n";
        return 1;
    }
    std::unique_ptr<af_context, decltype(&af_context_free)> ctx_guard(ctx, af_context_free);

    std::string adjoint_contents;
    af_options opt{};
    opt.seed = cfg.seed;
    opt.truncation = cfg.trunc;
    opt.adjoint_basis = nullptr;
    if (!cfg.adjoint_basis_file.empty()) {
        std::ifstream in(cfg.adjoint_basis_file);
        if (!in.good()) {
            std::cerr << "error: cannot read " << cfg.adjoint_basis_file << "\n";
            return 1;
        }
        std::ostringstream os;
        os << in.rdbuf();
        adjoint_contents = os.str();
        opt.adjoint_basis = adjoint_contents.c_str();
    }

    af_poly* poly = nullptr;
    af_status st = af_poly_parse(ctx, read_input(cfg.input).c_str(), &poly);
    if (st != AF_OK) return fail_with(ctx, st);
    std::unique_ptr<af_poly, decltype(&af_poly_free)> poly_guard(poly, af_poly_free);

    if (cfg.command == "factor" && !cfg.absolute) {
        af_rational_result* res = nullptr;
        st = af_factor_rational(ctx, poly, &opt, &res);
        if (st != AF_OK) return fail_with(ctx, st);
        if (cfg.json_mode) {
            std::cout << json{{"record", "unit"},
                              {"value", take_string(af_rational_result_unit(res))}}
                      << "\n";
            for (size_t i = 0; i < af_rational_result_count(res); ++i) {
                json r = poly_record(af_rational_result_factor(res, i));
                r["record"] = "factor";
                std::cout << r << "\n";
            }
        } else {
            std::cout << "unit: " << take_string(af_rational_result_unit(res)) << "\n";
            for (size_t i = 0; i < af_rational_result_count(res); ++i)
                std::cout << "factor: "
                          << take_string(af_poly_to_string(af_rational_result_factor(res, i)))
                          << "\n";
        }
        af_rational_result_free(res);
        return 0;
    }

    if (cfg.command == "factor") {
        af_absolute_result* res = nullptr;
        st = af_factor_absolute(ctx, poly, &opt, &res);
        if (st != AF_OK) return fail_with(ctx, st);
        if (cfg.json_mode) {
            std::cout << json{{"record", "unit"},
                              {"value", take_string(af_absolute_result_unit(res))}}
                      << "\n";
            for (size_t i = 0; i < af_absolute_result_count(res); ++i) {
                json r = poly_record(af_absolute_result_factor(res, i));
                r["record"] = "pair";
                r["q"] = take_string(af_absolute_result_q(res, i));
                std::cout << r << "\n";
            }
        } else {
            std::cout << "unit: " << take_string(af_absolute_result_unit(res)) << "\n";
            for (size_t i = 0; i < af_absolute_result_count(res); ++i) {
                std::cout << "q: " << take_string(af_absolute_result_q(res, i)) << "\n";
                std::cout << "Q: "
                          << take_string(af_poly_to_string(af_absolute_result_factor(res, i)))
                          << "\n";
            }
        }
        af_absolute_result_free(res);
        return 0;
    }

    if (cfg.command == "analyze") {
        af_analysis an{};
        st = af_analyze(ctx, poly, &opt, &an);
        if (st != AF_OK) return fail_with(ctx, st);
        if (cfg.json_mode) {
            std::cout << json{{"record", "analysis"},
                              {"d", an.d},
                              {"n", an.n},
                              {"s", an.s},
                              {"sbar", an.sbar},
                              {"dimA", an.dim_a},
                              {"genus_report", an.genus_report},
                              {"genus_is_geometric", an.genus_is_geometric != 0},
                              {"hypothesis", an.hypothesis == 0 ? "separable" : "hprime"}}
                      << "\n";
        } else {
            std::cout << "d=" << an.d << " n=" << an.n << (an.hypothesis != 0 ? "(clusters)" : "")
                      << " s=" << an.s << " sbar=" << an.sbar << " dimA=" << an.dim_a << "\n";
            std::cout << "genus_report=" << an.genus_report
                      << (an.genus_is_geometric ? " (geometric)"
                                                : " (arithmetic of the partially resolved model)")
                      << "\n";
        }
        return 0;
    }

    // adjoints
    af_basis_result* res = nullptr;
    st = cfg.adj_degree >= 0 ? af_adjoint_basis(ctx, poly, cfg.adj_degree, &opt, &res)
                             : af_aspace_basis(ctx, poly, &opt, &res);
    if (st != AF_OK) return fail_with(ctx, st);
    if (cfg.json_mode) {
        for (size_t i = 0; i < af_basis_result_count(res); ++i)
            std::cout << json{{"record", "basis"},
                              {"poly", take_string(af_basis_result_poly(res, i))}}
                      << "\n";
    } else {
        std::cout << "# " << (cfg.adj_degree >= 0 ? "Adj basis" : "A basis") << "\n";
        for (size_t i = 0; i < af_basis_result_count(res); ++i)
            std::cout << take_string(af_basis_result_poly(res, i)) << "\n";
    }
    af_basis_result_free(res);
    return 0;
}
