#ifndef ADJFACTOR_PIPELINE_HPP
#define ADJFACTOR_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "adjfactor/absolute.hpp"

namespace af {

enum class HypothesisClass { Separable, HPrime, Unsupported };

struct HypothesisReport {
    HypothesisClass cls = HypothesisClass::Unsupported;
    int d = 0;
    std::string diagnostic;
};

struct CurveAnalysis {
    int d = 0;
    int n = 0;     // modular factors of F(0,y) (clusters on the H' path)
    int s = 0;     // rational factors
    int sbar = 0;  // absolute factors, = d - dim A
    int dimA = 0;
    int genus_report = 0;         // dim Adj(d-3)
    bool genus_is_geometric = false;
    HypothesisClass hypothesis = HypothesisClass::Unsupported;
};

struct RationalFactorization {
    Coeff unit;
    std::vector<BPoly> factors;
};

struct PipelineOptions {
    std::uint64_t seed = 0;
    int trunc_override = 0;  // 0: default policy (doubling retries either way)
    std::optional<std::vector<UPoly>> external_A;
    int max_retries = 8;  // absolute section redraws
};

// classification under (H)/(H'): verifies deg F(0,y) = deg F, separability,
// and on the non-separable path local irreducibility over every multiple root
HypothesisReport check_hypothesis(const BPoly& f, Rng& rng);

RationalFactorization factor_rational(const BPoly& f, const PipelineOptions& opt = {});
AbsoluteFactorization factor_absolute(const BPoly& f, const PipelineOptions& opt = {});
CurveAnalysis analyze(const BPoly& f, const PipelineOptions& opt = {});

// intermediate results exposed for inspection and tests
struct CurveContext {
    Coeff unit;
    BPoly fm;  // monic-normalized curve
    int d = 0;
    HypothesisReport report;
    UniFactorization f0fac;
    ASpace A;
    bool a_external = false;
    int dim_adj_dm2 = -1;
    int dim_adj_dm3 = -1;
    bool genus_is_geometric = false;
};

CurveContext build_curve_context(const BPoly& f, const PipelineOptions& opt, Rng& rng,
                                 bool need_adjoints = true);
RecombSystem recombination_system(const CurveContext& ctx);

// parse the A-space file format: one polynomial in y per line, blank lines
// and '#' comments ignored
std::vector<UPoly> parse_aspace_lines(const std::string& text, const Field& k);
// reject vectors that are not degree <= d-2 or violate the residue-sum identity
void validate_external_A(const std::vector<UPoly>& basis, const CurveContext& ctx);

}  // namespace af

#endif
