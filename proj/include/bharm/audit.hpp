#ifndef BHARM_AUDIT_HPP
#define BHARM_AUDIT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bharm/field.hpp"
#include "bharm/kernels.hpp"
#include "bharm/quadrature.hpp"

namespace bharm {

// One verification result. ratio carries observed/claimed constants where
// the identity is of ratio type; fitted_exponent carries log-log slopes.
// pass means residual <= tolerance (or the ratio-consistency criterion for
// ratio-type checks). runtime_ms is wall-clock metadata and the only field
// exempt from the bit-identical-rerun guarantee.
struct AuditReport {
    std::string identity_id;
    std::vector<std::pair<std::string, std::string>> parameters;
    double residual = 0.0;
    std::optional<double> ratio;
    std::optional<double> fitted_exponent;
    double tolerance = 0.0;
    bool pass = false;
    std::int64_t runtime_ms = 0;
    std::string note;
};

// Optional overrides applied on top of each suite's canonical defaults.
struct AuditConfig {
    std::optional<int> n;
    std::optional<WeightVector> v;
    std::optional<SignatureSplit> split;
    std::optional<int> k;
    std::optional<int> nodes;
    std::optional<double> radius;
    std::optional<std::vector<double>> schedule;
};

enum class WeakKind { LaplaceBessel, BoxBessel };

// The weak pairing <kernel, L^k testfn> against the weighted measure,
// divided by testfn(0): integral of kernel(y) (L^k testfn)(y) prod y^(2v) dy.
// LaplaceBessel pairs (-1)^k S_2k with the k-fold Laplace operator (polar
// quadrature, n in {2,3}); BoxBessel pairs R_2k with the k-fold box
// operator (hyperbolic coordinates, n = 2, split (1,1) only).
double weak_pairing(WeakKind kind, int k, const ScalarField& testfn,
                    const WeightVector& v, const SignatureSplit& split,
                    const QuadSpec& spec);

// Ratio-consistency audit across >= 3 test functions: the pairing ratio
// must not depend on the test function (a delta pairing sees only phi(0)).
AuditReport audit_weak_solution(WeakKind kind, int k,
                                const std::vector<ScalarField>& testfns,
                                const WeightVector& v,
                                const SignatureSplit& split,
                                const QuadSpec& spec);

// Exact Fourier-domain identities.
AuditReport audit_eq17_product(int k, const WeightVector& v);
AuditReport audit_lemma7_image(int k, const WeightVector& v);
AuditReport audit_lemma7_additivity(int k, int m, const WeightVector& v);
AuditReport audit_theorem2_reduction(int k, int r, const WeightVector& v);
AuditReport audit_theorem5_composition(int k, int m, const WeightVector& v);
// Wrapper combining the image checks for one k (the constant-provenance
// comparison plus the product identity).
AuditReport audit_image_constants(int k, const WeightVector& v);

// Log-log growth of |transform of diamond^k delta| along rays in the cone;
// also reports the decay slope of the kernel image and its sup over the
// far radii (the empirical bound constant M).
AuditReport audit_growth_bound(int k, const SignatureSplit& split,
                               const WeightVector& v,
                               const std::vector<std::vector<double>>& rays);

// Theorem 3 case-structure audit for one (k, m) pair.
AuditReport audit_solution_structure(int k, int m, const WeightVector& v,
                                     const SignatureSplit& split);

const std::vector<std::string>& suite_ids();

// Runs one named suite with canonical defaults plus config overrides.
// Unknown ids raise ConfigError listing the valid names.
std::vector<AuditReport> run_suite(const std::string& suite_id,
                                   const AuditConfig& config);

}  // namespace bharm

#endif
