#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"

#include "bharm/audit.hpp"
#include "bharm/errors.hpp"
#include "bharm/field.hpp"
#include "bharm/quadrature.hpp"

using namespace bharm;

namespace {

QuadSpec spec_with(int nodes, double radius) {
    QuadSpec s;
    s.nodes_per_axis = nodes;
    s.truncation_radius = radius;
    return s;
}

std::vector<ScalarField> battery(int n) {
    std::vector<ScalarField> fns;
    fns.push_back(ScalarField::gaussian(n, 1.0));
    fns.push_back(ScalarField::polynomial_gaussian(n));
    fns.push_back(ScalarField::gaussian(n, 0.75));
    return fns;
}

bool has_param(const AuditReport& r, const std::string& key) {
    for (const auto& [k, v] : r.parameters)
        if (k == key) return true;
    return false;
}

std::string param(const AuditReport& r, const std::string& key) {
    for (const auto& [k, v] : r.parameters)
        if (k == key) return v;
    return {};
}

bool equal_modulo_runtime(const AuditReport& a, const AuditReport& b) {
    return a.identity_id == b.identity_id && a.parameters == b.parameters &&
           a.residual == b.residual && a.ratio == b.ratio &&
           a.fitted_exponent == b.fitted_exponent &&
           a.tolerance == b.tolerance && a.pass == b.pass && a.note == b.note;
}

}  // namespace

TEST_CASE("exact image audits hold for every small order") {
    for (const char* vtxt : {"3/5,7/10", "1/2,1/2"}) {
        const WeightVector v = WeightVector::parse(vtxt);
        for (int k : {1, 2, 3}) {
            CHECK(audit_eq17_product(k, v).pass);
            const AuditReport img = audit_lemma7_image(k, v);
            CHECK(img.pass);
            REQUIRE(img.ratio.has_value());
            // Derived coefficient is positive, the claimed one is -1.
            CHECK(*img.ratio < 0.0);
            CHECK(audit_image_constants(k, v).pass);
            for (int m : {1, 2, 3}) {
                CHECK(audit_lemma7_additivity(k, m, v).pass);
                CHECK(audit_theorem5_composition(k, m, v).pass);
            }
        }
        // Reduction below, at, and above the kernel order.
        CHECK(audit_theorem2_reduction(3, 1, v).pass);
        CHECK(audit_theorem2_reduction(3, 3, v).pass);
        CHECK(audit_theorem2_reduction(2, 3, v).pass);
    }
}

TEST_CASE("growth-bound audit fits the quartic slope") {
    const WeightVector v = WeightVector::parse("0.5,0.5,0.5");
    const SignatureSplit s{2, 1};
    const std::vector<std::vector<double>> rays{{1.0, 1.0, 0.5}};

    SUBCASE("k = 1 and k = 2 slopes") {
        for (int k : {1, 2}) {
            const AuditReport r = audit_growth_bound(k, s, v, rays);
            CHECK(r.pass);
            REQUIRE(r.fitted_exponent.has_value());
            CHECK(*r.fitted_exponent ==
                  doctest::Approx(4.0 * k).epsilon(1e-6));
            CHECK(has_param(r, "empirical_M"));
            REQUIRE(r.ratio.has_value());
            CHECK(*r.ratio == doctest::Approx(2.0));
        }
    }

    SUBCASE("k = 0 image is constant") {
        const AuditReport r = audit_growth_bound(0, s, v, rays);
        CHECK(r.pass);
        REQUIRE(r.fitted_exponent.has_value());
        CHECK(*r.fitted_exponent == 0.0);
    }

    SUBCASE("rays outside the cone are skipped but reported") {
        const std::vector<std::vector<double>> mixed{{0.5, 0.5, 1.0},
                                                     {1.0, 1.0, 0.5}};
        const AuditReport r = audit_growth_bound(1, s, v, mixed);
        CHECK(r.pass);
        CHECK(param(r, "rays") == "1");
        CHECK(r.note.find("skipped") != std::string::npos);
    }

    SUBCASE("degenerate ray sets are rejected") {
        const std::vector<std::vector<double>> bad{{0.5, 0.5, 1.0}};
        CHECK_THROWS_AS(audit_growth_bound(1, s, v, bad), DomainError);
        CHECK_THROWS_AS(audit_growth_bound(1, s, v, {}), ConfigError);
        CHECK_THROWS_AS(
            audit_growth_bound(1, s, v,
                               std::vector<std::vector<double>>{{1.0, 1.0}}),
            DomainError);
        CHECK_THROWS_AS(audit_growth_bound(-1, s, v, rays), ConfigError);
    }
}

TEST_CASE("weak pairings reproduce the image constants") {
    const QuadSpec spec = spec_with(64, 12.0);
    const SignatureSplit s{1, 1};

    SUBCASE("half-integer weights, single application") {
        const WeightVector v = WeightVector::parse("0.5,0.5");
        // Expected constant 2^(N/2-2k) Gamma(k) = 1 here.
        for (const ScalarField& f : battery(2)) {
            const double ratio =
                weak_pairing(WeakKind::LaplaceBessel, 1, f, v, s, spec);
            CHECK(ratio == doctest::Approx(1.0).epsilon(0.01));
        }
    }

    SUBCASE("generic weights, iterated application") {
        // N = 5, k = 2: expected 2^(5/2-4) Gamma(2) = 2^(-3/2).
        const WeightVector v = WeightVector::parse("3/4,3/4");
        const double want = std::pow(2.0, -1.5);
        const double ratio = weak_pairing(WeakKind::LaplaceBessel, 2,
                                          ScalarField::gaussian(2, 1.0), v, s,
                                          spec);
        CHECK(ratio == doctest::Approx(want).epsilon(0.01));
    }

    SUBCASE("box pairing is test-function independent") {
        // k = 2 keeps the cone-boundary exponent 2k-1-2|v| above -1; the
        // same weights with k = 1 are non-integrable and must be refused.
        const WeightVector v = WeightVector::parse("3/5,7/10");
        const AuditReport r = audit_weak_solution(WeakKind::BoxBessel, 2,
                                                  battery(2), v, s, spec);
        CHECK(r.pass);
        CHECK(r.residual <= 0.01);
        CHECK(param(r, "parity_hypothesis") == "holds");
        CHECK_THROWS_AS(weak_pairing(WeakKind::BoxBessel, 1,
                                     ScalarField::gaussian(2, 1.0), v, s,
                                     spec),
                        DomainError);
    }

    SUBCASE("capability and configuration guards") {
        const WeightVector v1 = WeightVector::parse("0.5");
        const WeightVector v2 = WeightVector::parse("0.5,0.5");
        const ScalarField f1 = ScalarField::gaussian(1, 1.0);
        const ScalarField f2 = ScalarField::gaussian(2, 1.0);
        CHECK_THROWS_AS(weak_pairing(WeakKind::LaplaceBessel, 1, f1, v1,
                                     {1, 0}, spec),
                        CapabilityError);
        CHECK_THROWS_AS(weak_pairing(WeakKind::BoxBessel, 1, f2, v2, {2, 0},
                                     spec),
                        CapabilityError);
        CHECK_THROWS_AS(weak_pairing(WeakKind::LaplaceBessel, 0, f2, v2, s,
                                     spec),
                        ConfigError);
        // Degenerate radial prefactor at N = 4, k = 2 surfaces as such.
        CHECK_THROWS_AS(weak_pairing(WeakKind::LaplaceBessel, 2, f2, v2, s,
                                     spec),
                        DegenerateConstantError);
        // Fewer than three test functions is a configuration error.
        std::vector<ScalarField> two{ScalarField::gaussian(2, 1.0),
                                     ScalarField::gaussian(2, 0.75)};
        CHECK_THROWS_AS(audit_weak_solution(WeakKind::LaplaceBessel, 1, two,
                                            v2, s, spec),
                        ConfigError);
    }
}

TEST_CASE("solution-structure audit across the case split") {
    const WeightVector v = WeightVector::parse("0.5,0.5");
    const SignatureSplit s{1, 1};
    for (auto [k, m] : {std::pair{2, 0}, std::pair{3, 2}, std::pair{1, 2}}) {
        const AuditReport r = audit_solution_structure(k, m, v, s);
        CHECK(r.pass);
        CHECK(r.residual == 0.0);
        CHECK(r.note.find("solution structure") != std::string::npos);
    }
}

TEST_CASE("suite registry") {
    CHECK(suite_ids().size() == 12);

    SUBCASE("unknown ids name the valid ones") {
        try {
            run_suite("nope", {});
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("valid suites") !=
                  std::string::npos);
            CHECK(std::string(e.what()).find("lemma7") != std::string::npos);
        }
    }

    SUBCASE("exact suites pass and rerun bit-identically") {
        for (const char* id : {"lemma7", "theorem2", "theorem3", "theorem5"}) {
            const std::vector<AuditReport> a = run_suite(id, {});
            const std::vector<AuditReport> b = run_suite(id, {});
            REQUIRE(!a.empty());
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                CHECK(a[i].pass);
                CHECK(equal_modulo_runtime(a[i], b[i]));
            }
        }
    }

    SUBCASE("growth suite passes with its canonical rays") {
        for (const AuditReport& r : run_suite("eq16", {})) {
            CHECK(r.pass);
            CHECK(r.identity_id == "eq16-bound");
        }
    }

    SUBCASE("weak suite reproduces the unit constant") {
        const std::vector<AuditReport> reports = run_suite("lemma2", {});
        REQUIRE(!reports.empty());
        bool saw_weak = false;
        for (const AuditReport& r : reports) {
            CHECK(r.pass);
            if (r.identity_id == "lemma2-weak") {
                saw_weak = true;
                REQUIRE(r.ratio.has_value());
                CHECK(*r.ratio == doctest::Approx(1.0).epsilon(0.02));
            }
        }
        CHECK(saw_weak);
    }

    SUBCASE("config overrides are validated") {
        AuditConfig cfg;
        cfg.n = 2;
        cfg.v = WeightVector::parse("0.5");
        CHECK_THROWS_AS(run_suite("lemma7", cfg), ConfigError);

        AuditConfig high_n;
        high_n.n = 5;
        CHECK_THROWS_AS(run_suite("lemma7", high_n), ConfigError);

        AuditConfig neg_k;
        neg_k.k = -1;
        CHECK_THROWS_AS(run_suite("lemma7", neg_k), ConfigError);

        AuditConfig bad_nodes;
        bad_nodes.nodes = -5;
        CHECK_THROWS_AS(run_suite("lemma7", bad_nodes), ConfigError);
    }
}
