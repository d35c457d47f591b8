#ifndef BHARM_QUADRATURE_HPP
#define BHARM_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

#include "bharm/field.hpp"
#include "bharm/rational.hpp"

namespace bharm {

// Per-axis weight indices v_i > 0. Carries exact rationals alongside the
// cached doubles so the symbolic constant layer never re-parses floats.
class WeightVector {
public:
    explicit WeightVector(std::vector<Rational> exact);
    static WeightVector uniform(int dim, const Rational& v);
    // Parses "0.5,0.6" or "1/2,3/5".
    static WeightVector parse(std::string_view text);

    int dim() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    const Rational& exact(int i) const { return exact_[i]; }
    Rational abs_exact() const;  // |v| = sum v_i
    double abs() const;

private:
    std::vector<Rational> exact_;
    std::vector<double> values_;
};

// Quadrature/damping budgets shared by every integral in the library.
struct QuadSpec {
    int nodes_per_axis = 48;
    double truncation_radius = 12.0;
    // Damping strengths for exp(-eps * sum y_i); strictly decreasing,
    // positive. Empty means a single undamped pass.
    std::vector<double> regularization_schedule;
    int extrapolation_order = 3;

    void validate() const;  // throws ConfigError
};

struct GaussRule {
    std::vector<double> nodes, weights;
};

// Gauss-Legendre rule on [-1, 1]; n >= 1.
GaussRule gauss_legendre(int n);

// Gauss-Jacobi rule on [-1, 1] for weight (1-x)^alpha (1+x)^beta,
// alpha, beta > -1, via Golub-Welsch.
GaussRule gauss_jacobi(int n, double alpha, double beta);

// Deterministic pairwise (binary-tree) summation.
double pairwise_sum(std::span<const double> terms);

using AngularFunction = std::function<double(std::span<const double>)>;
using OrthantFunction = std::function<double(std::span<const double>)>;

// int over [0, pi]^n of f(theta) prod_i sin(theta_i)^(2 v_i - 1) dtheta.
// The sin factors are absorbed into per-axis Gauss-Jacobi rules in
// u = cos(theta), so fractional v_i cost no accuracy. n <= 3.
double integrate_angular(const AngularFunction& f, const WeightVector& v,
                         const QuadSpec& spec);

struct IntegralResult {
    double value;
    double error_estimate;  // from the damping-extrapolation tableau; 0 if undamped
};

// int over (0, R]^n of f(y) prod y_i^(2 v_i) dy with optional Abel damping
// exp(-eps sum y_i) extrapolated to eps = 0 over the schedule. Nested
// axis-major tensor Gauss-Legendre with pairwise reduction per axis; n <= 3.
// grade_origin substitutes y = u^2 per axis to soften origin singularities.
IntegralResult integrate_orthant(const OrthantFunction& f,
                                 const WeightVector& v, const QuadSpec& spec,
                                 bool grade_origin = false);

// ScalarField overload: derives damping requirements and origin grading
// from the field's decay class.
IntegralResult integrate_orthant(const ScalarField& f, const WeightVector& v,
                                 const QuadSpec& spec);

// int over the positive orthant of g(r, omega) r^(N-1) prod omega_i^(2 v_i)
// dr domega in polar form, N = n + 2|v|: radial Gauss-Legendre on (0, R]
// times the exact-weight angular rule on the unit sphere octant. Used for
// integrands that are smooth in (r, omega) but kinked at the origin in
// Cartesian form. f receives the Cartesian point. n in {2, 3}.
IntegralResult integrate_orthant_polar(const OrthantFunction& f,
                                       const WeightVector& v,
                                       const QuadSpec& spec);

}  // namespace bharm

#endif
