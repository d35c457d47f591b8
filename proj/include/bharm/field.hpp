#ifndef BHARM_FIELD_HPP
#define BHARM_FIELD_HPP

#include <functional>
#include <span>
#include <vector>

namespace bharm {

// Decay classification of a field on the open positive orthant; drives
// integrability checks, damping requirements and origin-graded quadrature.
enum class DecayClass {
    RapidlyDecaying,
    PolynomialGrowth,
    CompactSupport,
    SingularAtOrigin,
};

using MultiIndex = std::vector<int>;

// A scalar field on the open positive orthant, optionally carrying analytic
// mixed partial derivatives (needed by the differential-operator module in
// analytic mode) and metadata used by the quadrature and transform layers.
class ScalarField {
public:
    using Eval = std::function<double(std::span<const double>)>;
    using Partial =
        std::function<double(std::span<const int>, std::span<const double>)>;

    ScalarField(int dim, Eval eval, DecayClass decay, int smoothness_order,
                Partial partial = nullptr)
        : dim_(dim),
          smoothness_(smoothness_order),
          decay_(decay),
          eval_(std::move(eval)),
          partial_(std::move(partial)) {}

    int dim() const { return dim_; }
    int smoothness_order() const { return smoothness_; }
    DecayClass decay_class() const { return decay_; }
    bool has_analytic_partials() const { return static_cast<bool>(partial_); }

    double operator()(std::span<const double> x) const { return eval_(x); }

    // Mixed partial of the given multi-index order. Requires analytic
    // partials; callers fall back to finite differences otherwise.
    double partial(std::span<const int> order,
                   std::span<const double> x) const;

    // ---- Built-in families ----------------------------------------------

    // exp(-|x - center|^2 / (2 width^2)) with exact partials of any order.
    static ScalarField gaussian(int dim, double width);
    static ScalarField bump(int dim, std::span<const double> center,
                            double width);

    // |x|^(-alpha); no analytic partials (used as transform input only).
    static ScalarField power_radial(int dim, double alpha);

    // (1 + |x|^2) exp(-|x|^2): a non-Gaussian rapidly decaying test shape.
    static ScalarField polynomial_gaussian(int dim);

    // (1 + |x|^2)^(-s): slow polynomial decay, s > 0.
    static ScalarField rational_decay(int dim, double s);

    // prod_i normalized_j(v_i, x_i y_i) for a fixed frequency vector y:
    // the joint eigenfunction of the per-axis Bessel operators.
    static ScalarField bessel_plane_wave(std::span<const double> v,
                                         std::span<const double> y);

    // Separable product of per-axis profiles with per-axis derivatives:
    // f(x) = prod_i axis(i, 0, x_i); axis(i, m, t) is the m-th derivative.
    static ScalarField separable(
        int dim, std::function<double(int, int, double)> axis,
        DecayClass decay, int smoothness_order);

    // Radial profile field p(u), u = |x - center|^2, given du-derivatives
    // of the profile: profile(j, u) = p^(j)(u). Partials of any order come
    // from the expansion of (d/dy)^a p((y - c)^2 + ...) with exact integer
    // coefficients.
    static ScalarField radial_profile(
        int dim, std::function<double(int, double)> profile,
        std::span<const double> center, DecayClass decay,
        int smoothness_order);

private:
    int dim_;
    int smoothness_;
    DecayClass decay_;
    Eval eval_;
    Partial partial_;
};

}  // namespace bharm

#endif
