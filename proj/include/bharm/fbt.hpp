#ifndef BHARM_FBT_HPP
#define BHARM_FBT_HPP

#include <span>
#include <utility>

#include "bharm/exact.hpp"
#include "bharm/field.hpp"
#include "bharm/quadrature.hpp"

namespace bharm {

// Transform normalizer C_v = prod_i (2^(v_i - 1/2) Gamma(v_i + 1/2))^(-1).
// With this constant the transform is an involution: applying it twice
// returns the input.
ExactConstant transform_normalizer(const WeightVector& v);

// Variant with (v_i + 1/2) in place of Gamma(v_i + 1/2), as the constant is
// sometimes stated; kept for the constant-discrepancy audits. Breaks the
// involution for v != 1/2.
ExactConstant transform_normalizer_classical(const WeightVector& v);

// Numeric transform
//     (F f)(x) = C_v int f(y) prod_i j(v_i, x_i y_i) y_i^(2 v_i) dy
// over the positive orthant, j the normalized Bessel kernel. Damping and
// truncation come from the QuadSpec; the field's decay class selects
// origin grading. x strictly positive, n <= 3.
double fb_numeric(const ScalarField& f, std::span<const double> x,
                  const WeightVector& v, const QuadSpec& spec);

// Closed-form transform of |y|^(-alpha):  coefficient * |x|^(alpha - N),
// N = n + 2|v|, on the validity window 0 < alpha < N. The coefficient is
//     2^(N/2 - alpha) Gamma((N - alpha)/2) / Gamma(alpha/2),
// exact. A Gamma pole marks the result degenerate rather than throwing.
struct PowerLaw {
    ExactConstant coefficient;
    Rational exponent;
    bool degenerate() const { return coefficient.degenerate(); }
};
PowerLaw fb_powerlaw(const Rational& alpha, const WeightVector& v);

// The same coefficient as it is usually printed, 2^(N - 2 alpha) G(...)/G(...);
// differs from the adopted one by 2^(N/2 - alpha). Reported by the audits.
ExactConstant fb_powerlaw_coefficient_classical(const Rational& alpha,
                                                const WeightVector& v);

// Factorization check: returns (transform of f*g at x, product of the
// transforms at x).
std::pair<double, double> fb_conv_check(const ScalarField& f,
                                        const ScalarField& g,
                                        std::span<const double> x,
                                        const WeightVector& v,
                                        const QuadSpec& spec);

}  // namespace bharm

#endif
