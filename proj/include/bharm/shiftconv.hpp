#ifndef BHARM_SHIFTCONV_HPP
#define BHARM_SHIFTCONV_HPP

#include <span>

#include "bharm/exact.hpp"
#include "bharm/field.hpp"
#include "bharm/quadrature.hpp"

namespace bharm {

// Normalizer of the generalized shift: the Gegenbauer product-formula
// constant prod_i Gamma(v_i + 1/2) / (Gamma(1/2) Gamma(v_i)), i.e. the
// reciprocal of prod_i B(v_i, 1/2). Makes the shift of the constant
// function 1 equal to 1.
ExactConstant shift_normalizer(const WeightVector& v);

// Variant with Gamma(v_i + 1) in place of Gamma(v_i + 1/2), as the constant
// is sometimes stated; kept for the constant-discrepancy audits. Does not
// normalize the angular measure.
ExactConstant shift_normalizer_classical(const WeightVector& v);

// Generalized shift (T_x^y f): the normalized angular average of
// f(sqrt(x_i^2 + y_i^2 - 2 x_i y_i cos theta_i)) against
// prod sin(theta_i)^(2 v_i - 1). Requires x, y strictly positive, matching
// dimensions, n <= 3.
double shift(const ScalarField& f, std::span<const double> x,
             std::span<const double> y, const WeightVector& v,
             const QuadSpec& spec);

// Weighted convolution built on the shift:
//     (f * g)(x) = int f(y) (T_x^y g)(x) dmu_v(y),
// with the normalized measure dmu_v = C_v prod y_i^(2 v_i) dy, C_v the
// transform normalizer. The normalizer in the measure is what makes the
// transform factorize products exactly; see the fbt module docs.
double bconvolve(const ScalarField& f, const ScalarField& g,
                 std::span<const double> x, const WeightVector& v,
                 const QuadSpec& spec);

// The convolution as a field (for feeding into transforms).
ScalarField bconvolve_field(const ScalarField& f, const ScalarField& g,
                            const WeightVector& v, const QuadSpec& spec);

}  // namespace bharm

#endif
