#ifndef BHARM_BESSELOPS_HPP
#define BHARM_BESSELOPS_HPP

#include <span>
#include <vector>

#include "bharm/field.hpp"
#include "bharm/kernels.hpp"
#include "bharm/quadrature.hpp"
#include "bharm/rational.hpp"

namespace bharm {

// ---- Single-axis operator algebra ------------------------------------------
//
// Powers of the one-dimensional operator B = d^2/dt^2 + (2v/t) d/dt expand
// into sums  coeff * t^(-inv_pow) * d^deriv  with exact rational
// coefficients; every term of B^j satisfies inv_pow + deriv = 2j.

struct AxisTerm {
    Rational coeff;
    int inv_pow = 0;
    int deriv = 0;
};

using AxisOp = std::vector<AxisTerm>;

// B^j for the weight v, fully expanded; j >= 0 (j = 0 is the identity).
AxisOp bessel_power_op(const Rational& v, int j);

// (B^j f)(t) for a one-argument profile given by its derivatives:
// profile(m, t) = f^(m)(t). t > 0.
double apply_axis_op(const AxisOp& op,
                     const std::function<double(int, double)>& profile,
                     double t);

// ---- Multi-axis symbols ------------------------------------------------------
//
// A polynomial sum_alpha c_alpha prod_i B_i^(alpha_i) in the commuting
// per-axis operators, with exact coefficients. The Laplace, wave and
// diamond operators are all of this shape.

struct BesselMonomial {
    std::vector<int> powers;  // per-axis Bessel powers alpha_i
    Rational coeff;
};

using BesselPolynomial = std::vector<BesselMonomial>;

BesselPolynomial laplace_symbol(int n);                            // sum B_i
BesselPolynomial box_symbol(const SignatureSplit& s, int n);       // sum_p - sum_q
BesselPolynomial multiply_symbols(const BesselPolynomial& a,
                                  const BesselPolynomial& b);
BesselPolynomial power_symbol(const BesselPolynomial& a, int k);
// The diamond symbol in its two constructions, box^k laplace^k and
// ((sum_p B)^2 - (sum_q B)^2)^k. Both canonicalize to the same polynomial;
// keeping both routes gives the algebra a built-in cross-check.
BesselPolynomial diamond_symbol(int k, const SignatureSplit& s, int n);
BesselPolynomial diamond_symbol_bracketed(int k, const SignatureSplit& s,
                                          int n);
bool symbols_equal(const BesselPolynomial& a, const BesselPolynomial& b);

// Total Bessel degree 2 * max sum alpha_i; the derivative order the
// application needs.
int symbol_derivative_order(const BesselPolynomial& p);

// ---- Application -------------------------------------------------------------

enum class DerivativeMode {
    Auto,              // analytic partials when the field has them, else FD
    Analytic,          // require analytic partials (CapabilityError otherwise)
    FiniteDifference,  // force nested central differences
};

enum class OperatorKind {
    BesselAxis,     // B_i on one axis (axis index in OperatorSpec)
    LaplaceBessel,  // sum of B_i
    BoxBessel,      // signed sum over the split
    DiamondBessel,  // box^k compose laplace^k
};

struct OperatorSpec {
    OperatorKind kind = OperatorKind::LaplaceBessel;
    int iterate = 1;  // k >= 1
    int axis = 0;     // BesselAxis only
    SignatureSplit split;  // BoxBessel / DiamondBessel only
    DerivativeMode mode = DerivativeMode::Auto;
    // DiamondBessel analytic mode: apply the bracketed expansion
    // ((sum_p B)^2-(sum_q B)^2)^k instead of box^k laplace^k.
    bool bracketed_form = false;
};

// Nested central-difference mixed partial with one Richardson step.
// Total order <= 4. step_scale widens the base step h0 = 1e-3 min(x_i)
// (outer levels of nested operator application use 2^level). A stencil
// that would leave the positive orthant is a domain error.
double fd_partial(const ScalarField& f, std::span<const int> order,
                  std::span<const double> x, double step_scale = 1.0);

// (P f)(x) for a multi-axis symbol; x strictly positive. In FD mode the
// symbol's full derivative order must be <= 4.
double apply_symbol(const BesselPolynomial& p, const ScalarField& f,
                    std::span<const double> x, const WeightVector& v,
                    DerivativeMode mode = DerivativeMode::Auto,
                    double step_scale = 1.0);

// Iterated operator application. Analytic mode expands the k-th power
// symbolically and applies it in one pass. Finite-difference mode nests
// degree-two passes (one per Laplace/box factor), level ell using step
// scale 2^ell, and supports iterate <= 2 (cancellation grows too fast
// beyond that; use analytic partials).
double apply_operator(const OperatorSpec& op, const ScalarField& f,
                      std::span<const double> x, const WeightVector& v);

double apply_bessel_axis(const ScalarField& f, int axis,
                         std::span<const double> x, const WeightVector& v,
                         DerivativeMode mode = DerivativeMode::Auto);
double apply_laplace(const ScalarField& f, std::span<const double> x,
                     const WeightVector& v,
                     DerivativeMode mode = DerivativeMode::Auto);
double apply_box(const ScalarField& f, std::span<const double> x,
                 const WeightVector& v, const SignatureSplit& s,
                 DerivativeMode mode = DerivativeMode::Auto);
double apply_diamond(int k, const ScalarField& f, std::span<const double> x,
                     const WeightVector& v, const SignatureSplit& s,
                     DerivativeMode mode = DerivativeMode::Auto);

}  // namespace bharm

#endif
