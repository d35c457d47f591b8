#ifndef BHARM_KERNELS_HPP
#define BHARM_KERNELS_HPP

#include <span>
#include <vector>

#include "bharm/exact.hpp"
#include "bharm/quadrature.hpp"

namespace bharm {

// Signature split (p, q), p + q = n: the first p axes enter the
// ultra-hyperbolic operator with +, the last q with -.
struct SignatureSplit {
    int p = 1, q = 0;
};

void validate_split(const SignatureSplit& s, int n);

// The classical uniqueness hypothesis for the cone-supported elementary
// solution: n odd with p odd, q even, or n even with p odd, q odd.
bool parity_hypothesis(const SignatureSplit& s, int n);

// The quadratic cone form V(x) = sum_{i<p} x_i^2 - sum_{i>=p} x_i^2 and the
// quartic bracket form (sum_p x_i^2)^2 - (sum_q x_i^2)^2.
double cone_form(std::span<const double> x, const SignatureSplit& s);
double bracket_form(std::span<const double> x, const SignatureSplit& s);

// Homogeneity order 2k - n - 2|v| shared by the radial and cone kernels.
Rational kernel_order(int k, const WeightVector& v);

// Prefactor of the radial kernel S_2k(x) = s_coefficient * |x|^(2k-N),
// N = n + 2|v|:  C_v 2^(N-4k) Gamma((N-2k)/2). Degenerate when (N-2k)/2
// is a Gamma pole.
ExactConstant s_coefficient(int k, const WeightVector& v);

// Cone-kernel normalizer
//   K_n(2k) = pi^((N-1)/2) G((2+2k-N)/2) G((1-2k)/2) G(2k)
//             / [G((2+2k-p-2|v|)/2) G((p-2k)/2)].
// Identical numerator/denominator Gamma arguments cancel exactly (q = 0
// makes the first pair coincide); a surviving pole marks the constant
// degenerate.
ExactConstant const_Kn(int k, const WeightVector& v, const SignatureSplit& s);

// Composition constant C(v, m, k, n) = C_v 2^(N-4(m+k)) G((N-2(m+k))/2):
// the prefactor of the (k+m)-fold radial kernel.
ExactConstant const_C(int m, int k, const WeightVector& v);

// Pointwise kernel evaluations on the open positive orthant. eval_R
// requires the point to lie strictly inside the cone V > 0 (relative guard
// |V| >= 1e-12 |x|^2); evaluating against a degenerate normalizer throws
// DegenerateConstantError.
double eval_S(int k, std::span<const double> x, const WeightVector& v);
double eval_E(std::span<const double> x, const WeightVector& v);  // = -S_2
double eval_R(int k, std::span<const double> x, const WeightVector& v,
              const SignatureSplit& s);
// Unnormalized cone power V^((2k-N)/2): the homogeneity studies use this
// when K_n(2k) is degenerate (homogeneity is normalizer-independent).
double eval_R_unnormalized(int k, std::span<const double> x,
                           const WeightVector& v, const SignatureSplit& s);

// Analytic gradients (for the Euler-identity audits).
std::vector<double> grad_S(int k, std::span<const double> x,
                           const WeightVector& v);
std::vector<double> grad_R_unnormalized(int k, std::span<const double> x,
                                        const WeightVector& v,
                                        const SignatureSplit& s);

// ---- Fourier-side objects -------------------------------------------------

// coeff * |x|^exponent
struct RadialImage {
    ExactConstant coeff;
    Rational exponent;
};

// Transform of S_2k under the library's conventions:
// C_v 2^(N/2-2k) Gamma(k) |x|^(-2k). The Gamma((N-2k)/2) of the kernel
// prefactor cancels against the power-law rule, so the image is finite
// even where the kernel prefactor is degenerate.
RadialImage s_image(int k, const WeightVector& v);

// The same transform as classically claimed: -|x|^(-2k).
RadialImage s_image_claimed(int k);

// coeff * [ (sum_p x^2)^2 - (sum_q x^2)^2 ]^power
struct BracketImage {
    ExactConstant coeff;
    int power;
};

// Transform of the k-fold diamond of delta: C_v [bracket]^k.
BracketImage diamond_delta_image(int k, const WeightVector& v);
// Transform of the diamond elementary solution: C_v [bracket]^(-k).
BracketImage diamond_kernel_image(int k, const WeightVector& v);
// Fourier action of applying the diamond operator r more times.
BracketImage multiply_by_bracket(const BracketImage& img, int r);

bool images_equal(const BracketImage& a, const BracketImage& b);

// Pointwise values of the diamond images. k = 0 in fb_diamond_delta is the
// transform of delta itself (the constant C_v). The kernel image is
// singular on the bracket's zero set; points within the relative guard are
// rejected.
double fb_diamond_delta(int k, std::span<const double> x,
                        const WeightVector& v, const SignatureSplit& s);
double fb_diamond_kernel(int k, std::span<const double> x,
                         const WeightVector& v, const SignatureSplit& s);

// ---- Right-hand-side combinator -------------------------------------------

enum class TermKind {
    DiamondConv,   // (-1)^order S_(2 order) * R_(2 order)
    DiracIterate,  // diamond^order applied to delta
};

struct SolutionTerm {
    TermKind kind;
    int order;
    int sign;            // (-1)^order for DiamondConv, +1 for DiracIterate
    double coefficient;  // the rhs coefficient carried by the term
    bool tempered;       // DiamondConv: 2*order < N; DiracIterate: always
};

bool operator==(const SolutionTerm& a, const SolutionTerm& b);

// Structural solution of diamond^k u = sum_r c_r diamond^r delta, following
// the classical case split on m = degree of the rhs (trailing zero
// coefficients are dropped):
//   m = 0:       c_0 * DiamondConv(k)
//   0 < m < k:   sum_{r=1..m} c_r * DiamondConv(k - r)
//   m >= k:      sum_{r=k..m} c_r * DiracIterate(r - k)
// The middle and last cases keep only the terms of the classical printed
// solution; the rhs coefficients c_r multiply every term they generate.
std::vector<SolutionTerm> solve_diamond_rhs(int k,
                                            std::span<const double> rhs,
                                            const WeightVector& v,
                                            const SignatureSplit& s);

}  // namespace bharm

#endif
