#include "bharm/kernels.hpp"

#include <cmath>
#include <cstddef>

#include "bharm/errors.hpp"
#include "bharm/fbt.hpp"

namespace bharm {

namespace {

// N = n + 2|v| as an exact rational.
Rational big_n(const WeightVector& v) {
    return Rational(v.dim()) + v.abs_exact() * Rational(2);
}

void check_point(std::span<const double> x, const WeightVector& v) {
    if (static_cast<int>(x.size()) != v.dim())
        throw DomainError("kernels: point/weight dimension mismatch");
    for (double xi : x) {
        if (!(xi > 0.0))
            throw DomainError("kernels: point must lie in the open positive orthant");
    }
}

double radius2(std::span<const double> x) {
    double r2 = 0.0;
    for (double xi : x) r2 += xi * xi;
    return r2;
}

constexpr double kConeGuard = 1e-12;

}  // namespace

void validate_split(const SignatureSplit& s, int n) {
    if (s.p < 1 || s.q < 0 || s.p + s.q != n)
        throw ConfigError("signature split requires p >= 1, q >= 0, p + q = n");
}

bool parity_hypothesis(const SignatureSplit& s, int n) {
    validate_split(s, n);
    const bool p_odd = s.p % 2 == 1;
    const bool q_odd = s.q % 2 == 1;
    if (n % 2 == 1) return p_odd && !q_odd;
    return p_odd && q_odd;
}

double cone_form(std::span<const double> x, const SignatureSplit& s) {
    validate_split(s, static_cast<int>(x.size()));
    double plus = 0.0, minus = 0.0;
    for (int i = 0; i < s.p; ++i) plus += x[i] * x[i];
    for (int i = s.p; i < s.p + s.q; ++i) minus += x[i] * x[i];
    return plus - minus;
}

double bracket_form(std::span<const double> x, const SignatureSplit& s) {
    validate_split(s, static_cast<int>(x.size()));
    double plus = 0.0, minus = 0.0;
    for (int i = 0; i < s.p; ++i) plus += x[i] * x[i];
    for (int i = s.p; i < s.p + s.q; ++i) minus += x[i] * x[i];
    return plus * plus - minus * minus;
}

Rational kernel_order(int k, const WeightVector& v) {
    if (k < 1) throw ConfigError("kernel order requires k >= 1");
    return Rational(2 * k) - big_n(v);
}

ExactConstant s_coefficient(int k, const WeightVector& v) {
    if (k < 1) throw ConfigError("s_coefficient requires k >= 1");
    const Rational n_big = big_n(v);
    ExactConstant c = transform_normalizer(v);
    c.mul_two_pow(n_big - Rational(4 * k));
    c.mul_gamma((n_big - Rational(2 * k)) / Rational(2));
    return c;
}

ExactConstant const_Kn(int k, const WeightVector& v, const SignatureSplit& s) {
    if (k < 1) throw ConfigError("const_Kn requires k >= 1");
    validate_split(s, v.dim());
    const Rational n_big = big_n(v);
    // p + 2 sum_{i<p} v_i
    Rational p_big(s.p);
    for (int i = 0; i < s.p; ++i) p_big += v.exact(i) * Rational(2);

    ExactConstant c;
    c.mul_pi_pow((n_big - Rational(1)) / Rational(2));
    c.mul_gamma((Rational(2 + 2 * k) - n_big) / Rational(2));
    c.mul_gamma(Rational(1 - 2 * k) / Rational(2));
    c.mul_gamma(Rational(2 * k));
    c.div_gamma((Rational(2 + 2 * k) - p_big) / Rational(2));
    c.div_gamma((p_big - Rational(2 * k)) / Rational(2));
    return c;
}

ExactConstant const_C(int m, int k, const WeightVector& v) {
    if (m < 0) throw ConfigError("const_C requires m >= 0");
    return s_coefficient(k + m, v);
}

double eval_S(int k, std::span<const double> x, const WeightVector& v) {
    check_point(x, v);
    const ExactConstant c = s_coefficient(k, v);
    const double order = kernel_order(k, v).value();
    return c.value() * std::pow(radius2(x), 0.5 * order);
}

double eval_E(std::span<const double> x, const WeightVector& v) {
    return -eval_S(1, x, v);
}

double eval_R_unnormalized(int k, std::span<const double> x,
                           const WeightVector& v, const SignatureSplit& s) {
    check_point(x, v);
    const double vform = cone_form(x, s);
    if (!(vform >= kConeGuard * radius2(x)))
        throw DomainError("eval_R: point is outside the open cone V > 0");
    const double order = kernel_order(k, v).value();
    return std::pow(vform, 0.5 * order);
}

double eval_R(int k, std::span<const double> x, const WeightVector& v,
              const SignatureSplit& s) {
    const ExactConstant kn = const_Kn(k, v, s);
    return eval_R_unnormalized(k, x, v, s) / kn.value();
}

std::vector<double> grad_S(int k, std::span<const double> x,
                           const WeightVector& v) {
    check_point(x, v);
    const double c = s_coefficient(k, v).value();
    const double order = kernel_order(k, v).value();
    const double scale = c * order * std::pow(radius2(x), 0.5 * order - 1.0);
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = scale * x[i];
    return g;
}

std::vector<double> grad_R_unnormalized(int k, std::span<const double> x,
                                        const WeightVector& v,
                                        const SignatureSplit& s) {
    check_point(x, v);
    const double vform = cone_form(x, s);
    if (!(vform >= kConeGuard * radius2(x)))
        throw DomainError("grad_R: point is outside the open cone V > 0");
    const double order = kernel_order(k, v).value();
    const double scale = 0.5 * order * std::pow(vform, 0.5 * order - 1.0);
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dv = (static_cast<int>(i) < s.p) ? 2.0 * x[i] : -2.0 * x[i];
        g[i] = scale * dv;
    }
    return g;
}

RadialImage s_image(int k, const WeightVector& v) {
    if (k < 1) throw ConfigError("s_image requires k >= 1");
    const Rational n_big = big_n(v);
    // Power-law rule applied to |x|^(2k-N), i.e. exponent alpha = N - 2k:
    // coefficient 2^(N/2-alpha) Gamma((N-alpha)/2) / Gamma(alpha/2). The
    // Gamma(alpha/2) denominator cancels the kernel prefactor's
    // Gamma((N-2k)/2) structurally, before any pole can surface, so the
    // image stays finite where the prefactor alone is degenerate.
    ExactConstant c = s_coefficient(k, v);
    c.mul_two_pow(Rational(2 * k) - n_big / Rational(2));
    c.mul_gamma(Rational(k));
    c.div_gamma((n_big - Rational(2 * k)) / Rational(2));
    return RadialImage{c, Rational(-2 * k)};
}

RadialImage s_image_claimed(int k) {
    if (k < 1) throw ConfigError("s_image_claimed requires k >= 1");
    return RadialImage{ExactConstant{}.negated(), Rational(-2 * k)};
}

BracketImage diamond_delta_image(int k, const WeightVector& v) {
    // k = 0 is the image of the point mass itself: the constant C_v.
    if (k < 0) throw ConfigError("diamond_delta_image requires k >= 0");
    return BracketImage{transform_normalizer(v), k};
}

BracketImage diamond_kernel_image(int k, const WeightVector& v) {
    if (k < 1) throw ConfigError("diamond_kernel_image requires k >= 1");
    return BracketImage{transform_normalizer(v), -k};
}

BracketImage multiply_by_bracket(const BracketImage& img, int r) {
    if (r < 0) throw ConfigError("multiply_by_bracket requires r >= 0");
    return BracketImage{img.coeff, img.power + r};
}

bool images_equal(const BracketImage& a, const BracketImage& b) {
    return a.power == b.power && a.coeff.equals(b.coeff);
}

double fb_diamond_delta(int k, std::span<const double> x,
                        const WeightVector& v, const SignatureSplit& s) {
    if (k < 0) throw ConfigError("fb_diamond_delta requires k >= 0");
    check_point(x, v);
    const double br = bracket_form(x, s);
    // k = 0 is the transform of delta itself: the constant C_v.
    return transform_normalizer(v).value() * std::pow(br, k);
}

double fb_diamond_kernel(int k, std::span<const double> x,
                         const WeightVector& v, const SignatureSplit& s) {
    if (k < 1) throw ConfigError("fb_diamond_kernel requires k >= 1");
    check_point(x, v);
    const double br = bracket_form(x, s);
    const double r2 = radius2(x);
    if (std::fabs(br) < kConeGuard * r2 * r2)
        throw DomainError("fb_diamond_kernel: point lies on the bracket zero set");
    return transform_normalizer(v).value() / std::pow(br, k);
}

bool operator==(const SolutionTerm& a, const SolutionTerm& b) {
    return a.kind == b.kind && a.order == b.order && a.sign == b.sign &&
           a.coefficient == b.coefficient && a.tempered == b.tempered;
}

std::vector<SolutionTerm> solve_diamond_rhs(int k,
                                            std::span<const double> rhs,
                                            const WeightVector& v,
                                            const SignatureSplit& s) {
    if (k < 1) throw ConfigError("solve_diamond_rhs requires k >= 1");
    validate_split(s, v.dim());
    if (rhs.empty()) throw ConfigError("solve_diamond_rhs: empty rhs coefficient list");

    int m = static_cast<int>(rhs.size()) - 1;
    while (m > 0 && rhs[static_cast<std::size_t>(m)] == 0.0) --m;

    const Rational n_big = big_n(v);
    auto tempered_conv = [&](int order) {
        // Ordinary (locally integrable) iff 2*order >= N.
        return Rational(2 * order) < n_big;
    };

    std::vector<SolutionTerm> terms;
    if (m == 0) {
        terms.push_back({TermKind::DiamondConv, k, (k % 2 == 0) ? 1 : -1,
                         rhs[0], tempered_conv(k)});
        return terms;
    }
    if (m < k) {
        for (int r = 1; r <= m; ++r) {
            const int order = k - r;
            terms.push_back({TermKind::DiamondConv, order,
                             (order % 2 == 0) ? 1 : -1,
                             rhs[static_cast<std::size_t>(r)],
                             tempered_conv(order)});
        }
        return terms;
    }
    for (int r = k; r <= m; ++r) {
        terms.push_back({TermKind::DiracIterate, r - k, 1,
                         rhs[static_cast<std::size_t>(r)], true});
    }
    return terms;
}

}  // namespace bharm
