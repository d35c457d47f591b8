#include "bharm/shiftconv.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "bharm/errors.hpp"
#include "bharm/fbt.hpp"

namespace bharm {

namespace {
const Rational kHalf(1, 2);

void check_positive(std::span<const double> x, const char* what) {
    for (double xi : x)
        if (!(xi > 0.0))
            throw DomainError(std::string(what) +
                              " must be strictly positive");
}
}  // namespace

ExactConstant shift_normalizer(const WeightVector& v) {
    ExactConstant c;
    for (int i = 0; i < v.dim(); ++i) {
        c.mul_gamma(v.exact(i) + kHalf);
        c.div_gamma(kHalf);
        c.div_gamma(v.exact(i));
    }
    return c;
}

ExactConstant shift_normalizer_classical(const WeightVector& v) {
    ExactConstant c;
    for (int i = 0; i < v.dim(); ++i) {
        c.mul_gamma(v.exact(i) + Rational(1));
        c.div_gamma(kHalf);
        c.div_gamma(v.exact(i));
    }
    return c;
}

double shift(const ScalarField& f, std::span<const double> x,
             std::span<const double> y, const WeightVector& v,
             const QuadSpec& spec) {
    int n = v.dim();
    if (f.dim() != n || static_cast<int>(x.size()) != n ||
        static_cast<int>(y.size()) != n)
        throw DomainError("shift dimension mismatch");
    check_positive(x, "shift evaluation point");
    check_positive(y, "shift translation point");

    std::vector<double> z(n);
    auto avg = integrate_angular(
        [&](std::span<const double> theta) {
            for (int i = 0; i < n; ++i) {
                double c = std::cos(theta[i]);
                double r2 = x[i] * x[i] + y[i] * y[i] - 2.0 * x[i] * y[i] * c;
                z[i] = std::sqrt(std::fmax(r2, 0.0));
            }
            return f(z);
        },
        v, spec);
    return shift_normalizer(v).value() * avg;
}

double bconvolve(const ScalarField& f, const ScalarField& g,
                 std::span<const double> x, const WeightVector& v,
                 const QuadSpec& spec) {
    int n = v.dim();
    if (f.dim() != n || g.dim() != n || static_cast<int>(x.size()) != n)
        throw DomainError("bconvolve dimension mismatch");
    check_positive(x, "bconvolve evaluation point");

    double cv = transform_normalizer(v).value();
    std::vector<double> xv(x.begin(), x.end());
    auto integrand = [&f, &g, xv, &v, &spec](std::span<const double> y) {
        return f(y) * shift(g, xv, y, v, spec);
    };
    IntegralResult r = integrate_orthant(integrand, v, spec);
    return cv * r.value;
}

ScalarField bconvolve_field(const ScalarField& f, const ScalarField& g,
                            const WeightVector& v, const QuadSpec& spec) {
    if (f.dim() != v.dim() || g.dim() != v.dim())
        throw DomainError("bconvolve dimension mismatch");
    DecayClass decay = DecayClass::RapidlyDecaying;
    if (f.decay_class() == DecayClass::PolynomialGrowth ||
        g.decay_class() == DecayClass::PolynomialGrowth)
        decay = DecayClass::PolynomialGrowth;
    auto fp = std::make_shared<ScalarField>(f);
    auto gp = std::make_shared<ScalarField>(g);
    auto sp = std::make_shared<QuadSpec>(spec);
    auto vp = std::make_shared<WeightVector>(v);
    auto eval = [fp, gp, sp, vp](std::span<const double> x) {
        return bconvolve(*fp, *gp, x, *vp, *sp);
    };
    int smooth = std::min(f.smoothness_order(), g.smoothness_order());
    return ScalarField(v.dim(), eval, decay, smooth);
}

}  // namespace bharm
