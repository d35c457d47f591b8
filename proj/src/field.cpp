#include "bharm/field.hpp"

#include <cmath>
#include <memory>

#include "bharm/errors.hpp"
#include "bharm/specfun.hpp"

namespace bharm {

namespace {

// Coefficients c[a][j] in (d/dy)^a g(y^2) = sum_j c[a][j] y^(2j-a) g^(j),
// by the recurrence c[a+1][j] = 2 c[a][j-1] + (2j - a) c[a][j].
std::vector<std::vector<double>> chain_coefficients(int max_order) {
    std::vector<std::vector<double>> c(max_order + 1);
    c[0] = {1.0};
    for (int a = 0; a < max_order; ++a) {
        c[a + 1].assign(a + 2, 0.0);
        for (int j = 0; j <= a; ++j) {
            if (c[a][j] == 0.0) continue;
            c[a + 1][j + 1] += 2.0 * c[a][j];
            c[a + 1][j] += (2.0 * j - a) * c[a][j];
        }
    }
    return c;
}

}  // namespace

double ScalarField::partial(std::span<const int> order,
                            std::span<const double> x) const {
    if (!partial_)
        throw CapabilityError("field has no analytic partial derivatives");
    if (static_cast<int>(order.size()) != dim_)
        throw DomainError("partial multi-index dimension mismatch");
    return partial_(order, x);
}

ScalarField ScalarField::radial_profile(
    int dim, std::function<double(int, double)> profile,
    std::span<const double> center, DecayClass decay, int smoothness_order) {
    if (!center.empty() && static_cast<int>(center.size()) != dim)
        throw DomainError("center dimension mismatch");
    std::vector<double> c(center.begin(), center.end());
    if (c.empty()) c.assign(dim, 0.0);

    auto eval = [profile, c](std::span<const double> x) {
        double u = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double d = x[i] - c[i];
            u += d * d;
        }
        return profile(0, u);
    };

    // Mixed partial: per-axis chain expansion of p(sum (y_i - c_i)^2).
    auto part = [profile, c](std::span<const int> order,
                             std::span<const double> x) {
        int max_a = 0;
        for (int a : order) max_a = std::max(max_a, a);
        static thread_local std::vector<std::vector<double>> coeff_cache;
        if (static_cast<int>(coeff_cache.size()) <= max_a)
            coeff_cache = chain_coefficients(std::max(max_a, 8));
        double u = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double d = x[i] - c[i];
            u += d * d;
        }
        // Accumulate over the tensor product of per-axis chain terms.
        std::vector<double> result{1.0};  // result[J] multiplies p^(J)(u)
        for (std::size_t i = 0; i < x.size(); ++i) {
            int a = order[i];
            if (a == 0) continue;
            double d = x[i] - c[i];
            const std::vector<double>& row = coeff_cache[a];
            std::vector<double> next(result.size() + row.size(), 0.0);
            for (std::size_t J = 0; J < result.size(); ++J) {
                if (result[J] == 0.0) continue;
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (row[j] == 0.0) continue;
                    int pw = 2 * static_cast<int>(j) - a;
                    double ypow = pw == 0 ? 1.0 : std::pow(d, pw);
                    next[J + j] += result[J] * row[j] * ypow;
                }
            }
            result = std::move(next);
        }
        double sum = 0.0;
        for (std::size_t J = 0; J < result.size(); ++J)
            if (result[J] != 0.0) sum += result[J] * profile(static_cast<int>(J), u);
        return sum;
    };

    return ScalarField(dim, eval, decay, smoothness_order, part);
}

ScalarField ScalarField::gaussian(int dim, double width) {
    if (width <= 0.0) throw DomainError("gaussian width must be positive");
    double a = 1.0 / (2.0 * width * width);
    auto profile = [a](int j, double u) {
        double s = std::exp(-a * u);
        for (int i = 0; i < j; ++i) s *= -a;
        return s;
    };
    return radial_profile(dim, profile, {}, DecayClass::RapidlyDecaying, 64);
}

ScalarField ScalarField::bump(int dim, std::span<const double> center,
                              double width) {
    if (width <= 0.0) throw DomainError("bump width must be positive");
    double a = 1.0 / (2.0 * width * width);
    auto profile = [a](int j, double u) {
        double s = std::exp(-a * u);
        for (int i = 0; i < j; ++i) s *= -a;
        return s;
    };
    return radial_profile(dim, profile, center, DecayClass::RapidlyDecaying,
                          64);
}

ScalarField ScalarField::power_radial(int dim, double alpha) {
    auto eval = [alpha](std::span<const double> x) {
        double u = 0.0;
        for (double xi : x) u += xi * xi;
        return std::pow(u, -alpha / 2.0);
    };
    return ScalarField(dim, eval, DecayClass::SingularAtOrigin, 0);
}

ScalarField ScalarField::polynomial_gaussian(int dim) {
    // p(u) = (1 + u) e^(-u); p^(j)(u) = (-1)^j (1 + u - j) e^(-u).
    auto profile = [](int j, double u) {
        double v = (1.0 + u - j) * std::exp(-u);
        return (j % 2 == 0) ? v : -v;
    };
    return radial_profile(dim, profile, {}, DecayClass::RapidlyDecaying, 64);
}

ScalarField ScalarField::rational_decay(int dim, double s) {
    if (s <= 0.0) throw DomainError("rational_decay requires s > 0");
    auto profile = [s](int j, double u) {
        double v = std::pow(1.0 + u, -s - j);
        for (int i = 0; i < j; ++i) v *= -(s + i);
        return v;
    };
    return radial_profile(dim, profile, {}, DecayClass::PolynomialGrowth, 64);
}

ScalarField ScalarField::separable(
    int dim, std::function<double(int, int, double)> axis, DecayClass decay,
    int smoothness_order) {
    auto eval = [axis](std::span<const double> x) {
        double p = 1.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            p *= axis(static_cast<int>(i), 0, x[i]);
        return p;
    };
    auto part = [axis](std::span<const int> order,
                       std::span<const double> x) {
        double p = 1.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            p *= axis(static_cast<int>(i), order[i], x[i]);
        return p;
    };
    return ScalarField(dim, eval, decay, smoothness_order, part);
}

ScalarField ScalarField::bessel_plane_wave(std::span<const double> v,
                                           std::span<const double> y) {
    if (v.size() != y.size())
        throw DomainError("bessel_plane_wave dimension mismatch");
    std::vector<double> vv(v.begin(), v.end()), yy(y.begin(), y.end());
    auto axis = [vv, yy](int i, int m, double t) {
        double arg = yy[i] * t;
        if (m == 0) return normalized_j(vv[i], arg);
        // d^m/dt^m j(v, y t) = y^m j^(m)(v, y t)
        return std::pow(yy[i], m) * normalized_j_derivative(vv[i], arg, m);
    };
    int dim = static_cast<int>(v.size());
    return separable(dim, axis, DecayClass::PolynomialGrowth, 64);
}

}  // namespace bharm
