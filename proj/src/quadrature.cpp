#include "bharm/quadrature.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <sstream>

#include "bharm/errors.hpp"
#include "bharm/specfun.hpp"

namespace bharm {

// ---------------------------------------------------------------------------
// WeightVector

WeightVector::WeightVector(std::vector<Rational> exact)
    : exact_(std::move(exact)) {
    if (exact_.empty()) throw ConfigError("weight vector must be non-empty");
    values_.reserve(exact_.size());
    for (const auto& r : exact_) {
        if (r.sign() <= 0)
            throw ConfigError("weight indices must be positive, got " +
                              r.str());
        values_.push_back(r.value());
    }
}

WeightVector WeightVector::uniform(int dim, const Rational& v) {
    if (dim < 1) throw DomainError("dimension must be >= 1");
    return WeightVector(std::vector<Rational>(dim, v));
}

WeightVector WeightVector::parse(std::string_view text) {
    std::vector<Rational> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(Rational::parse(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) parts.push_back(Rational::parse(cur));
    return WeightVector(std::move(parts));
}

Rational WeightVector::abs_exact() const {
    Rational s(0);
    for (const auto& r : exact_) s += r;
    return s;
}

double WeightVector::abs() const { return abs_exact().value(); }

// ---------------------------------------------------------------------------
// QuadSpec

void QuadSpec::validate() const {
    if (nodes_per_axis < 1)
        throw ConfigError("nodes_per_axis must be >= 1");
    if (!(truncation_radius > 0.0))
        throw ConfigError("truncation_radius must be positive");
    if (extrapolation_order < 1)
        throw ConfigError("extrapolation_order must be >= 1");
    double prev = 0.0;
    for (std::size_t i = 0; i < regularization_schedule.size(); ++i) {
        double e = regularization_schedule[i];
        if (!(e > 0.0))
            throw ConfigError("regularization strengths must be positive");
        if (i > 0 && e >= prev)
            throw ConfigError(
                "regularization schedule must be strictly decreasing");
        prev = e;
    }
}

// ---------------------------------------------------------------------------
// Rules

namespace {

GaussRule make_legendre(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        long double x = std::cos(M_PI * (i + 0.75L) / (n + 0.5L));
        long double p = 0.0L, dp = 1.0L;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1.0L, p1 = x;
            for (int k = 2; k <= n; ++k) {
                long double p2 =
                    ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            p = p1;
            dp = n * (x * p1 - p0) / (x * x - 1.0L);
            long double dx = p / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-19L) break;
        }
        r.nodes[i] = static_cast<double>(x);
        r.weights[i] = static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp));
    }
    // Newton seeds run from the largest root down; flip to ascending order.
    std::reverse(r.nodes.begin(), r.nodes.end());
    std::reverse(r.weights.begin(), r.weights.end());
    return r;
}

GaussRule make_jacobi(int n, double alpha, double beta) {
    Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 0);
    double ab = alpha + beta;
    diag[0] = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < n; ++k)
        diag[k] = (beta * beta - alpha * alpha) /
                  ((2.0 * k + ab) * (2.0 * k + ab + 2.0));
    if (n > 1)
        sub[0] = std::sqrt(4.0 * (alpha + 1.0) * (beta + 1.0) /
                           ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
    for (int k = 2; k < n; ++k) {
        double t = 2.0 * k + ab;
        sub[k - 1] = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                               (t * t * (t + 1.0) * (t - 1.0)));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub,
                                  Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw NonConvergenceError("Jacobi eigenproblem failed", {});
    double mu0 = std::pow(2.0, ab + 1.0) *
                 std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                          std::lgamma(ab + 2.0));
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = solver.eigenvalues()[i];
        double q0 = solver.eigenvectors()(0, i);
        r.weights[i] = mu0 * q0 * q0;
    }
    return r;
}

std::mutex g_rule_mutex;

struct JacobiKey {
    int n;
    std::uint64_t a_bits, b_bits;
    bool operator<(const JacobiKey& o) const {
        if (n != o.n) return n < o.n;
        if (a_bits != o.a_bits) return a_bits < o.a_bits;
        return b_bits < o.b_bits;
    }
};

std::uint64_t double_bits(double x) {
    std::uint64_t b;
    std::memcpy(&b, &x, sizeof b);
    return b;
}

}  // namespace

GaussRule gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre requires n >= 1");
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_legendre(n)).first;
    return it->second;
}

GaussRule gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1) throw DomainError("gauss_jacobi requires n >= 1");
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw DomainError("gauss_jacobi requires alpha, beta > -1");
    static std::map<JacobiKey, GaussRule> cache;
    JacobiKey key{n, double_bits(alpha), double_bits(beta)};
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, make_jacobi(n, alpha, beta)).first;
    return it->second;
}

double pairwise_sum(std::span<const double> terms) {
    if (terms.size() <= 8) {
        double s = 0.0;
        for (double t : terms) s += t;
        return s;
    }
    std::size_t half = terms.size() / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

// ---------------------------------------------------------------------------
// Angular integration

double integrate_angular(const AngularFunction& f, const WeightVector& v,
                         const QuadSpec& spec) {
    spec.validate();
    int n = v.dim();
    if (n > 3)
        throw CapabilityError("angular integration supports n <= 3, got n = " +
                              std::to_string(n));
    // Per-axis rule in u = cos(theta): weight (1-u^2)^(v-1).
    std::vector<GaussRule> rules;
    rules.reserve(n);
    for (int i = 0; i < n; ++i)
        rules.push_back(
            gauss_jacobi(spec.nodes_per_axis, v[i] - 1.0, v[i] - 1.0));

    std::vector<double> theta(n);
    std::function<double(int)> walk = [&](int axis) -> double {
        const GaussRule& rule = rules[axis];
        std::vector<double> contrib(rule.nodes.size());
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            theta[axis] = std::acos(rule.nodes[i]);
            double inner = (axis + 1 < n) ? walk(axis + 1) : f(theta);
            contrib[i] = rule.weights[i] * inner;
        }
        return pairwise_sum(contrib);
    };
    return walk(0);
}

// ---------------------------------------------------------------------------
// Orthant integration

namespace {

struct AxisGrid {
    std::vector<double> y;  // evaluation points
    std::vector<double> w;  // weights including y^(2v) and grading Jacobian
};

// Ungraded axes use a Gauss-Jacobi rule with the y^(2v) factor built into
// the weights, so fractional v costs no accuracy. Graded axes substitute
// y = u^2 (softening an origin singularity of the integrand itself) and
// keep the full weight in the quadrature weights.
AxisGrid make_axis_grid(int nodes, double radius, double vexp, bool grade) {
    AxisGrid g;
    if (grade) {
        const GaussRule& base = gauss_legendre(nodes);
        std::size_t n = base.nodes.size();
        g.y.resize(n);
        g.w.resize(n);
        double upper = std::sqrt(radius);
        for (std::size_t i = 0; i < n; ++i) {
            double u = upper * (base.nodes[i] + 1.0) / 2.0;
            double wu = base.weights[i] * upper / 2.0;
            g.y[i] = u * u;
            g.w[i] = wu * 2.0 * u * std::pow(u * u, 2.0 * vexp);
        }
        return g;
    }
    const GaussRule rule = gauss_jacobi(nodes, 0.0, 2.0 * vexp);
    std::size_t n = rule.nodes.size();
    g.y.resize(n);
    g.w.resize(n);
    double scale = std::pow(radius / 2.0, 2.0 * vexp + 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        g.y[i] = radius * (rule.nodes[i] + 1.0) / 2.0;
        g.w[i] = scale * rule.weights[i];
    }
    return g;
}

double tensor_pass(const OrthantFunction& f, const std::vector<AxisGrid>& grid,
                   double eps, std::vector<double>& point, int axis) {
    const AxisGrid& g = grid[axis];
    int n = static_cast<int>(grid.size());
    std::vector<double> contrib(g.y.size());
    for (std::size_t i = 0; i < g.y.size(); ++i) {
        point[axis] = g.y[i];
        double inner;
        if (axis + 1 < n) {
            inner = tensor_pass(f, grid, eps, point, axis + 1);
        } else {
            inner = f(point);
            if (!std::isfinite(inner)) {
                std::ostringstream os;
                os << "integrand non-finite at node (";
                for (int d = 0; d < n; ++d)
                    os << (d ? ", " : "") << point[d];
                os << ")";
                throw DomainError(os.str());
            }
        }
        double damp = eps > 0.0 ? std::exp(-eps * g.y[i]) : 1.0;
        contrib[i] = g.w[i] * damp * inner;
    }
    return pairwise_sum(contrib);
}

// Polynomial extrapolation of (eps_i, I_i) to eps = 0 (Neville), with the
// column count capped by the configured order. Returns the diagonal.
std::vector<double> neville_diagonal(const std::vector<double>& eps,
                                     const std::vector<double>& val,
                                     int max_order) {
    std::size_t m = eps.size();
    std::vector<std::vector<double>> t(m);
    std::vector<double> diag(m);
    for (std::size_t i = 0; i < m; ++i) {
        t[i].resize(i + 1);
        t[i][0] = val[i];
        std::size_t jmax = std::min<std::size_t>(i, max_order);
        for (std::size_t j = 1; j <= jmax; ++j) {
            double e_hi = eps[i], e_lo = eps[i - j];
            t[i][j] = (e_hi * t[i - 1][j - 1] - e_lo * t[i][j - 1]) /
                      (e_hi - e_lo);
        }
        diag[i] = t[i][jmax];
    }
    return diag;
}

}  // namespace

IntegralResult integrate_orthant(const OrthantFunction& f,
                                 const WeightVector& v, const QuadSpec& spec,
                                 bool grade_origin) {
    spec.validate();
    int n = v.dim();
    if (n > 3)
        throw CapabilityError("orthant integration supports n <= 3, got n = " +
                              std::to_string(n));
    std::vector<AxisGrid> grid;
    grid.reserve(n);
    for (int i = 0; i < n; ++i)
        grid.push_back(make_axis_grid(spec.nodes_per_axis,
                                      spec.truncation_radius, v[i],
                                      grade_origin));
    std::vector<double> point(n);

    if (spec.regularization_schedule.empty())
        return {tensor_pass(f, grid, 0.0, point, 0), 0.0};

    std::vector<double> vals;
    vals.reserve(spec.regularization_schedule.size());
    for (double eps : spec.regularization_schedule)
        vals.push_back(tensor_pass(f, grid, eps, point, 0));

    std::vector<double> diag = neville_diagonal(
        spec.regularization_schedule, vals, spec.extrapolation_order);
    std::size_t m = diag.size();
    if (m >= 3) {
        double last = std::fabs(diag[m - 1] - diag[m - 2]);
        double prev = std::fabs(diag[m - 2] - diag[m - 3]);
        double scale = std::fmax(1.0, std::fabs(diag[m - 1]));
        if (last > 2.0 * prev && last > 1e-9 * scale)
            throw NonConvergenceError(
                "damping extrapolation diverged (tableau diagonal attached)",
                diag);
    }
    double err = m >= 2 ? std::fabs(diag[m - 1] - diag[m - 2]) : 0.0;
    return {diag[m - 1], err};
}

IntegralResult integrate_orthant(const ScalarField& f, const WeightVector& v,
                                 const QuadSpec& spec) {
    if (f.dim() != v.dim())
        throw DomainError("field/weight dimension mismatch");
    if (f.decay_class() == DecayClass::PolynomialGrowth &&
        spec.regularization_schedule.empty())
        throw ConfigError(
            "polynomially growing integrand requires a damping schedule");
    bool grade = f.decay_class() == DecayClass::SingularAtOrigin;
    auto fn = [&f](std::span<const double> x) { return f(x); };
    return integrate_orthant(fn, v, spec, grade);
}

IntegralResult integrate_orthant_polar(const OrthantFunction& f,
                                       const WeightVector& v,
                                       const QuadSpec& spec) {
    spec.validate();
    int n = v.dim();
    if (n != 2 && n != 3)
        throw CapabilityError("polar orthant integration supports n in {2,3}");

    // Half-angle rule: int_0^(pi/2) g cos^a sin^b dtheta
    //   = 2^(-(a+b)/2 - 1) sum w_j g(theta_j), Jacobi((a-1)/2, (b-1)/2).
    auto half_angle = [&spec](double a, double b) {
        GaussRule jr = gauss_jacobi(spec.nodes_per_axis, (a - 1.0) / 2.0,
                                    (b - 1.0) / 2.0);
        GaussRule out;
        out.nodes.resize(jr.nodes.size());
        out.weights.resize(jr.nodes.size());
        double scale = std::pow(2.0, -(a + b) / 2.0 - 1.0);
        for (std::size_t i = 0; i < jr.nodes.size(); ++i) {
            double t = (1.0 + jr.nodes[i]) / 2.0;  // sin^2(theta)
            out.nodes[i] = std::asin(std::sqrt(t));
            out.weights[i] = scale * jr.weights[i];
        }
        return out;
    };

    GaussRule radial = gauss_legendre(spec.nodes_per_axis);
    double R = spec.truncation_radius;
    double nexp = static_cast<double>(n) + 2.0 * v.abs();

    std::vector<double> x(n);
    std::vector<double> outer;
    if (n == 2) {
        GaussRule ang = half_angle(2.0 * v[0], 2.0 * v[1]);
        outer.resize(radial.nodes.size());
        for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
            double r = R * (radial.nodes[i] + 1.0) / 2.0;
            double wr = radial.weights[i] * R / 2.0 * std::pow(r, nexp - 1.0);
            std::vector<double> contrib(ang.nodes.size());
            for (std::size_t j = 0; j < ang.nodes.size(); ++j) {
                double th = ang.nodes[j];
                x[0] = r * std::cos(th);
                x[1] = r * std::sin(th);
                contrib[j] = ang.weights[j] * f(x);
            }
            outer[i] = wr * pairwise_sum(contrib);
        }
    } else {
        GaussRule ang1 = half_angle(2.0 * v[0], 2.0 * (v[1] + v[2]) + 1.0);
        GaussRule ang2 = half_angle(2.0 * v[1], 2.0 * v[2]);
        outer.resize(radial.nodes.size());
        for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
            double r = R * (radial.nodes[i] + 1.0) / 2.0;
            double wr = radial.weights[i] * R / 2.0 * std::pow(r, nexp - 1.0);
            std::vector<double> c1(ang1.nodes.size());
            for (std::size_t j = 0; j < ang1.nodes.size(); ++j) {
                double t1 = ang1.nodes[j];
                std::vector<double> c2(ang2.nodes.size());
                for (std::size_t l = 0; l < ang2.nodes.size(); ++l) {
                    double t2 = ang2.nodes[l];
                    x[0] = r * std::cos(t1);
                    x[1] = r * std::sin(t1) * std::cos(t2);
                    x[2] = r * std::sin(t1) * std::sin(t2);
                    c2[l] = ang2.weights[l] * f(x);
                }
                c1[j] = ang1.weights[j] * pairwise_sum(c2);
            }
            outer[i] = wr * pairwise_sum(c1);
        }
    }
    return {pairwise_sum(outer), 0.0};
}

}  // namespace bharm
