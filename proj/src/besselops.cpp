#include "bharm/besselops.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bharm/errors.hpp"

namespace bharm {

namespace {

void sort_merge(AxisOp& op) {
    std::sort(op.begin(), op.end(), [](const AxisTerm& a, const AxisTerm& b) {
        return a.deriv != b.deriv ? a.deriv < b.deriv : a.inv_pow < b.inv_pow;
    });
    AxisOp merged;
    for (const AxisTerm& t : op) {
        if (!merged.empty() && merged.back().deriv == t.deriv &&
            merged.back().inv_pow == t.inv_pow) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const AxisTerm& t) { return t.coeff.sign() == 0; });
    op = std::move(merged);
}

// B applied to coeff * t^(-p) * d^d:
//   (p(p+1) - 2vp) t^(-p-2) d^d + (2v - 2p) t^(-p-1) d^(d+1) + t^(-p) d^(d+2).
AxisOp compose_bessel(const AxisOp& op, const Rational& v) {
    AxisOp out;
    for (const AxisTerm& t : op) {
        const Rational p(t.inv_pow);
        const Rational c0 = t.coeff * (p * (p + Rational(1)) - Rational(2) * v * p);
        const Rational c1 = t.coeff * (Rational(2) * v - Rational(2) * p);
        if (c0.sign() != 0) out.push_back({c0, t.inv_pow + 2, t.deriv});
        if (c1.sign() != 0) out.push_back({c1, t.inv_pow + 1, t.deriv + 1});
        out.push_back({t.coeff, t.inv_pow, t.deriv + 2});
    }
    sort_merge(out);
    return out;
}

void sort_merge_poly(BesselPolynomial& p) {
    std::sort(p.begin(), p.end(),
              [](const BesselMonomial& a, const BesselMonomial& b) {
                  return a.powers < b.powers;
              });
    BesselPolynomial merged;
    for (const BesselMonomial& m : p) {
        if (!merged.empty() && merged.back().powers == m.powers) {
            merged.back().coeff += m.coeff;
        } else {
            merged.push_back(m);
        }
    }
    std::erase_if(merged,
                  [](const BesselMonomial& m) { return m.coeff.sign() == 0; });
    p = std::move(merged);
}

void check_positive(std::span<const double> x) {
    for (double xi : x) {
        if (!(xi > 0.0))
            throw DomainError("operator application requires a strictly positive point");
    }
}

int total_order(std::span<const int> order) {
    int total = 0;
    for (int d : order) {
        if (d < 0) throw DomainError("negative derivative order");
        total += d;
    }
    return total;
}

constexpr double kFdBase = 1e-3;

// Central difference along one axis at fixed step, recursing over axes.
double fd_recursive(const ScalarField& f, std::vector<int>& order,
                    std::vector<double>& x, double h) {
    int axis = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] > 0) { axis = static_cast<int>(i); break; }
    }
    if (axis < 0) return f(x);
    order[axis] -= 1;
    const double x0 = x[axis];
    x[axis] = x0 + h;
    const double up = fd_recursive(f, order, x, h);
    x[axis] = x0 - h;
    const double dn = fd_recursive(f, order, x, h);
    x[axis] = x0;
    order[axis] += 1;
    return (up - dn) / (2.0 * h);
}

double fd_at_step(const ScalarField& f, std::span<const int> order,
                  std::span<const double> x, double h) {
    std::vector<int> ord(order.begin(), order.end());
    std::vector<double> pt(x.begin(), x.end());
    return fd_recursive(f, ord, pt, h);
}

double partial_value(const ScalarField& f, std::span<const int> order,
                     std::span<const double> x, DerivativeMode mode,
                     double step_scale) {
    const bool analytic = f.has_analytic_partials();
    if (mode == DerivativeMode::Analytic && !analytic)
        throw CapabilityError("field carries no analytic partial derivatives");
    if (mode == DerivativeMode::FiniteDifference || !analytic)
        return fd_partial(f, order, x, step_scale);
    return f.partial(order, x);
}

}  // namespace

AxisOp bessel_power_op(const Rational& v, int j) {
    if (j < 0) throw ConfigError("bessel_power_op requires j >= 0");
    AxisOp op{{Rational(1), 0, 0}};
    for (int i = 0; i < j; ++i) op = compose_bessel(op, v);
    return op;
}

double apply_axis_op(const AxisOp& op,
                     const std::function<double(int, double)>& profile,
                     double t) {
    if (!(t > 0.0)) throw DomainError("apply_axis_op requires t > 0");
    std::vector<double> terms;
    terms.reserve(op.size());
    for (const AxisTerm& term : op) {
        terms.push_back(term.coeff.value() * std::pow(t, -term.inv_pow) *
                        profile(term.deriv, t));
    }
    return pairwise_sum(terms);
}

BesselPolynomial laplace_symbol(int n) {
    if (n < 1) throw ConfigError("laplace_symbol requires n >= 1");
    BesselPolynomial p;
    for (int i = 0; i < n; ++i) {
        BesselMonomial m{std::vector<int>(static_cast<std::size_t>(n), 0),
                         Rational(1)};
        m.powers[static_cast<std::size_t>(i)] = 1;
        p.push_back(std::move(m));
    }
    return p;
}

BesselPolynomial box_symbol(const SignatureSplit& s, int n) {
    validate_split(s, n);
    BesselPolynomial p;
    for (int i = 0; i < n; ++i) {
        BesselMonomial m{std::vector<int>(static_cast<std::size_t>(n), 0),
                         Rational(i < s.p ? 1 : -1)};
        m.powers[static_cast<std::size_t>(i)] = 1;
        p.push_back(std::move(m));
    }
    return p;
}

BesselPolynomial multiply_symbols(const BesselPolynomial& a,
                                  const BesselPolynomial& b) {
    BesselPolynomial out;
    out.reserve(a.size() * b.size());
    for (const BesselMonomial& ma : a) {
        for (const BesselMonomial& mb : b) {
            if (ma.powers.size() != mb.powers.size())
                throw ConfigError("symbol dimension mismatch");
            BesselMonomial m{ma.powers, ma.coeff * mb.coeff};
            for (std::size_t i = 0; i < m.powers.size(); ++i)
                m.powers[i] += mb.powers[i];
            out.push_back(std::move(m));
        }
    }
    sort_merge_poly(out);
    return out;
}

BesselPolynomial power_symbol(const BesselPolynomial& a, int k) {
    if (k < 0) throw ConfigError("power_symbol requires k >= 0");
    if (a.empty()) throw ConfigError("power_symbol of an empty symbol");
    BesselPolynomial out{
        {std::vector<int>(a.front().powers.size(), 0), Rational(1)}};
    for (int i = 0; i < k; ++i) out = multiply_symbols(out, a);
    return out;
}

BesselPolynomial diamond_symbol(int k, const SignatureSplit& s, int n) {
    if (k < 1) throw ConfigError("diamond_symbol requires k >= 1");
    const BesselPolynomial box_k = power_symbol(box_symbol(s, n), k);
    const BesselPolynomial lap_k = power_symbol(laplace_symbol(n), k);
    return multiply_symbols(box_k, lap_k);
}

BesselPolynomial diamond_symbol_bracketed(int k, const SignatureSplit& s,
                                          int n) {
    if (k < 1) throw ConfigError("diamond_symbol requires k >= 1");
    validate_split(s, n);
    // (sum_p B)^2 - (sum_q B)^2, then the k-th power.
    BesselPolynomial plus, minus;
    for (int i = 0; i < n; ++i) {
        BesselMonomial m{std::vector<int>(static_cast<std::size_t>(n), 0),
                         Rational(1)};
        m.powers[static_cast<std::size_t>(i)] = 1;
        if (i < s.p) plus.push_back(std::move(m));
        else minus.push_back(std::move(m));
    }
    BesselPolynomial bracket = multiply_symbols(plus, plus);
    if (!minus.empty()) {
        BesselPolynomial q2 = multiply_symbols(minus, minus);
        for (BesselMonomial& m : q2) m.coeff = -m.coeff;
        bracket.insert(bracket.end(), q2.begin(), q2.end());
        sort_merge_poly(bracket);
    }
    return power_symbol(bracket, k);
}

bool symbols_equal(const BesselPolynomial& a, const BesselPolynomial& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].powers != b[i].powers || a[i].coeff != b[i].coeff)
            return false;
    }
    return true;
}

int symbol_derivative_order(const BesselPolynomial& p) {
    int max_deg = 0;
    for (const BesselMonomial& m : p) {
        int deg = 0;
        for (int a : m.powers) deg += a;
        max_deg = std::max(max_deg, deg);
    }
    return 2 * max_deg;
}

double fd_partial(const ScalarField& f, std::span<const int> order,
                  std::span<const double> x, double step_scale) {
    if (static_cast<int>(order.size()) != f.dim() || x.size() != order.size())
        throw DomainError("fd_partial dimension mismatch");
    check_positive(x);
    if (!(step_scale > 0.0)) throw ConfigError("fd_partial step scale must be positive");
    const int total = total_order(order);
    if (total > 4)
        throw CapabilityError(
            "finite differences support total derivative order <= 4; "
            "use a field with analytic partials");
    if (total == 0) return f(x);
    if (f.smoothness_order() < total)
        throw CapabilityError("field is not smooth enough for the requested order");

    double xmin = x[0];
    for (double xi : x) xmin = std::min(xmin, xi);
    const double h = kFdBase * step_scale * xmin;
    // The widest excursion along axis i is 2 order_i h (Richardson doubles
    // the step once); it must stay strictly inside the orthant.
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (order[i] > 0 && 2.0 * order[i] * h >= x[i])
            throw DomainError("finite-difference stencil leaves the positive orthant");
    }
    const double coarse = fd_at_step(f, order, x, 2.0 * h);
    const double fine = fd_at_step(f, order, x, h);
    // One Richardson step for the O(h^2) central differences.
    return (4.0 * fine - coarse) / 3.0;
}

double apply_symbol(const BesselPolynomial& p, const ScalarField& f,
                    std::span<const double> x, const WeightVector& v,
                    DerivativeMode mode, double step_scale) {
    if (p.empty()) return 0.0;
    const int n = v.dim();
    if (f.dim() != n || static_cast<int>(x.size()) != n ||
        static_cast<int>(p.front().powers.size()) != n)
        throw DomainError("apply_symbol dimension mismatch");
    check_positive(x);

    // Expand each per-axis Bessel power once.
    std::map<std::pair<int, int>, AxisOp> axis_ops;  // (axis, power) -> op
    for (const BesselMonomial& m : p) {
        for (int i = 0; i < n; ++i) {
            auto key = std::make_pair(i, m.powers[static_cast<std::size_t>(i)]);
            if (!axis_ops.count(key))
                axis_ops[key] = bessel_power_op(v.exact(i), key.second);
        }
    }

    std::vector<double> contributions;
    std::vector<int> order(static_cast<std::size_t>(n), 0);
    for (const BesselMonomial& m : p) {
        // Cartesian product of the per-axis expansions.
        std::vector<const AxisOp*> ops(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            ops[static_cast<std::size_t>(i)] =
                &axis_ops[{i, m.powers[static_cast<std::size_t>(i)]}];
        std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
        while (true) {
            Rational coeff = m.coeff;
            double xpow = 1.0;
            for (int i = 0; i < n; ++i) {
                const AxisTerm& t = (*ops[static_cast<std::size_t>(i)])
                    [idx[static_cast<std::size_t>(i)]];
                coeff *= t.coeff;
                xpow *= std::pow(x[static_cast<std::size_t>(i)], -t.inv_pow);
                order[static_cast<std::size_t>(i)] = t.deriv;
            }
            contributions.push_back(coeff.value() * xpow *
                                    partial_value(f, order, x, mode, step_scale));
            int axis = n - 1;
            while (axis >= 0) {
                auto ai = static_cast<std::size_t>(axis);
                if (++idx[ai] < ops[ai]->size()) break;
                idx[ai] = 0;
                --axis;
            }
            if (axis < 0) break;
        }
    }
    return pairwise_sum(contributions);
}

namespace {

// One degree-two pass wrapped as a field, for nested finite differencing.
ScalarField nest_pass(const BesselPolynomial& sym, const ScalarField& inner,
                      const WeightVector& v, double step_scale) {
    auto eval = [sym, inner, v, step_scale](std::span<const double> y) {
        return apply_symbol(sym, inner, y, v,
                            DerivativeMode::FiniteDifference, step_scale);
    };
    return ScalarField(inner.dim(), std::move(eval), inner.decay_class(),
                       inner.smoothness_order() - 2);
}

BesselPolynomial base_symbol(const OperatorSpec& op, int n) {
    switch (op.kind) {
        case OperatorKind::BesselAxis: {
            if (op.axis < 0 || op.axis >= n)
                throw DomainError("operator axis out of range");
            BesselPolynomial p{{std::vector<int>(static_cast<std::size_t>(n), 0),
                                Rational(1)}};
            p.front().powers[static_cast<std::size_t>(op.axis)] = 1;
            return p;
        }
        case OperatorKind::LaplaceBessel:
            return laplace_symbol(n);
        case OperatorKind::BoxBessel:
            return box_symbol(op.split, n);
        case OperatorKind::DiamondBessel:
            return diamond_symbol(1, op.split, n);
    }
    throw ConfigError("unknown operator kind");
}

}  // namespace

double apply_operator(const OperatorSpec& op, const ScalarField& f,
                      std::span<const double> x, const WeightVector& v) {
    if (op.iterate < 1) throw ConfigError("operator iterate must be >= 1");
    const int n = v.dim();

    DerivativeMode mode = op.mode;
    if (mode == DerivativeMode::Auto)
        mode = f.has_analytic_partials() ? DerivativeMode::Analytic
                                         : DerivativeMode::FiniteDifference;

    if (mode == DerivativeMode::Analytic) {
        BesselPolynomial full;
        if (op.kind == OperatorKind::DiamondBessel) {
            full = op.bracketed_form
                       ? diamond_symbol_bracketed(op.iterate, op.split, n)
                       : diamond_symbol(op.iterate, op.split, n);
        } else {
            full = power_symbol(base_symbol(op, n), op.iterate);
        }
        if (f.smoothness_order() < symbol_derivative_order(full))
            throw CapabilityError("field is not smooth enough for the iterated operator");
        return apply_symbol(full, f, x, v, DerivativeMode::Analytic);
    }

    if (op.iterate > 2)
        throw CapabilityError(
            "finite-difference mode supports iterate <= 2; "
            "higher iterates need analytic partials");

    // Nested degree-two passes, innermost first; the bracketed form has no
    // separate finite-difference route (it nests into the same passes).
    std::vector<BesselPolynomial> passes;
    for (int i = 0; i < op.iterate; ++i) {
        if (op.kind == OperatorKind::DiamondBessel) {
            passes.push_back(laplace_symbol(n));
            passes.push_back(box_symbol(op.split, n));
        } else {
            passes.push_back(base_symbol(op, n));
        }
    }
    if (f.smoothness_order() < 2 * static_cast<int>(passes.size()))
        throw CapabilityError("field is not smooth enough for the iterated operator");

    ScalarField current = f;
    for (std::size_t level = 0; level + 1 < passes.size(); ++level) {
        current = nest_pass(passes[level], current, v,
                            std::pow(2.0, static_cast<double>(level)));
    }
    return apply_symbol(passes.back(), current, x, v,
                        DerivativeMode::FiniteDifference,
                        std::pow(2.0, static_cast<double>(passes.size() - 1)));
}

double apply_bessel_axis(const ScalarField& f, int axis,
                         std::span<const double> x, const WeightVector& v,
                         DerivativeMode mode) {
    OperatorSpec op;
    op.kind = OperatorKind::BesselAxis;
    op.axis = axis;
    op.mode = mode;
    return apply_operator(op, f, x, v);
}

double apply_laplace(const ScalarField& f, std::span<const double> x,
                     const WeightVector& v, DerivativeMode mode) {
    OperatorSpec op;
    op.kind = OperatorKind::LaplaceBessel;
    op.mode = mode;
    return apply_operator(op, f, x, v);
}

double apply_box(const ScalarField& f, std::span<const double> x,
                 const WeightVector& v, const SignatureSplit& s,
                 DerivativeMode mode) {
    OperatorSpec op;
    op.kind = OperatorKind::BoxBessel;
    op.split = s;
    op.mode = mode;
    return apply_operator(op, f, x, v);
}

double apply_diamond(int k, const ScalarField& f, std::span<const double> x,
                     const WeightVector& v, const SignatureSplit& s,
                     DerivativeMode mode) {
    OperatorSpec op;
    op.kind = OperatorKind::DiamondBessel;
    op.iterate = k;
    op.split = s;
    op.mode = mode;
    return apply_operator(op, f, x, v);
}

}  // namespace bharm
