#ifndef BHARM_SPECFUN_HPP
#define BHARM_SPECFUN_HPP

namespace bharm {

// Gamma function. Throws DomainError at the poles 0, -1, -2, ...
double gamma_fn(double x);

// log Gamma(x) for x > 0.
double log_gamma(double x);

// log |Gamma(x)| together with the sign of Gamma(x), for any non-pole x.
struct SignedLogGamma {
    double log_abs;
    int sign;
};
SignedLogGamma signed_log_gamma(double x);

// Bessel function of the first kind J_order(t), order >= 0, t >= 0.
//
// Three regimes: an extended-precision power series for small t, the
// integral representation
//     J_nu(t) = (1/pi) int_0^pi cos(nu h - t sin h) dh
//               - sin(nu pi)/pi int_0^inf exp(-t sinh s - nu s) ds
// in the midrange, and the Hankel asymptotic expansion for large t.
double bessel_j(double order, double t);

// Normalized kernel function j_{v-1/2}(t) scaled to j(0) = 1:
//     normalized_j(v, t) = 2^(v-1/2) Gamma(v+1/2) t^(1/2-v) J_{v-1/2}(t).
// Satisfies j'' + (2v/t) j' = -j. Supported for v >= 1/2 (orders below
// -1/2 would not be a positive-definite kernel); v < 1/2 is a domain error.
double normalized_j(double v, double t);

// m-th t-derivative of normalized_j(v, .) at t, via the exact recurrence
// d/dt j_[v](t) = -t/(2v+1) j_[v+1](t). Supported for 0 <= m <= 8.
double normalized_j_derivative(double v, double t, int m);

}  // namespace bharm

#endif
