#ifndef ZETACRIT_THETA_HPP
#define ZETACRIT_THETA_HPP

// Theta-type sums omega(t) = sum_{n>=1} exp(-pi n^2 t) and their T-variable
// forms (t = e^T), with certified truncation bounds.

#include <cmath>
#include <limits>
#include <numbers>

namespace zetacrit::theta {

// Truncation policy: cap on the number of retained terms and the absolute
// error the certified tail bound must reach.
struct TruncationPlan {
    int max_terms = 10'000;
    double target_abs_error = 1e-12;
};

struct Truncation {
    int terms;         // retained terms N
    double tail_bound; // certified bound on the dropped tail
};

struct RealEval {
    double value;
    double abs_error;
};

// Certified bound on sum_{k>n} exp(-pi k^2 t): with k = n+j one has
// k^2 >= n^2 + (2n+1)j, so the tail is majorized by the geometric series
// exp(-pi n^2 t) q/(1-q), q = exp(-pi(2n+1)t).
double tail_bound(double t, int n);

// Smallest N whose tail bound certifies plan.target_abs_error.
Truncation plan_truncation(double t, const TruncationPlan& plan);

// omega as a function of t > 0, absolute error <= tol.
RealEval omega_t(double t, double tol);

// omega as a function of T >= 0; equals omega_t(exp(T), tol) by delegation,
// with a single-term guard once pi*exp(T) approaches the exp underflow range.
// Values below the smallest positive normal are returned as exact 0 with the
// error field carrying a certified bound.
RealEval omega_T(double T, double tol);

// d omega / dT = -sum_n pi n^2 e^T exp(-pi n^2 e^T), term-by-term.
RealEval omega_T_derivative(double T, double tol);

namespace detail {

// Sums to the working precision of R; used by the operator machinery and the
// Mellin quadrature where a tolerance interface would just add noise.
template <class R>
R omega_sum(R t) {
    const R pi = std::numbers::pi_v<R>;
    R sum{};
    for (int n = 1; n <= 512; ++n) {
        const R term = std::exp(-pi * R(n) * R(n) * t);
        sum += term;
        if (term < sum * std::numeric_limits<R>::epsilon()) break;
    }
    return sum;
}

// d omega/dT expressed in t = e^T (the e^T factor is already substituted).
template <class R>
R omega_dT_sum(R t) {
    const R pi = std::numbers::pi_v<R>;
    R sum{};
    for (int n = 1; n <= 512; ++n) {
        const R a = pi * R(n) * R(n) * t;
        const R term = a * std::exp(-a);
        sum += term;
        if (term < sum * std::numeric_limits<R>::epsilon()) break;
    }
    return -sum;
}

} // namespace detail

} // namespace zetacrit::theta

#endif
