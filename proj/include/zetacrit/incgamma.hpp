#ifndef ZETACRIT_INCGAMMA_HPP
#define ZETACRIT_INCGAMMA_HPP

// Upper incomplete gamma for complex first argument and real x >= 1 by the
// Legendre continued fraction (modified Lentz), templated over the working
// precision, plus the gamma-series representation of the Mellin transform
// F(s) = sum_n (pi n^2)^{-s/2} Gamma(s/2, pi n^2) built on top of it.

#include <complex>

#include "zetacrit/errors.hpp"
#include "zetacrit/float128.hpp"

namespace zetacrit::detail {

// Gamma(a, x) = e^{-x} x^a / (x+1-a - 1(1-a)/(x+3-a - 2(2-a)/(...)))
// Deep in the convergent regime for x >= pi; iteration counts grow roughly
// linearly with |Im a| (measured: ~60 at tol 1e-15, ~270 at tol 1e-33 for
// |Im a| <= 32).
template <class R>
std::complex<R> upper_gamma_cf(std::complex<R> a, R x, R rel_tol, int max_iter,
                               int* iterations = nullptr) {
    using C = std::complex<R>;
    const R tiny = qf::traits<R>::tiny();
    const C one(R(1), R(0));

    C b = C(x + R(1), R(0)) - a;
    C c = C(R(1) / tiny, R(0));
    C d = (qf::c_abs(b) < tiny) ? C(R(1) / tiny, R(0)) : one / b;
    C h = d;
    for (int i = 1; i <= max_iter; ++i) {
        const C an = -R(i) * (C(R(i), R(0)) - a);
        b += C(R(2), R(0));
        d = an * d + b;
        if (qf::c_abs(d) < tiny) d = C(tiny, R(0));
        c = b + an / c;
        if (qf::c_abs(c) < tiny) c = C(tiny, R(0));
        d = one / d;
        const C delta = d * c;
        h *= delta;
        if (qf::c_abs(delta - one) < rel_tol) {
            if (iterations) *iterations = i;
            return h * qf::c_exp(a * qf::r_log(x) - C(x, R(0)));
        }
    }
    throw ConvergenceError("upper_gamma_cf: continued fraction stalled");
}

template <class R>
struct GammaSeries {
    std::complex<R> value;
    R tail_bound;       // certified truncation bound
    R term_magnitude;   // sum of |terms|, feeds the rounding estimate
    int terms;
    int max_cf_iterations;
};

// Truncation certificate: |Gamma(a,x)| <= Gamma(Re a, x) and, for x large
// enough against alpha = Re a, Gamma(alpha,x) <= x^{alpha-1} e^{-x} B with
// B = x/(x-alpha+1) (B = 1 when alpha <= 1). Hence
//   |term_n| <= B e^{-pi n^2} / (pi n^2)
// and the tail from n+1 is bounded by the same geometric majorant that
// controls the theta sum at t = 1.
template <class R>
GammaSeries<R> mellin_gamma_series(std::complex<R> s, R tail_tol, R cf_rel_tol,
                                   int cf_max_iter) {
    const R pi = qf::traits<R>::pi();
    const std::complex<R> a = s / R(2);
    const R alpha = a.real();

    GammaSeries<R> out{};
    constexpr int n_cap = 64;
    R tail = R(1); // anything above tail_tol until certified

    bool certified = false;
    for (int n = 1; n <= n_cap; ++n) {
        const R x = pi * R(n) * R(n);
        int it = 0;
        const std::complex<R> g = upper_gamma_cf<R>(a, x, cf_rel_tol, cf_max_iter, &it);
        if (it > out.max_cf_iterations) out.max_cf_iterations = it;
        const std::complex<R> term = qf::c_exp(-a * qf::r_log(x)) * g;
        out.value += term;
        out.term_magnitude += qf::c_abs(term);
        out.terms = n;

        const R x_next = pi * R(n + 1) * R(n + 1);
        if (alpha <= R(1) || x_next > R(2) * (alpha - R(1))) {
            const R B = (alpha > R(1)) ? x_next / (x_next - (alpha - R(1))) : R(1);
            const R geom = R(1) / (R(1) - qf::r_exp(-pi * R(2 * n + 3)));
            tail = B * qf::r_exp(-x_next) / x_next * geom;
            if (tail <= tail_tol) {
                certified = true;
                break;
            }
        }
    }
    if (!certified)
        throw AccuracyError("mellin_gamma_series: tail bound above target within term cap");
    out.tail_bound = tail;
    return out;
}

} // namespace zetacrit::detail

#endif
