#ifndef ZETACRIT_MELLIN_HPP
#define ZETACRIT_MELLIN_HPP

// The entire function F(s) = int_1^inf t^{s/2-1} omega(t) dt by two
// independent routes: a gamma-series (term-wise Mellin transform of the
// theta sum) and adaptive Gauss-Kronrod quadrature with a certified
// analytic tail.

#include <complex>

#include "zetacrit/eval_result.hpp"

namespace zetacrit::mellin {

// Gamma(a, x) for complex a (|a| <= 64) and real x >= 1, continued-fraction
// only; relative accuracy ~1e-14 in this domain.
std::complex<double> upper_incomplete_gamma(std::complex<double> a, double x);

// F(s) = sum_{n<=N} (pi n^2)^{-s/2} Gamma(s/2, pi n^2), N chosen so the
// certified tail bound is <= tol. |Im s| <= 128.
EvalResult F_gamma_series(std::complex<double> s, double tol);

// Adaptive quadrature over [1, 40] plus the tail bound from
// omega(t) <= 2 exp(-pi t); total error target tol. |Im s| <= 128.
EvalResult F_quadrature(std::complex<double> s, double tol);

} // namespace zetacrit::mellin

#endif
