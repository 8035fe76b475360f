#ifndef ZETACRIT_FLOAT128_HPP
#define ZETACRIT_FLOAT128_HPP

// __float128 scalar shims plus the complex helpers shared by the templated
// numerics. The critical-line zero search needs ~30 significant digits to
// survive the cancellation between the rational term and the two Mellin
// integrals, which is far beyond double; everything else runs in double.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include <quadmath.h>

namespace zetacrit::qf {

using real128 = __float128;
using complex128 = std::complex<real128>;

// scalar overload set: templates below call these unqualified so each
// precision picks its own math library
inline double r_exp(double x) { return std::exp(x); }
inline double r_log(double x) { return std::log(x); }
inline double r_sin(double x) { return std::sin(x); }
inline double r_cos(double x) { return std::cos(x); }
inline double r_sqrt(double x) { return std::sqrt(x); }
inline double r_abs(double x) { return std::fabs(x); }

inline real128 r_exp(real128 x) { return ::expq(x); }
inline real128 r_log(real128 x) { return ::logq(x); }
inline real128 r_sin(real128 x) { return ::sinq(x); }
inline real128 r_cos(real128 x) { return ::cosq(x); }
inline real128 r_sqrt(real128 x) { return ::sqrtq(x); }
inline real128 r_abs(real128 x) { return ::fabsq(x); }

// numeric_limits<__float128> is empty without -fext-numeric-literals, so the
// constants are spelled out here.
template <class R> struct traits {
    static R pi() { return std::numbers::pi_v<R>; }
    static R epsilon() { return std::numeric_limits<R>::epsilon(); }
    static R tiny() { return 1e-290; }
};
template <> struct traits<real128> {
    static real128 pi() { return ::acosq(real128(-1)); }
    static real128 epsilon() { return ::ldexpq(1.0, -112); }
    static real128 tiny() { return ::ldexpq(1.0, -16000); }
};

template <class R>
std::complex<R> c_exp(const std::complex<R>& z) {
    const R m = r_exp(z.real());
    return {m * r_cos(z.imag()), m * r_sin(z.imag())};
}

template <class R>
R c_abs(const std::complex<R>& z) {
    return r_sqrt(z.real() * z.real() + z.imag() * z.imag());
}

inline std::complex<double> to_double(const complex128& z) {
    return {double(z.real()), double(z.imag())};
}

} // namespace zetacrit::qf

#endif
