#ifndef ZETACRIT_EVAL_RESULT_HPP
#define ZETACRIT_EVAL_RESULT_HPP

#include <complex>

namespace zetacrit {

enum class Method { quadrature, gamma_series, oracle };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::quadrature:   return "quadrature";
        case Method::gamma_series: return "gamma_series";
        case Method::oracle:       return "oracle";
    }
    return "?";
}

// Value of an analytic evaluation together with an upper bound on its
// absolute error and the method that produced it.
struct EvalResult {
    std::complex<double> value;
    double abs_error_estimate = 0.0;
    Method method = Method::gamma_series;
};

} // namespace zetacrit

#endif
