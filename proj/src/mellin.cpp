#include "zetacrit/mellin.hpp"

#include "zetacrit/errors.hpp"
#include "zetacrit/incgamma.hpp"
#include "zetacrit/theta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace zetacrit::mellin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTcut = 40.0;
constexpr int kPanelBudget = 1'000'000;
constexpr double kCfRelTol = 1e-15;
constexpr int kCfMaxIter = 500;

void check_envelope(std::complex<double> s, double tol, const char* who) {
    if (!(tol > 0.0)) throw DomainError(std::string(who) + ": tol must be positive");
    if (!(std::fabs(s.imag()) <= 128.0))
        throw DomainError(std::string(who) + ": |Im s| <= 128 required");
}

// 7-15 Gauss-Kronrod pair (QUADPACK dqk15 constants).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    std::complex<double> integral;
    double err;
    double abs_integral;
};

struct PanelErrLess {
    bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

template <class F>
Panel gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const std::complex<double> fc = f(c);
    std::complex<double> kron = fc * kWgk[7];
    std::complex<double> gauss = fc * kWg[3];
    double resabs = std::abs(fc) * kWgk[7];

    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const std::complex<double> f1 = f(c - dx);
        const std::complex<double> f2 = f(c + dx);
        kron += (f1 + f2) * kWgk[j];
        resabs += (std::abs(f1) + std::abs(f2)) * kWgk[j];
        if (j % 2 == 1) // Kronrod nodes 1,3,5 are the embedded Gauss nodes
            gauss += (f1 + f2) * kWg[j / 2];
    }
    kron *= h;
    gauss *= h;
    resabs *= h;
    return {a, b, kron, std::abs(kron - gauss), resabs};
}

double quadrature_tail_bound(double sigma) {
    // |int_{Tcut}^inf t^{sigma/2-1} omega(t) dt| <= 2 int t^{sigma/2-1} e^{-pi t}
    // with t^{p} <= Tcut^{p} e^{p (t-Tcut)/Tcut} for p = sigma/2-1 >= 0.
    const double p = 0.5 * sigma - 1.0;
    const double rate = kPi - std::max(p, 0.0) / kTcut;
    return 2.0 * std::exp(p * std::log(kTcut) - kPi * kTcut) / rate;
}

} // namespace

std::complex<double> upper_incomplete_gamma(std::complex<double> a, double x) {
    if (!(x >= 1.0))
        throw DomainError("upper_incomplete_gamma: x >= 1 required");
    if (!(std::abs(a) <= 64.0))
        throw DomainError("upper_incomplete_gamma: |a| <= 64 envelope");
    return detail::upper_gamma_cf<double>(a, x, kCfRelTol, kCfMaxIter);
}

EvalResult F_gamma_series(std::complex<double> s, double tol) {
    check_envelope(s, tol, "F_gamma_series");
    const auto series = detail::mellin_gamma_series<double>(s, tol, kCfRelTol, kCfMaxIter);
    // rounding: CF stopping tolerance plus phase loss in (pi n^2)^{-i Im(s)/2}
    const double phase = 0.5 * std::fabs(s.imag()) *
                         std::log(kPi * double(series.terms) * double(series.terms));
    const double rounding = series.term_magnitude * (kCfRelTol + (phase + 16.0) * kEps);
    return {series.value, series.tail_bound + rounding, Method::gamma_series};
}

EvalResult F_quadrature(std::complex<double> s, double tol) {
    check_envelope(s, tol, "F_quadrature");

    const std::complex<double> p = 0.5 * s - 1.0;
    const auto integrand = [p](double t) {
        return qf::c_exp(p * std::log(t)) * theta::detail::omega_sum(t);
    };

    const double tail = quadrature_tail_bound(s.real());
    const double target = 0.5 * tol;

    std::priority_queue<Panel, std::vector<Panel>, PanelErrLess> queue;
    double total_err = 0.0;
    int panels = 0;

    // seed geometrically: the integrand decays like e^{-pi t} with an
    // oscillation scale set by Im(s)/2 * d(ln t)
    const int seed = 8;
    for (int j = 0; j < seed; ++j) {
        const double a = std::pow(kTcut, double(j) / seed);
        const double b = std::pow(kTcut, double(j + 1) / seed);
        Panel panel = gk15(integrand, a, b);
        total_err += panel.err;
        queue.push(panel);
        ++panels;
    }

    while (total_err > target && panels < kPanelBudget) {
        Panel worst = queue.top();
        if (worst.err <= 0.0) break; // cannot improve further
        queue.pop();
        total_err -= worst.err;
        const double m = 0.5 * (worst.a + worst.b);
        Panel left = gk15(integrand, worst.a, m);
        Panel right = gk15(integrand, m, worst.b);
        total_err += left.err + right.err;
        queue.push(left);
        queue.push(right);
        ++panels;
    }
    if (total_err > target)
        throw AccuracyError("F_quadrature: subdivision budget exhausted");

    // deterministic summation order regardless of the refinement history
    std::vector<Panel> parts;
    parts.reserve(queue.size());
    while (!queue.empty()) {
        parts.push_back(queue.top());
        queue.pop();
    }
    std::sort(parts.begin(), parts.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });

    std::complex<double> value{};
    double abs_int = 0.0;
    for (const Panel& panel : parts) {
        value += panel.integral;
        abs_int += panel.abs_integral;
    }
    const double err = total_err + tail + 8.0 * kEps * abs_int;
    return {value, err, Method::quadrature};
}

} // namespace zetacrit::mellin
