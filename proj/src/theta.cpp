#include "zetacrit/theta.hpp"

#include "zetacrit/errors.hpp"

#include <cmath>
#include <limits>

namespace zetacrit::theta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMinNormal = std::numeric_limits<double>::min();

struct KahanSum {
    double sum = 0.0;
    double c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

} // namespace

double tail_bound(double t, int n) {
    const double q = std::exp(-kPi * (2.0 * n + 1.0) * t);
    return std::exp(-kPi * double(n) * double(n) * t) * q / (1.0 - q);
}

Truncation plan_truncation(double t, const TruncationPlan& plan) {
    if (!(t > 0.0)) throw DomainError("plan_truncation: t must be positive");
    if (!(plan.target_abs_error > 0.0))
        throw DomainError("plan_truncation: target_abs_error must be positive");
    if (plan.max_terms < 1)
        throw DomainError("plan_truncation: max_terms must be >= 1");
    for (int n = 1; n <= plan.max_terms; ++n) {
        const double b = tail_bound(t, n);
        if (b <= plan.target_abs_error) return {n, b};
    }
    throw AccuracyError("plan_truncation: tail bound cannot certify target within max_terms");
}

RealEval omega_t(double t, double tol) {
    if (!(t > 0.0)) throw DomainError("omega_t: t must be positive");
    if (!(tol > 0.0)) throw DomainError("omega_t: tol must be positive");

    const Truncation tr = plan_truncation(t, TruncationPlan{10'000, tol / 2.0});

    KahanSum acc;
    for (int n = 1; n <= tr.terms; ++n)
        acc.add(std::exp(-kPi * double(n) * double(n) * t));

    if (acc.sum < kMinNormal)
        return {0.0, kMinNormal};

    // exp() loses ~|arg| ulps through argument rounding; the n=1 term dominates.
    const double rounding = (kPi * t + 8.0) * kEps * acc.sum;
    const double err = tr.tail_bound + rounding;
    if (err > tol)
        throw AccuracyError("omega_t: tolerance below the double rounding floor");
    return {acc.sum, err};
}

RealEval omega_T(double T, double tol) {
    if (!(T >= 0.0)) throw DomainError("omega_T: T must be >= 0");
    if (!(tol > 0.0)) throw DomainError("omega_T: tol must be positive");

    // single-term regime: pi * exp(T) > 700 makes n=1 already near underflow
    const double single_term_T = std::log(700.0 / kPi);
    if (T <= single_term_T)
        return omega_t(std::exp(T), tol);

    const double t = std::exp(T); // +inf is fine: exp(-inf) = 0 below
    const double v = std::exp(-kPi * t);
    if (v < kMinNormal)
        return {0.0, kMinNormal};
    const double err = tail_bound(t, 1) + (kPi * t + 8.0) * kEps * v;
    return {v, err};
}

RealEval omega_T_derivative(double T, double tol) {
    if (!(T >= 0.0)) throw DomainError("omega_T_derivative: T must be >= 0");
    if (!(tol > 0.0)) throw DomainError("omega_T_derivative: tol must be positive");

    const double t = std::exp(T);
    constexpr int max_terms = 10'000;

    // terms m_n = pi n^2 t exp(-pi n^2 t); the ratio
    // m_{n+1}/m_n <= ((n+1)/n)^2 exp(-pi(2n+1)t) decreases in n, so once it
    // drops below 1 the remaining tail is geometric.
    KahanSum acc;
    double tail = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= max_terms; ++n) {
        const double a = kPi * double(n) * double(n) * t;
        const double m = a * std::exp(-a);
        acc.add(m);
        const double g = (n + 1.0) / n;
        const double ratio = g * g * std::exp(-kPi * (2.0 * n + 1.0) * t);
        if (ratio < 1.0) {
            tail = m * ratio / (1.0 - ratio);
            if (tail <= tol / 2.0) break;
        }
        if (n == max_terms)
            throw AccuracyError("omega_T_derivative: tail not certified within max_terms");
    }

    if (acc.sum < kMinNormal)
        return {0.0, kMinNormal};

    const double rounding = (kPi * t + std::log1p(kPi * t) + 8.0) * kEps * acc.sum;
    const double err = tail + rounding;
    if (err > tol)
        throw AccuracyError("omega_T_derivative: tolerance below the double rounding floor");
    return {-acc.sum, err};
}

} // namespace zetacrit::theta
