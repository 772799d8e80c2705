#pragma once

// Regularized incomplete gamma and beta functions, implemented with the
// usual series / continued-fraction split (modified Lentz), plus the two
// tail probabilities the analysis needs: chi-square survival and the
// two-sided Student-t tail.

#include <cmath>
#include <limits>
#include <stdexcept>

namespace noticescope::detail {

inline constexpr double kSfEps = 1e-15;
inline constexpr int kSfMaxIter = 500;
inline constexpr double kLentzTiny = 1e-300;

// Lower regularized incomplete gamma P(a, x) by series expansion; valid
// for x < a + 1.
inline double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < kSfMaxIter; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kSfEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized incomplete gamma Q(a, x) by continued fraction; valid
// for x >= a + 1.
inline double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kLentzTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kSfMaxIter; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kLentzTiny) d = kLentzTiny;
        c = b + an / c;
        if (std::fabs(c) < kLentzTiny) c = kLentzTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kSfEps) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0 || !std::isfinite(x))
        throw std::invalid_argument("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

inline double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0 || !std::isfinite(x))
        throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

// P(X > x) for X ~ chi-square with dof degrees of freedom.
inline double chisq_sf(double x, double dof) {
    if (x <= 0.0) return 1.0;
    return gamma_q(dof / 2.0, x / 2.0);
}

// Continued fraction for the regularized incomplete beta function.
inline double beta_cf(double a, double b, double x) {
    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kLentzTiny) d = kLentzTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kSfMaxIter; ++m) {
        double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kLentzTiny) d = kLentzTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kLentzTiny) c = kLentzTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kLentzTiny) d = kLentzTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kLentzTiny) c = kLentzTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kSfEps) break;
    }
    return h;
}

// Regularized incomplete beta I_x(a, b).
inline double beta_i(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0) || x < 0.0 || x > 1.0)
        throw std::invalid_argument("beta_i: bad arguments");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log(1.0 - x));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

// Two-sided tail of Student's t with nu degrees of freedom.
inline double student_t_two_sided(double t, double nu) {
    if (!std::isfinite(t)) return 0.0;
    return beta_i(nu / 2.0, 0.5, nu / (nu + t * t));
}

}  // namespace noticescope::detail
