#include "eulerw/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace eulerw {

double compensated_sum(std::span<const double> xs) {
    CompensatedSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

namespace {

// Series expansion of P(a, x), converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("regularized_gamma_p: series failed to converge");
}

// Lentz continued fraction for Q(a, x) = 1 - P(a, x), for x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("regularized_gamma_p: continued fraction failed to converge");
}

}  // namespace

double regularized_gamma_p(double a, double x) {
    if (a <= 0.0) throw std::domain_error("regularized_gamma_p: a must be > 0");
    if (x < 0.0) throw std::domain_error("regularized_gamma_p: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_continued_fraction(a, x);
}

double chi_square_cdf(double x, int df) {
    if (df < 1) throw std::domain_error("chi_square_cdf: df must be >= 1");
    if (x <= 0.0) return 0.0;
    return regularized_gamma_p(0.5 * df, 0.5 * x);
}

double chi_square_quantile(double p, int df) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("chi_square_quantile: p must be in (0,1)");
    double lo = 0.0, hi = 1.0;
    while (chi_square_cdf(hi, df) < p) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (chi_square_cdf(mid, df) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double integrate_step(const std::function<double(double)>& f, double a, double fa, double b,
                      double fb, double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, lm, flm);
    const double right = simpson(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return integrate_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           integrate_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("integrate: tol must be > 0");
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    return integrate_step(f, a, fa, b, fb, m, fm, simpson(f, a, fa, b, fb, m, fm), tol, 60);
}

}  // namespace eulerw
