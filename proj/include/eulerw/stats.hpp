#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>

namespace eulerw {

/// Neumaier compensated summation. Accumulates in double with a running
/// correction term so the result does not drift with operand ordering.
class CompensatedSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double compensated_sum(std::span<const double> xs);

/// Lower regularized incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);

/// Chi-square CDF with df degrees of freedom.
double chi_square_cdf(double x, int df);

/// Chi-square quantile by bisection on the CDF.
double chi_square_quantile(double p, int df);

/// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// Adaptive Simpson quadrature of f on [a, b] to absolute tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace eulerw
