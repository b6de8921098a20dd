#pragma once

#include <span>
#include <vector>

namespace starkcp::fit {

/// Least-squares coefficients c_0..c_degree of sum_k c_k x^k.
std::vector<double> polyfit(std::span<const double> x, std::span<const double> y, int degree);

/// Slope of log|y| against log x by least squares. Throws DomainError on
/// non-positive x or zero y.
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// n points log-spaced over [lo, hi] inclusive (n == 1 gives {lo}).
std::vector<double> logspace(double lo, double hi, int n);

}  // namespace starkcp::fit
