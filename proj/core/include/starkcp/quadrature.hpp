#pragma once

#include <functional>
#include <span>
#include <vector>

namespace starkcp::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;  ///< estimated absolute error
  int intervals = 0;
  bool converged = false;
};

struct Options {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_intervals = 4000;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) on [a, b]. Never throws; check
/// Result::converged.
Result integrate(const Integrand& f, double a, double b, const Options& opt = {});

/// [a, inf) through x = a + t/(1-t). Suitable for integrands that decay at
/// least algebraically faster than 1/x.
Result integrate_to_infinity(const Integrand& f, double a, const Options& opt = {});

/// [a, b] split at the given interior breakpoints (sorted), each piece
/// integrated adaptively. Used for long oscillatory ranges.
Result integrate_pieces(const Integrand& f, std::span<const double> breakpoints,
                        const Options& opt = {});

/// Throwing variants: NumericError carries the achieved estimate and error.
double integrate_checked(const Integrand& f, double a, double b, const Options& opt = {});
double integrate_to_infinity_checked(const Integrand& f, double a, const Options& opt = {});

struct Extrapolation {
  double value = 0.0;
  double residual = 0.0;  ///< |difference of the two best tableau entries|
  std::vector<double> diagonal;  ///< successive extrapolants, increasing degree
};

/// Polynomial (Neville) extrapolation of samples (h_i, y_i) to h = 0.
Extrapolation extrapolate_to_zero(std::span<const double> h, std::span<const double> y);

}  // namespace starkcp::quad
