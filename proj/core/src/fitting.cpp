#include "starkcp/fitting.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "starkcp/error.hpp"

namespace starkcp::fit {

std::vector<double> polyfit(std::span<const double> x, std::span<const double> y, int degree) {
  if (degree < 0) throw DomainError("polyfit: negative degree");
  if (x.size() != y.size() || x.size() < static_cast<std::size_t>(degree + 1))
    throw DomainError("polyfit: need at least degree+1 paired samples");
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd vander(n, degree + 1);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double p = 1.0;
    for (int k = 0; k <= degree; ++k) {
      vander(i, k) = p;
      p *= x[static_cast<std::size_t>(i)];
    }
    rhs(i) = y[static_cast<std::size_t>(i)];
  }
  // Column scaling keeps the QR well conditioned when x spans decades.
  Eigen::VectorXd scale = vander.colwise().norm().transpose();
  for (Eigen::Index k = 0; k < scale.size(); ++k)
    if (scale(k) == 0.0) scale(k) = 1.0;
  Eigen::MatrixXd scaled = vander * scale.cwiseInverse().asDiagonal();
  Eigen::VectorXd sol = scaled.colPivHouseholderQr().solve(rhs);
  std::vector<double> coeffs(static_cast<std::size_t>(degree + 1));
  for (int k = 0; k <= degree; ++k) coeffs[static_cast<std::size_t>(k)] = sol(k) / scale(k);
  return coeffs;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("loglog_slope: need >= 2 pairs");
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || y[i] == 0.0) throw DomainError("loglog_slope: x must be > 0, y != 0");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(std::abs(y[i]));
  }
  return polyfit(lx, ly, 1)[1];
}

std::vector<double> logspace(double lo, double hi, int n) {
  if (n < 1) throw DomainError("logspace: n must be >= 1");
  if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("logspace: need 0 < lo <= hi");
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace starkcp::fit
