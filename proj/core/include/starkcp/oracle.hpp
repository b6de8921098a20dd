#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "starkcp/dressing.hpp"
#include "starkcp/potentials.hpp"
#include "starkcp/response.hpp"

namespace starkcp::oracle {

/// Regulator e^{-eta k r} for conditionally convergent k integrals, followed by
/// polynomial extrapolation eta -> 0.
struct RegulatedIntegralConfig {
  std::vector<double> regulator_eta = {0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625};
  double quadrature_tolerance = 1e-12;  ///< relative, per quadrature
  int extrapolation_order = 5;          ///< polynomial degree; uses the smallest order+1 etas
  double residual_tolerance = 1e-6;     ///< relative, extrapolation acceptance

  /// Throws ConfigError: >= 4 etas, all > 0, strictly decreasing, 1 <= order < count.
  void validate() const;
};

/// Trigonometric term coef * x^power * (sin x | cos x).
struct TrigTerm {
  double coef;
  int power;
  bool is_sin;
};
using TrigSeries = std::vector<TrigTerm>;

/// j_n(x) as a finite trig series with negative powers (upward recurrence).
TrigSeries spherical_bessel_terms(int n);

/// Angular factors of (4pi)^-1 int dOmega (delta - khat khat) e^{i k.r} for
/// rhat = z: longitudinal (zz) = 2 j1/x, transverse (xx, yy) = 2 j1/x - j2.
TrigSeries longitudinal_factor();
TrigSeries transverse_factor();

/// Multiply by x^p and merge like terms; zero coefficients are dropped.
TrigSeries shift(const TrigSeries& s, int p);

/// int_0^inf f(x) e^{-eta x} dx term by term through
/// int x^p e^{-(eta - i) x} dx = p!/(eta - i)^{p+1}. Needs every power >= 0.
double laplace(const TrigSeries& f, double eta);

struct OnePhotonResult {
  Tensor2 tensor{};      ///< -(2pi)^-3 int d^3k (delta - khat khat) e^{ik.r}, 1/m^3
  Tensor2 reference{};   ///< (delta - 3 rhat rhat) / (4 pi r^3)
  double delta_coefficient = 0.0;  ///< extrapolated int x^2 (2 j1/x - j2) dx
  double rr_coefficient = 0.0;     ///< extrapolated int x^2 j2 dx
  double extrapolation_residual = 0.0;  ///< relative
  double max_relative_deviation = 0.0;  ///< vs reference, scaled by max |reference|
};

/// Radial k integral numeric per eta, extrapolated to eta = 0. Throws
/// NumericError when the extrapolation residual exceeds the config tolerance.
OnePhotonResult one_photon_tensor(const Vec3& r_vec, const RegulatedIntegralConfig& cfg = {});

struct CoefficientCheck {
  std::string label;
  double raw = 0.0;
  double rounded = 0.0;
  double target = 0.0;
  double residual = 0.0;  ///< |raw - target|
};

/// Nine M_AB coefficients in printed order; targets from printed_coefficients().
std::vector<CoefficientCheck> m_coefficients(const RegulatedIntegralConfig& cfg = {});
/// Ten D_AB coefficients; each printed label folds the permutations of its
/// indices, so raw = (per-component integral) * multiplicity.
std::vector<CoefficientCheck> d_coefficients(const RegulatedIntegralConfig& cfg = {});

nlohmann::json to_json(const OnePhotonResult& r);
nlohmann::json to_json(const CoefficientCheck& c);

}  // namespace starkcp::oracle
