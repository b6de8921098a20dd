#include "starkcp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>

#include "starkcp/error.hpp"
#include "starkcp/quadrature.hpp"

namespace starkcp::oracle {

namespace {

constexpr double pi = std::numbers::pi;

TrigSeries merge(const TrigSeries& s) {
  std::map<std::pair<int, bool>, double> acc;
  for (const auto& t : s) acc[{t.power, t.is_sin}] += t.coef;
  TrigSeries out;
  for (const auto& [key, c] : acc)
    if (c != 0.0) out.push_back({c, key.first, key.second});
  return out;
}

TrigSeries scale(TrigSeries s, double f) {
  for (auto& t : s) t.coef *= f;
  return s;
}

TrigSeries add(TrigSeries a, const TrigSeries& b) {
  a.insert(a.end(), b.begin(), b.end());
  return merge(a);
}

// x^2 (2 j1/x - j2) and x^2 j2, direct with Taylor fallback near 0.
double delta_kernel(double x) {
  if (x < 1e-2) return x * x * (2.0 / 3.0 - x * x * (1.0 / 15.0 + 1.0 / 15.0));
  const double s = std::sin(x), c = std::cos(x);
  return (-s + x * c + x * x * s) / x;
}

double rr_kernel(double x) {
  if (x < 1e-2) return x * x * x * x / 15.0;
  const double s = std::sin(x), c = std::cos(x);
  return (3.0 / x - x) * s - 3.0 * c;
}

double regulated_radial(double (*kernel)(double), double eta, double tol) {
  // e^{-60} is far below any tolerance of interest.
  const double L = 60.0 / eta;
  std::vector<double> breaks;
  for (double x = 0.0; x < L; x += pi) breaks.push_back(x);
  breaks.push_back(L);
  quad::Options opt;
  opt.rel_tol = tol;
  opt.abs_tol = tol;
  const quad::Result r = quad::integrate_pieces([&](double x) { return kernel(x) * std::exp(-eta * x); }, breaks, opt);
  if (!r.converged) throw NumericError("one_photon_tensor: radial quadrature did not converge", r.value, r.error);
  return r.value;
}

quad::Extrapolation extrapolate(const RegulatedIntegralConfig& cfg, const std::vector<double>& values) {
  const auto n = static_cast<std::size_t>(cfg.extrapolation_order + 1);
  const std::size_t first = cfg.regulator_eta.size() - n;
  return quad::extrapolate_to_zero(std::span(cfg.regulator_eta).subspan(first), std::span(values).subspan(first));
}

// G(eta) for each axis: Laplace transform of x^3 F_axis(x).
struct AxisTransforms {
  TrigSeries longitudinal = shift(longitudinal_factor(), 3);
  TrigSeries transverse = shift(transverse_factor(), 3);
  double operator()(int axis, double eta) const {
    return laplace(axis == 2 ? longitudinal : transverse, eta);
  }
};

double eta_integral(const std::function<double(double)>& f, double tol, const std::string& what) {
  quad::Options opt;
  opt.rel_tol = tol;
  const quad::Result r = quad::integrate_to_infinity(f, 0.0, opt);
  if (!r.converged) throw NumericError(what + ": eta quadrature did not converge", r.value, r.error);
  return r.value;
}

int multiplicity(const std::array<int, 3>& ijk) {
  std::array<int, 3> s = ijk;
  std::sort(s.begin(), s.end());
  int count = 0;
  do ++count;
  while (std::next_permutation(s.begin(), s.end()));
  return count;
}

CoefficientCheck check(std::string label, double raw, double target) {
  return {std::move(label), raw, std::round(raw), target, std::abs(raw - target)};
}

}  // namespace

void RegulatedIntegralConfig::validate() const {
  if (regulator_eta.size() < 4) throw ConfigError("regulator sequence needs at least 4 points");
  for (std::size_t i = 0; i < regulator_eta.size(); ++i) {
    if (!(regulator_eta[i] > 0.0)) throw ConfigError("regulator values must be > 0");
    if (i > 0 && !(regulator_eta[i] < regulator_eta[i - 1]))
      throw ConfigError("regulator sequence must be strictly decreasing");
  }
  if (extrapolation_order < 1 || static_cast<std::size_t>(extrapolation_order) >= regulator_eta.size())
    throw ConfigError("extrapolation_order must lie in [1, number of etas - 1]");
  if (!(quadrature_tolerance > 0.0) || !(residual_tolerance > 0.0))
    throw ConfigError("tolerances must be > 0");
}

TrigSeries spherical_bessel_terms(int n) {
  if (n < 0) throw DomainError("spherical_bessel_terms: n must be >= 0");
  TrigSeries prev = {{1.0, -1, true}};                   // j0 = sin x / x
  TrigSeries cur = {{1.0, -2, true}, {-1.0, -1, false}};  // j1
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    // j_{k+1} = (2k+1)/x j_k - j_{k-1}
    TrigSeries next = add(scale(shift(cur, -1), 2.0 * k + 1.0), scale(prev, -1.0));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

TrigSeries shift(const TrigSeries& s, int p) {
  TrigSeries out = s;
  for (auto& t : out) t.power += p;
  return merge(out);
}

TrigSeries longitudinal_factor() { return scale(shift(spherical_bessel_terms(1), -1), 2.0); }

TrigSeries transverse_factor() { return add(longitudinal_factor(), scale(spherical_bessel_terms(2), -1.0)); }

double laplace(const TrigSeries& f, double eta) {
  const std::complex<double> z(eta, -1.0);
  double out = 0.0;
  for (const auto& t : f) {
    if (t.power < 0) throw DomainError("laplace: negative power in trig series");
    const std::complex<double> v = std::tgamma(t.power + 1.0) / std::pow(z, t.power + 1);
    out += t.coef * (t.is_sin ? v.imag() : v.real());
  }
  return out;
}

OnePhotonResult one_photon_tensor(const Vec3& r_vec, const RegulatedIntegralConfig& cfg) {
  cfg.validate();
  const double r = std::hypot(r_vec[0], r_vec[1], r_vec[2]);
  if (!(r > 0.0)) throw DomainError("one_photon_tensor: zero separation");

  std::vector<double> id, irr;
  for (double eta : cfg.regulator_eta) {
    id.push_back(regulated_radial(delta_kernel, eta, cfg.quadrature_tolerance));
    irr.push_back(regulated_radial(rr_kernel, eta, cfg.quadrature_tolerance));
  }
  const auto ed = extrapolate(cfg, id);
  const auto er = extrapolate(cfg, irr);

  OnePhotonResult out;
  out.delta_coefficient = ed.value;
  out.rr_coefficient = er.value;
  out.extrapolation_residual = std::max(ed.residual / std::abs(ed.value), er.residual / std::abs(er.value));

  // (2pi)^-3 * 4pi * r^-3 = 1/(2 pi^2 r^3); overall minus from the transverse delta.
  const double pref = -1.0 / (2.0 * pi * pi * r * r * r);
  double scale_ref = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const double ri = r_vec[i] / r, rj = r_vec[j] / r, d = i == j ? 1.0 : 0.0;
      out.tensor[i][j] = pref * (ed.value * d + er.value * ri * rj);
      out.reference[i][j] = (d - 3.0 * ri * rj) / (4.0 * pi * r * r * r);
      scale_ref = std::max(scale_ref, std::abs(out.reference[i][j]));
    }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out.max_relative_deviation =
          std::max(out.max_relative_deviation, std::abs(out.tensor[i][j] - out.reference[i][j]) / scale_ref);

  if (out.extrapolation_residual > cfg.residual_tolerance)
    throw NumericError("one_photon_tensor: extrapolation residual above tolerance", out.delta_coefficient,
                       out.extrapolation_residual);
  return out;
}

std::vector<CoefficientCheck> m_coefficients(const RegulatedIntegralConfig& cfg) {
  cfg.validate();
  const AxisTransforms g;
  // Two photons: -(hbar c / 4 eps0^2) r int deta [G/(2 pi^2 r^4)]^2 against
  // -(hbar c / 128 pi^3 eps0^2 r^7) M.
  const double norm = 128.0 * pi * pi * pi / 4.0 / std::pow(2.0 * pi * pi, 2);
  std::vector<CoefficientCheck> out;
  for (const auto& t : printed_coefficients().m) {
    const int i = t.ij[0], j = t.ij[1];
    const double v = eta_integral([&](double eta) { return g(i, eta) * g(j, eta); }, cfg.quadrature_tolerance,
                                  "m_coefficients " + label(t));
    out.push_back(check(label(t), norm * v, t.coefficient));
  }
  return out;
}

std::vector<CoefficientCheck> d_coefficients(const RegulatedIntegralConfig& cfg) {
  cfg.validate();
  const AxisTransforms g;
  // Three photons: -(1/3)(hbar c)^2/(8 eps0^3) r int deta [G/(2 pi^2 r^4)]^3
  // against +(hbar^2 c^2 / 2^13 pi^5 eps0^3 r^11) D.
  const double norm = -std::ldexp(1.0, 13) * std::pow(pi, 5) / 24.0 / std::pow(2.0 * pi * pi, 3);
  std::vector<CoefficientCheck> out;
  for (const auto& t : printed_coefficients().d) {
    const int i = t.ijk[0], j = t.ijk[1], k = t.ijk[2];
    const double v = eta_integral([&](double eta) { return g(i, eta) * g(j, eta) * g(k, eta); },
                                  cfg.quadrature_tolerance, "d_coefficients " + label(t));
    out.push_back(check(label(t), norm * v * multiplicity(t.ijk), t.coefficient));
  }
  return out;
}

nlohmann::json to_json(const OnePhotonResult& r) {
  return {{"tensor_per_m3", r.tensor},
          {"reference_per_m3", r.reference},
          {"delta_coefficient", r.delta_coefficient},
          {"rr_coefficient", r.rr_coefficient},
          {"extrapolation_residual", r.extrapolation_residual},
          {"max_relative_deviation", r.max_relative_deviation}};
}

nlohmann::json to_json(const CoefficientCheck& c) {
  return {{"label", c.label}, {"raw", c.raw}, {"rounded", c.rounded}, {"target", c.target}, {"residual", c.residual}};
}

}  // namespace starkcp::oracle
