#include "starkcp/potentials.hpp"

#include <cmath>
#include <numbers>

#include "starkcp/error.hpp"
#include "starkcp/quadrature.hpp"

namespace starkcp {

namespace {

constexpr double pi = std::numbers::pi;

double pow_int(double x, int n) {
  double out = 1.0;
  for (int i = 0; i < n; ++i) out *= x;
  return out;
}

void require_positive_r(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("separation must be finite and > 0");
}

Regime regime_for(double r, const ConstantsSet& k) { return far_zone(r, k) ? Regime::trusted : Regime::untrusted; }

double alpha0(const ConstantsSet& k) { return alpha33_closed_form(0.0, k); }

}  // namespace

double transition_wavelength(const ConstantsSet& k) {
  return k.hbar_c() / std::abs(level_energy(2, k) - level_energy(1, k));
}

bool far_zone(double r, const ConstantsSet& k) { return r > 10.0 * transition_wavelength(k); }

double classical_dipole_dipole(const Vec3& dA, const Vec3& dB, const Vec3& r_vec, const ConstantsSet& k) {
  const double r = std::hypot(r_vec[0], r_vec[1], r_vec[2]);
  if (!(r > 0.0)) throw DomainError("classical_dipole_dipole: zero separation");
  double dot = 0.0, a_r = 0.0, b_r = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    dot += dA[i] * dB[i];
    a_r += dA[i] * r_vec[i] / r;
    b_r += dB[i] * r_vec[i] / r;
  }
  return (dot - 3.0 * (a_r * b_r)) / (4.0 * pi * k.epsilon0 * r * r * r);
}

const CoefficientVector& printed_coefficients() {
  static const CoefficientVector c{
      {{{{{2, 2}}, 20.0},
        {{{0, 0}}, 13.0},
        {{{1, 1}}, 13.0},
        {{{0, 1}}, 13.0},
        {{{1, 0}}, 13.0},
        {{{0, 2}}, -15.0},
        {{{2, 0}}, -15.0},
        {{{1, 2}}, -15.0},
        {{{2, 1}}, -15.0}}},
      {{{{{2, 2, 2}}, -336.0},
        {{{1, 1, 1}}, 225.0},
        {{{0, 0, 0}}, 225.0},
        {{{1, 0, 1}}, 675.0},
        {{{0, 1, 0}}, 675.0},
        {{{0, 2, 0}}, -744.0},
        {{{1, 2, 1}}, -744.0},
        {{{2, 0, 2}}, 840.0},
        {{{2, 1, 2}}, 840.0},
        {{{0, 1, 2}}, -1488.0}}}};
  return c;
}

std::string label(const MTerm& t) {
  return "alpha_" + std::to_string(t.ij[0] + 1) + std::to_string(t.ij[1] + 1);
}

std::string label(const DTerm& t) {
  return "beta_" + std::to_string(t.ijk[0] + 1) + std::to_string(t.ijk[1] + 1) + std::to_string(t.ijk[2] + 1);
}

double m_contraction(const Polarizability& a, const Polarizability& b, const CoefficientVector& c) {
  double total = 0.0;
  for (const auto& t : c.m) {
    const auto i = static_cast<std::size_t>(t.ij[0]), j = static_cast<std::size_t>(t.ij[1]);
    total += t.coefficient * a.components[i][j] * b.components[i][j];
  }
  return total;
}

double d_contraction(const Hyperpolarizability& a, const Hyperpolarizability& b, const CoefficientVector& c) {
  double total = 0.0;
  for (const auto& t : c.d) {
    const auto i = static_cast<std::size_t>(t.ijk[0]), j = static_cast<std::size_t>(t.ijk[1]),
               l = static_cast<std::size_t>(t.ijk[2]);
    total += t.coefficient * a.components[i][j][l] * b.components[i][j][l];
  }
  return total;
}

Flagged two_photon_far_zone(const Polarizability& alphaA, const Polarizability& alphaB, double r,
                            const ConstantsSet& k) {
  require_positive_r(r);
  const double e0 = k.epsilon0;
  const double pref = -k.hbar_c() / (128.0 * pi * pi * pi * e0 * e0 * pow_int(r, 7));
  return {pref * m_contraction(alphaA, alphaB), regime_for(r, k), false};
}

Flagged three_photon_far_zone(const Hyperpolarizability& betaA, const Hyperpolarizability& betaB, double r,
                              const ConstantsSet& k) {
  require_positive_r(r);
  const double hc = k.hbar_c();
  const double pref = hc * hc / (std::ldexp(1.0, 13) * pow_int(pi, 5) * pow_int(k.epsilon0, 3) * pow_int(r, 11));
  return {pref * d_contraction(betaA, betaB), regime_for(r, k), false};
}

Flagged sixth_order_correction(double epsA, double epsB, double r, const ConstantsSet& k) {
  require_positive_r(r);
  const double qa0 = k.qa0();
  const double num = 5.0 * std::ldexp(1.0, 35) * k.hbar_c() * pow_int(qa0, 6) * (epsA * epsA + epsB * epsB);
  const double den = std::pow(3.0, 22) * pow_int(pi, 3) * k.epsilon0 * k.epsilon0 * pow_int(k.E1, 4) * pow_int(r, 7);
  Flagged out{-num / den, regime_for(r, k), false};
  if (field_validity(epsA, k) != Validity::trusted || field_validity(epsB, k) != Validity::trusted)
    out.regime = Regime::untrusted;
  return out;
}

double sixth_order_ratio(double epsA, double epsB, const ConstantsSet& k) {
  const double qa0 = k.qa0();
  return (160.0 / 23.0) * qa0 * qa0 * (epsA * epsA + epsB * epsB) / (k.E1 * k.E1);
}

Flagged eighth_order_correction(double epsA, double epsB, double r, const ConstantsSet& k) {
  require_positive_r(r);
  const double hc = k.hbar_c();
  const double num = 7.0 * std::ldexp(1.0, 67) * hc * hc * pow_int(k.qa0(), 8) * (epsA * epsB);
  const double den =
      std::pow(3.0, 43) * pow_int(pi, 5) * pow_int(k.epsilon0, 3) * pow_int(k.E1, 6) * pow_int(r, 11);
  Flagged out{-num / den, regime_for(r, k), false};
  if (field_validity(epsA, k) != Validity::trusted || field_validity(epsB, k) != Validity::trusted)
    out.regime = Regime::untrusted;
  return out;
}

double eighth_order_ratio(double epsA, double epsB, double r, const ConstantsSet& k) {
  require_positive_r(r);
  const double pref = 7.0 * std::ldexp(1.0, 37) / (23.0 * std::pow(3.0, 21));
  return pref * k.hbar_c() * pow_int(k.qa0(), 4) * (epsA * epsB) /
         (pi * pi * k.epsilon0 * pow_int(k.E1, 4) * pow_int(r, 4));
}

double cp_leading(double alphaA, double alphaB, double r, const ConstantsSet& k) {
  require_positive_r(r);
  return -23.0 * k.hbar_c() * alphaA * alphaB / (64.0 * pow_int(pi, 3) * k.epsilon0 * k.epsilon0 * pow_int(r, 7));
}

Flagged cp_baseline(double r, const ConstantsSet& k) {
  const double a = alpha0(k);
  return {cp_leading(a, a, r, k), regime_for(r, k), false};
}

double cp_full_integral(double alphaA, double alphaB, double kA, double kB, double r, const ConstantsSet& k) {
  require_positive_r(r);
  if (!(kA > 0.0) || !(kB > 0.0)) throw DomainError("cp_full_integral: wavenumbers must be > 0");
  // t = u r
  const double xa2 = (kA * r) * (kA * r), xb2 = (kB * r) * (kB * r);
  auto f = [=](double t) {
    const double poly = (((t + 2.0) * t + 5.0) * t + 6.0) * t + 3.0;
    return std::exp(-2.0 * t) * poly * (xa2 / (xa2 + t * t)) * (xb2 / (xb2 + t * t));
  };
  quad::Options opt;
  opt.rel_tol = 1e-13;
  const quad::Result res = quad::integrate_to_infinity(f, 0.0, opt);
  if (!res.converged && !(res.error <= 1e-8 * std::abs(res.value)))
    throw NumericError("cp_full_integral: quadrature did not reach 1e-8 relative", res.value, res.error);
  const double pref = -k.hbar_c() * alphaA * alphaB / (16.0 * pow_int(pi, 3) * k.epsilon0 * k.epsilon0 * pow_int(r, 7));
  return pref * res.value;
}

double cp_far_series(double alphaA, double alphaB, double kA, double r, int order, const ConstantsSet& k) {
  require_positive_r(r);
  if (order < 1 || order > 3) throw DomainError("cp_far_series: order must be 1, 2 or 3");
  const double x = kA * r;
  if (!(x > 3.0)) throw DomainError("cp_far_series: kA r <= 3, the far-zone series diverges");
  const double y = 1.0 / (x * x);
  double factor = 0.0, p = 1.0;
  for (int n = 0; n < order; ++n, p *= y) factor += kCpSeriesCoefficients[static_cast<std::size_t>(n)] * p;
  return cp_leading(alphaA, alphaB, r, k) * factor;
}

Flagged vacuum_dressing_estimate(double lamb, double r, const ConstantsSet& k) {
  require_positive_r(r);
  const double s = lamb / k.E1;
  const double v = -k.hbar_c() * pow_int(k.qa0(), 4) * s * s /
                   (k.epsilon0 * k.epsilon0 * k.E1 * k.E1 * pow_int(r, 7));
  return {v, regime_for(r, k), true};
}

double field_threshold(double lamb, const ConstantsSet& k) { return lamb / k.qa0(); }

Flagged quadrupole_estimate(double r, const ConstantsSet& k) {
  require_positive_r(r);
  const double hc = k.hbar_c();
  const double v = -hc * hc * pow_int(k.q, 6) * pow_int(k.a0, 8) /
                   (pow_int(k.epsilon0, 3) * pow_int(k.E1, 4) * pow_int(r, 13));
  return {v, regime_for(r, k), true};
}

HydrogenContext::HydrogenContext(const ConstantsSet& constants, int basis_max_n)
    : constants_(constants),
      basis_max_n_(basis_max_n),
      table_([&] {
        constants.validate();
        if (basis_max_n < 2 || basis_max_n > 10) throw ConfigError("basis_max_n must lie in [2, 10]");
        return DipoleTable(hydrogen_basis(basis_max_n), constants,
                           basis_max_n == 2 ? DipoleTable::Source::analytic : DipoleTable::Source::oracle);
      }()),
      energies_(level_energies(table_.basis(), constants)) {}

Vec3 HydrogenContext::induced_dipole(double epsilon) const {
  if (basis_max_n_ == 2) return starkcp::induced_dipole(dress_hydrogen_ground(epsilon, constants_), table_);
  const DressedState g =
      dress_generic(table_, energies_, Vec3{0.0, 0.0, epsilon}, BasisState(1, 0, 0), constants_);
  return starkcp::induced_dipole(g, table_);
}

PotentialBreakdown breakdown(const HydrogenContext& ctx, double epsA, double epsB, double r, double lamb) {
  FieldConfig{epsA, epsB}.validate();
  require_positive_r(r);
  const ConstantsSet& k = ctx.constants();

  PotentialBreakdown b;
  b.epsilon_A = epsA;
  b.epsilon_B = epsB;
  b.r = r;
  b.validity_A = field_validity(epsA, k);
  b.validity_B = field_validity(epsB, k);
  b.far_zone = far_zone(r, k);
  const bool fields_ok = b.validity_A == Validity::trusted && b.validity_B == Validity::trusted;

  b.E4_classical = {classical_dipole_dipole(ctx.induced_dipole(epsA), ctx.induced_dipole(epsB),
                                            Vec3{0.0, 0.0, r}, k),
                    fields_ok ? Regime::trusted : Regime::untrusted, false};
  b.U_cp_baseline = cp_baseline(r, k);
  b.E6_correction = sixth_order_correction(epsA, epsB, r, k);
  b.E8_correction = eighth_order_correction(epsA, epsB, r, k);
  b.E_vacuum_estimate = vacuum_dressing_estimate(lamb, r, k);
  b.E_quadrupole_estimate = quadrupole_estimate(r, k);
  b.r6 = b.E6_correction.value / b.U_cp_baseline.value;
  b.r8 = b.E8_correction.value / b.U_cp_baseline.value;
  return b;
}

std::string_view to_string(Regime r) { return r == Regime::trusted ? "trusted" : "untrusted regime"; }

nlohmann::json to_json(const Flagged& f) {
  return {{"value_J", f.value}, {"regime", to_string(f.regime)}, {"order_of_magnitude", f.order_of_magnitude}};
}

nlohmann::json to_json(const PotentialBreakdown& b) {
  auto validity = [](Validity v) { return v == Validity::trusted ? "trusted" : "outside perturbative range"; };
  return {{"epsilon_A_V_per_m", b.epsilon_A},
          {"epsilon_B_V_per_m", b.epsilon_B},
          {"r_m", b.r},
          {"far_zone", b.far_zone},
          {"validity_A", validity(b.validity_A)},
          {"validity_B", validity(b.validity_B)},
          {"E4_classical", to_json(b.E4_classical)},
          {"U_cp_baseline", to_json(b.U_cp_baseline)},
          {"E6_correction", to_json(b.E6_correction)},
          {"E8_correction", to_json(b.E8_correction)},
          {"E_vacuum_estimate", to_json(b.E_vacuum_estimate)},
          {"E_quadrupole_estimate", to_json(b.E_quadrupole_estimate)},
          {"r6", b.r6},
          {"r8", b.r8}};
}

}  // namespace starkcp
