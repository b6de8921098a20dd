#pragma once

#include <array>
#include <nlohmann/json.hpp>
#include <string>

#include "starkcp/dressing.hpp"
#include "starkcp/response.hpp"
#include "starkcp/units.hpp"

namespace starkcp {

enum class Regime { trusted, untrusted };

/// A value with the conditions it was computed under. Near-zone requests do
/// not throw; they come back tagged untrusted.
struct Flagged {
  double value = 0.0;
  Regime regime = Regime::trusted;
  bool order_of_magnitude = false;  ///< dimensional estimate with unit prefactor
};

/// Reduced transition wavelength hbar c / |E2 - E1| (m).
double transition_wavelength(const ConstantsSet& constants = default_constants());

/// r > 10 * transition_wavelength.
bool far_zone(double r, const ConstantsSet& constants = default_constants());

/// (4 pi eps0 r^3)^-1 dA_i dB_j (delta_ij - 3 rhat_i rhat_j). r_vec = xA - xB.
double classical_dipole_dipole(const Vec3& dA, const Vec3& dB, const Vec3& r_vec,
                               const ConstantsSet& constants = default_constants());

/// Labeled integer coefficients of the far-zone contractions, in printed order.
struct MTerm {
  std::array<int, 2> ij;  ///< 0-based; the same pair is used for both atoms
  double coefficient;
};
struct DTerm {
  std::array<int, 3> ijk;
  double coefficient;
};
struct CoefficientVector {
  std::array<MTerm, 9> m;
  std::array<DTerm, 10> d;
};
const CoefficientVector& printed_coefficients();
std::string label(const MTerm& t);  // "alpha_33"
std::string label(const DTerm& t);  // "beta_333"

double m_contraction(const Polarizability& a, const Polarizability& b,
                     const CoefficientVector& c = printed_coefficients());
double d_contraction(const Hyperpolarizability& a, const Hyperpolarizability& b,
                     const CoefficientVector& c = printed_coefficients());

/// -(hbar c / 128 pi^3 eps0^2 r^7) M_AB, separation along axis 3.
Flagged two_photon_far_zone(const Polarizability& alphaA, const Polarizability& alphaB, double r,
                            const ConstantsSet& constants = default_constants());

/// +(hbar^2 c^2 / 2^13 pi^5 eps0^3 r^11) D_AB.
Flagged three_photon_far_zone(const Hyperpolarizability& betaA, const Hyperpolarizability& betaB,
                              double r, const ConstantsSet& constants = default_constants());

/// -5 2^35 hbar c q^6 a0^6 (epsA^2 + epsB^2) / (3^22 pi^3 eps0^2 E1^4 r^7).
Flagged sixth_order_correction(double epsA, double epsB, double r,
                               const ConstantsSet& constants = default_constants());
/// (160/23) q^2 a0^2 (epsA^2 + epsB^2) / E1^2.
double sixth_order_ratio(double epsA, double epsB, const ConstantsSet& constants = default_constants());

/// -7 2^67 hbar^2 c^2 q^8 a0^8 epsA epsB / (3^43 pi^5 eps0^3 E1^6 r^11).
Flagged eighth_order_correction(double epsA, double epsB, double r,
                                const ConstantsSet& constants = default_constants());
/// (7 2^37 / (23 3^21)) hbar c q^4 a0^4 epsA epsB / (pi^2 eps0 E1^4 r^4).
double eighth_order_ratio(double epsA, double epsB, double r,
                          const ConstantsSet& constants = default_constants());

/// Undressed far-zone CP potential -23 hbar c alpha0^2 / (64 pi^3 eps0^2 r^7)
/// with alpha0 the n <= 2 hydrogen polarizability.
Flagged cp_baseline(double r, const ConstantsSet& constants = default_constants());

/// Generic leading CP potential for scalar polarizabilities (C m^2/V).
double cp_leading(double alphaA, double alphaB, double r, const ConstantsSet& constants = default_constants());

/// -(hbar c aA aB / 16 pi^3 eps0^2 r^6) int_0^inf kA^2 kB^2 e^{-2ur}
/// (u^4r^4 + 2u^3r^3 + 5u^2r^2 + 6ur + 3) / ((kA^2+u^2)(kB^2+u^2)) du.
/// k are transition wavenumbers (1/m). Throws NumericError below 1e-8 relative.
double cp_full_integral(double alphaA, double alphaB, double kA, double kB, double r,
                        const ConstantsSet& constants = default_constants());

/// Leading CP term times (1 - 129/23 x^-2 + 1917/23 x^-4), x = kA r, keeping
/// `order` terms (1..3). Throws DomainError for x <= 3 or order outside 1..3.
double cp_far_series(double alphaA, double alphaB, double kA, double r, int order,
                     const ConstantsSet& constants = default_constants());

inline constexpr std::array<double, 3> kCpSeriesCoefficients = {1.0, -129.0 / 23.0, 1917.0 / 23.0};

/// -hbar c q^4 a0^4 (lamb/E1)^2 / (eps0^2 E1^2 r^7); lamb = hbar delta_omega_L (J).
Flagged vacuum_dressing_estimate(double lamb_shift_energy, double r,
                                 const ConstantsSet& constants = default_constants());
/// hbar delta_omega_L / (q a0), V/m.
double field_threshold(double lamb_shift_energy, const ConstantsSet& constants = default_constants());

/// -hbar^2 c^2 q^6 a0^8 / (eps0^3 E1^4 r^13).
Flagged quadrupole_estimate(double r, const ConstantsSet& constants = default_constants());

/// Everything at one (epsA, epsB, r) point.
struct PotentialBreakdown {
  double epsilon_A = 0.0, epsilon_B = 0.0, r = 0.0;
  Flagged E4_classical;
  Flagged U_cp_baseline;
  Flagged E6_correction;
  Flagged E8_correction;
  Flagged E_vacuum_estimate;
  Flagged E_quadrupole_estimate;
  double r6 = 0.0;  ///< E6 / U
  double r8 = 0.0;  ///< E8 / U
  Validity validity_A = Validity::trusted;
  Validity validity_B = Validity::trusted;
  bool far_zone = true;
};

/// Constants plus the dipole table used to dress each atom. basis_max_n = 2
/// uses closed-form dipoles; larger bases (up to 10) use the radial oracle and
/// affect only the E4 induced dipoles.
class HydrogenContext {
 public:
  explicit HydrogenContext(const ConstantsSet& constants = default_constants(), int basis_max_n = 2);

  const ConstantsSet& constants() const { return constants_; }
  int basis_max_n() const { return basis_max_n_; }
  /// Permanent dipole of the dressed ground state in a z field (C m).
  Vec3 induced_dipole(double epsilon) const;

 private:
  ConstantsSet constants_;
  int basis_max_n_;
  DipoleTable table_;
  std::vector<double> energies_;
};

PotentialBreakdown breakdown(const HydrogenContext& ctx, double epsA, double epsB, double r,
                             double lamb_shift_energy);

nlohmann::json to_json(const Flagged& f);
nlohmann::json to_json(const PotentialBreakdown& b);
std::string_view to_string(Regime r);

}  // namespace starkcp
