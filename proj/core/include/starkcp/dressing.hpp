#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "starkcp/hydrogen.hpp"
#include "starkcp/units.hpp"

namespace starkcp {

using Vec3 = std::array<double, 3>;

/// gamma = 2^9 q a0 / (3^6 E1), in m/V. Negative because E1 < 0.
double stark_gamma(const ConstantsSet& constants);

enum class Validity { trusted, outside_perturbative_range };

/// Second-order dressing is trusted while |gamma * epsilon| < 0.1.
Validity field_validity(double epsilon, const ConstantsSet& constants);

/// Static field magnitudes at the two atoms; the field points along z.
struct FieldConfig {
  double epsilon_A = 0.0;  ///< V/m
  double epsilon_B = 0.0;  ///< V/m

  /// Throws DomainError for negative or non-finite magnitudes.
  void validate() const;
};

/// A field-dressed atomic state through second order. Amplitudes are kept
/// split by perturbative order (already multiplied by the field powers) so
/// products can be truncated consistently; coefficients() is their sum.
class DressedState {
 public:
  static constexpr int kMaxOrder = 2;
  using OrderedAmplitudes = std::array<std::vector<double>, kMaxOrder + 1>;

  DressedState(std::vector<BasisState> basis, OrderedAmplitudes by_order, std::string label,
               Validity validity = Validity::trusted);

  const std::vector<BasisState>& basis() const { return basis_; }
  const std::vector<double>& order(int p) const { return by_order_.at(static_cast<std::size_t>(p)); }
  std::vector<double> coefficients() const;
  /// Total amplitude on s (0 if s is in the basis but unpopulated). Throws
  /// DomainError if s is outside the basis.
  double coefficient(const BasisState& s) const;
  /// Amplitude on s at perturbative order p only.
  double coefficient(const BasisState& s, int p) const;

  /// Unperturbed level being dressed, e.g. "|100>" or "n=2 minus".
  const std::string& label() const { return label_; }
  int perturbative_order() const { return kMaxOrder; }
  Validity validity() const { return validity_; }

 private:
  std::vector<BasisState> basis_;
  OrderedAmplitudes by_order_;
  std::string label_;
  Validity validity_;
};

/// The unperturbed state s embedded in `basis` (order-0 amplitude 1).
DressedState undressed(const BasisState& s, const std::vector<BasisState>& basis);

/// Second-order Rayleigh-Schrodinger dressing of `target` by V = -d . field,
/// over the table's basis. Throws DegeneracyError naming the colliding level if
/// any other basis state shares the target's energy.
DressedState dress_generic(const DipoleTable& table, std::span<const double> energies,
                           const Vec3& field, const BasisState& target,
                           const ConstantsSet& constants = default_constants());

/// Closed-form dressed hydrogen ground state over hydrogen_basis(2):
/// (1 - g^2)|100> - sqrt2 g |210> - 3^6/(2^6 sqrt2) g^2 |200>, g = gamma * epsilon.
DressedState dress_hydrogen_ground(double epsilon, const ConstantsSet& constants = default_constants());

enum class StarkBranch { minus, plus };

/// Closed-form dressed Stark branches of n = 2 over hydrogen_basis(2):
/// (1 - g^2/2)(|200> -+ |210>)/sqrt2 -+ (g -+ 3^6/2^7 g^2)|100>.
DressedState dress_hydrogen_excited(double epsilon, StarkBranch branch,
                                    const ConstantsSet& constants = default_constants());

/// <psi| d |psi> (C m) from the full amplitudes.
Vec3 induced_dipole(const DressedState& state, const DipoleTable& table);

/// <a|b>. Throws DomainError if the bases differ.
double overlap(const DressedState& a, const DressedState& b);

/// <bra| d_axis |ket> split by combined perturbative order 0, 1, 2; orders
/// above 2 are dropped.
using OrderSeries = std::array<double, DressedState::kMaxOrder + 1>;
OrderSeries matrix_element(const DressedState& bra, const DressedState& ket, const DipoleTable& table,
                           Axis axis);

/// Product of two series truncated at combined order 2.
OrderSeries truncated_product(const OrderSeries& a, const OrderSeries& b);

inline double sum(const OrderSeries& s) { return s[0] + s[1] + s[2]; }

}  // namespace starkcp
