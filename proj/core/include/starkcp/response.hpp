#pragma once

#include <array>
#include <nlohmann/json.hpp>
#include <span>

#include "starkcp/dressing.hpp"
#include "starkcp/hydrogen.hpp"
#include "starkcp/units.hpp"

namespace starkcp {

using Tensor2 = std::array<std::array<double, 3>, 3>;
using Tensor3 = std::array<Tensor2, 3>;

/// Static polarizability alpha_ij(0), C m^2 / V.
struct Polarizability {
  Tensor2 components{};
  double field_at_atom = 0.0;  ///< V/m

  double operator()(Axis i, Axis j) const { return components[index(i)][index(j)]; }
  static Polarizability isotropic(double alpha, double field = 0.0);
};

/// Static first hyperpolarizability beta_ijk(0), C m^3 / V^2.
struct Hyperpolarizability {
  Tensor3 components{};
  double field_at_atom = 0.0;  ///< V/m

  double operator()(Axis i, Axis j, Axis k) const {
    return components[index(i)][index(j)][index(k)];
  }
};

/// alpha_ij = sum_s (d_i^{0s} d_j^{s0} + d_j^{0s} d_i^{s0}) / E_s0 over dressed
/// matrix elements, each product truncated at combined field order 2.
/// excitation_energies[s] = E_s - E_0 (J); zero throws DegeneracyError.
Polarizability polarizability(const DressedState& ground, std::span<const DressedState> excited,
                              std::span<const double> excitation_energies, const DipoleTable& table);

/// alpha = sum_s 2/(3 E_s0) sum_i d_i^{0s} d_i^{s0}, for undressed states.
double scalar_polarizability(const DressedState& ground, std::span<const DressedState> manifold,
                             std::span<const double> excitation_energies, const DipoleTable& table);

/// Six-permutation sum over t, s of d^{0t} d^{ts} d^{s0} / (E_t0 E_s0), each
/// triple product truncated at combined field order 2.
Hyperpolarizability hyperpolarizability(const DressedState& ground, std::span<const DressedState> excited,
                                        std::span<const double> excitation_energies,
                                        const DipoleTable& table);

/// Printed hydrogen results (n <= 2 truncation):
///   alpha33 = -2^18 q^2 a0^2 / (3^11 E1) - 2^22 q^2 a0^2 (q a0 eps / E1)^2 / (3^11 E1)
///   beta333 = 2^38 q^4 a0^4 eps / (3^22 E1^3)
double alpha33_closed_form(double epsilon, const ConstantsSet& constants = default_constants());
double beta333_closed_form(double epsilon, const ConstantsSet& constants = default_constants());

/// Undressed hydrogen polarizability -2^18 q^2 a0^2 / (3^11 E1), computed by
/// scalar_polarizability over the full n = 2 manifold.
double hydrogen_scalar_polarizability(const ConstantsSet& constants = default_constants());

/// Field-dressed hydrogen tensors assembled from dress_hydrogen_ground and both
/// Stark branches. The transverse components come from the undressed ground
/// state and |21+-1>, which the z field does not couple at this order.
Polarizability hydrogen_polarizability(double epsilon, const ConstantsSet& constants = default_constants());
Hyperpolarizability hydrogen_hyperpolarizability(double epsilon,
                                                 const ConstantsSet& constants = default_constants());

/// Tensors built from the printed closed forms: diag(alpha0, alpha0, alpha33(eps))
/// and beta with only the 333 component.
Polarizability hydrogen_polarizability_closed_form(double epsilon,
                                                   const ConstantsSet& constants = default_constants());
Hyperpolarizability hydrogen_hyperpolarizability_closed_form(
    double epsilon, const ConstantsSet& constants = default_constants());

nlohmann::json to_json(const Polarizability& alpha);
nlohmann::json to_json(const Hyperpolarizability& beta);

}  // namespace starkcp
