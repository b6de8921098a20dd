#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "starkcp/units.hpp"

namespace starkcp {

/// Cartesian component index. Stored 0-based; the physics labels are 1, 2, 3.
enum class Axis : int { x = 0, y = 1, z = 2 };

inline constexpr std::array<Axis, 3> kAxes = {Axis::x, Axis::y, Axis::z};

constexpr std::size_t index(Axis a) { return static_cast<std::size_t>(a); }

/// Hydrogen orbital |n l m>. For m != 0 the orbital is the real combination:
/// m > 0 carries cos(m phi), m < 0 carries sin(|m| phi), Condon-Shortley phases.
class BasisState {
 public:
  /// Throws DomainError unless n >= 1, 0 <= l < n, |m| <= l.
  BasisState(int n, int l, int m);

  int n() const { return n_; }
  int l() const { return l_; }
  int m() const { return m_; }

  std::string label() const;  // "|210>", "|21-1>"

  auto operator<=>(const BasisState&) const = default;

 private:
  int n_, l_, m_;
};

struct DipoleElement {
  BasisState bra;
  BasisState ket;
  Axis axis;
  double value;  ///< C m
};

/// E1 / n^2. Throws DomainError for n < 1.
double level_energy(int n, const ConstantsSet& constants);

/// All states with n <= max_n ordered by n, l, then m = 0, +1, -1, +2, -2, ...
/// max_n = 2 gives |100>, |200>, |210>, |211>, |21-1>.
std::vector<BasisState> hydrogen_basis(int max_n);

/// Electric-dipole selection rule for real orbitals: |l_a - l_b| = 1 and
/// z: m_a == m_b; x: ||m_a|-|m_b|| = 1 with equal cos/sin type; y: same with
/// opposite type.
bool dipole_allowed(const BasisState& a, const BasisState& b, Axis axis);

/// Closed-form <a|q r_axis|b> for n_a, n_b in {1, 2}. Forbidden elements are
/// exact zeros. Throws CapabilityError for larger n.
DipoleElement dipole_element(const BasisState& a, const BasisState& b, Axis axis,
                             const ConstantsSet& constants = default_constants());

/// Normalized radial function R_nl(rho), rho in Bohr radii, positive near the
/// origin.
double radial_wavefunction(int n, int l, double rho);

/// Angular factor <Y_a| r_axis / r |Y_b> for the real orbitals above.
double angular_factor(const BasisState& a, const BasisState& b, Axis axis);

/// int_0^inf R_a R_b rho^3 drho by adaptive quadrature, in units of a0.
/// Throws NumericError if 1e-12 relative accuracy is not reached.
double radial_dipole_integral(int n_a, int l_a, int n_b, int l_b);

/// Independent numeric route to <a|q r_axis|b> for n <= 10 (C m).
/// Forbidden elements are exact zeros.
double radial_integral_oracle(const BasisState& a, const BasisState& b, Axis axis,
                              const ConstantsSet& constants = default_constants());

/// Dense dipole matrices d_axis[bra][ket] (C m) over a fixed basis.
class DipoleTable {
 public:
  enum class Source { analytic, oracle };

  DipoleTable(std::vector<BasisState> basis, const ConstantsSet& constants,
              Source source = Source::analytic);

  const std::vector<BasisState>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  Source source() const { return source_; }

  double operator()(std::size_t bra, std::size_t ket, Axis axis) const {
    return d_[index(axis)][bra * basis_.size() + ket];
  }

  /// Throws DomainError if the state is not in the basis.
  std::size_t index_of(const BasisState& s) const;

 private:
  std::vector<BasisState> basis_;
  Source source_;
  std::array<std::vector<double>, 3> d_;
};

/// E1/n^2 for every state of the basis.
std::vector<double> level_energies(const std::vector<BasisState>& basis,
                                   const ConstantsSet& constants);

}  // namespace starkcp
