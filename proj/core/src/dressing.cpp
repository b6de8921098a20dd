#include "starkcp/dressing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "starkcp/error.hpp"

namespace starkcp {

double stark_gamma(const ConstantsSet& k) {
  return 512.0 * k.qa0() / (729.0 * k.E1);
}

Validity field_validity(double epsilon, const ConstantsSet& constants) {
  return std::abs(stark_gamma(constants) * epsilon) < 0.1 ? Validity::trusted
                                                          : Validity::outside_perturbative_range;
}

void FieldConfig::validate() const {
  if (!std::isfinite(epsilon_A) || epsilon_A < 0.0 || !std::isfinite(epsilon_B) || epsilon_B < 0.0)
    throw DomainError("field magnitudes must be finite and >= 0");
}

DressedState::DressedState(std::vector<BasisState> basis, OrderedAmplitudes by_order, std::string label,
                           Validity validity)
    : basis_(std::move(basis)), by_order_(std::move(by_order)), label_(std::move(label)), validity_(validity) {
  for (const auto& v : by_order_)
    if (v.size() != basis_.size()) throw DomainError("DressedState: amplitude/basis size mismatch");
}

std::vector<double> DressedState::coefficients() const {
  std::vector<double> out(basis_.size(), 0.0);
  for (const auto& v : by_order_)
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += v[i];
  return out;
}

double DressedState::coefficient(const BasisState& s) const {
  double total = 0.0;
  for (int p = 0; p <= kMaxOrder; ++p) total += coefficient(s, p);
  return total;
}

double DressedState::coefficient(const BasisState& s, int p) const {
  auto it = std::find(basis_.begin(), basis_.end(), s);
  if (it == basis_.end()) throw DomainError("state " + s.label() + " not in basis");
  return order(p)[static_cast<std::size_t>(it - basis_.begin())];
}

DressedState undressed(const BasisState& s, const std::vector<BasisState>& basis) {
  DressedState::OrderedAmplitudes amp;
  for (auto& o : amp) o.assign(basis.size(), 0.0);
  const auto it = std::find(basis.begin(), basis.end(), s);
  if (it == basis.end()) throw DomainError(s.label() + " is not in the basis");
  amp[0][static_cast<std::size_t>(it - basis.begin())] = 1.0;
  return DressedState(basis, std::move(amp), s.label());
}

DressedState dress_generic(const DipoleTable& table, std::span<const double> energies, const Vec3& field,
                           const BasisState& target, const ConstantsSet& constants) {
  const std::size_t n = table.size();
  if (energies.size() != n) throw DomainError("dress_generic: one energy per basis state required");
  const std::size_t g = table.index_of(target);
  const double e_target = energies[g];

  for (std::size_t a = 0; a < n; ++a) {
    if (a == g) continue;
    const double gap = e_target - energies[a];
    if (std::abs(gap) <= 1e-12 * std::abs(e_target))
      throw DegeneracyError("target " + target.label() + " is degenerate with " +
                            table.basis()[a].label());
  }

  // (d . field)_{ab}
  std::vector<double> v(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      double s = 0.0;
      for (Axis axis : kAxes)
        if (field[index(axis)] != 0.0) s += table(a, b, axis) * field[index(axis)];
      v[a * n + b] = s;
    }

  DressedState::OrderedAmplitudes amp;
  for (auto& o : amp) o.assign(n, 0.0);
  amp[0][g] = 1.0;

  std::vector<double> gap(n);
  for (std::size_t a = 0; a < n; ++a) gap[a] = e_target - energies[a];

  // First order and norm correction.
  double norm_shift = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    if (a == g) continue;
    const double vag = v[a * n + g];
    if (vag == 0.0) continue;
    amp[1][a] = -vag / gap[a];
    norm_shift += v[g * n + a] * vag / (2.0 * gap[a] * gap[a]);
  }
  amp[2][g] = -norm_shift;

  // Second-order admixtures.
  const double vgg = v[g * n + g];
  for (std::size_t b = 0; b < n; ++b) {
    if (b == g) continue;
    double s = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      if (a == g) continue;
      const double vba = v[b * n + a];
      const double vag = v[a * n + g];
      if (vba == 0.0 || vag == 0.0) continue;
      s += vba * vag / (gap[a] * gap[b]);
    }
    s -= v[b * n + g] * vgg / (gap[b] * gap[b]);
    amp[2][b] = s;
  }

  const double field_norm = std::sqrt(field[0] * field[0] + field[1] * field[1] + field[2] * field[2]);
  return DressedState(table.basis(), std::move(amp), target.label(), field_validity(field_norm, constants));
}

namespace {

struct N2Layout {
  std::vector<BasisState> basis = hydrogen_basis(2);
  std::size_t s1 = 0, s2 = 1, p0 = 2;  // |100>, |200>, |210>
};

}  // namespace

DressedState dress_hydrogen_ground(double epsilon, const ConstantsSet& constants) {
  const N2Layout layout;
  const double g = stark_gamma(constants) * epsilon;
  DressedState::OrderedAmplitudes amp;
  for (auto& o : amp) o.assign(layout.basis.size(), 0.0);
  amp[0][layout.s1] = 1.0;
  amp[1][layout.p0] = -std::numbers::sqrt2 * g;
  amp[2][layout.s1] = -g * g;
  amp[2][layout.s2] = -729.0 / (64.0 * std::numbers::sqrt2) * g * g;
  return DressedState(layout.basis, std::move(amp), BasisState(1, 0, 0).label(),
                      field_validity(epsilon, constants));
}

DressedState dress_hydrogen_excited(double epsilon, StarkBranch branch, const ConstantsSet& constants) {
  const N2Layout layout;
  const double g = stark_gamma(constants) * epsilon;
  const double sign = branch == StarkBranch::minus ? -1.0 : 1.0;
  const double h = std::numbers::sqrt2 / 2.0;
  DressedState::OrderedAmplitudes amp;
  for (auto& o : amp) o.assign(layout.basis.size(), 0.0);
  amp[0][layout.s2] = h;
  amp[0][layout.p0] = sign * h;
  amp[1][layout.s1] = sign * g;
  amp[2][layout.s2] = -0.5 * g * g * h;
  amp[2][layout.p0] = -0.5 * g * g * h * sign;
  amp[2][layout.s1] = 729.0 / 128.0 * g * g;
  return DressedState(layout.basis, std::move(amp),
                      branch == StarkBranch::minus ? "n=2 minus" : "n=2 plus",
                      field_validity(epsilon, constants));
}

namespace {

void require_same_basis(const std::vector<BasisState>& a, const std::vector<BasisState>& b) {
  if (a != b) throw DomainError("states are expanded over different bases");
}

}  // namespace

Vec3 induced_dipole(const DressedState& state, const DipoleTable& table) {
  require_same_basis(state.basis(), table.basis());
  const std::vector<double> c = state.coefficients();
  Vec3 d{0.0, 0.0, 0.0};
  const std::size_t n = c.size();
  for (Axis axis : kAxes) {
    double s = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      if (c[a] == 0.0) continue;
      for (std::size_t b = 0; b < n; ++b) s += c[a] * c[b] * table(a, b, axis);
    }
    d[index(axis)] = s;
  }
  return d;
}

double overlap(const DressedState& a, const DressedState& b) {
  require_same_basis(a.basis(), b.basis());
  const std::vector<double> ca = a.coefficients();
  const std::vector<double> cb = b.coefficients();
  double s = 0.0;
  for (std::size_t i = 0; i < ca.size(); ++i) s += ca[i] * cb[i];
  return s;
}

OrderSeries matrix_element(const DressedState& bra, const DressedState& ket, const DipoleTable& table,
                           Axis axis) {
  require_same_basis(bra.basis(), table.basis());
  require_same_basis(ket.basis(), table.basis());
  OrderSeries out{0.0, 0.0, 0.0};
  const std::size_t n = table.size();
  for (int p = 0; p <= DressedState::kMaxOrder; ++p)
    for (int q = 0; p + q <= DressedState::kMaxOrder; ++q) {
      const auto& cb = bra.order(p);
      const auto& ck = ket.order(q);
      double s = 0.0;
      for (std::size_t a = 0; a < n; ++a) {
        if (cb[a] == 0.0) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (ck[b] == 0.0) continue;
          s += cb[a] * ck[b] * table(a, b, axis);
        }
      }
      out[static_cast<std::size_t>(p + q)] += s;
    }
  return out;
}

OrderSeries truncated_product(const OrderSeries& a, const OrderSeries& b) {
  return {a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[0] * b[2] + a[1] * b[1] + a[2] * b[0]};
}

}  // namespace starkcp
