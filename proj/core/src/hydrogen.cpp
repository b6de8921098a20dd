#include "starkcp/hydrogen.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <numbers>
#include <tuple>

#include "starkcp/error.hpp"
#include "starkcp/quadrature.hpp"

namespace starkcp {

BasisState::BasisState(int n, int l, int m) : n_(n), l_(l), m_(m) {
  if (n < 1 || l < 0 || l >= n || std::abs(m) > l)
    throw DomainError("invalid hydrogen quantum numbers (n=" + std::to_string(n) +
                      ", l=" + std::to_string(l) + ", m=" + std::to_string(m) + ")");
}

std::string BasisState::label() const {
  return "|" + std::to_string(n_) + std::to_string(l_) + std::to_string(m_) + ">";
}

double level_energy(int n, const ConstantsSet& constants) {
  if (n < 1) throw DomainError("level_energy: n must be >= 1");
  return constants.E1 / (static_cast<double>(n) * n);
}

std::vector<BasisState> hydrogen_basis(int max_n) {
  if (max_n < 1) throw DomainError("hydrogen_basis: max_n must be >= 1");
  std::vector<BasisState> out;
  for (int n = 1; n <= max_n; ++n)
    for (int l = 0; l < n; ++l) {
      out.emplace_back(n, l, 0);
      for (int mm = 1; mm <= l; ++mm) {
        out.emplace_back(n, l, mm);
        out.emplace_back(n, l, -mm);
      }
    }
  return out;
}

bool dipole_allowed(const BasisState& a, const BasisState& b, Axis axis) {
  if (std::abs(a.l() - b.l()) != 1) return false;
  if (axis == Axis::z) return a.m() == b.m();
  if (std::abs(std::abs(a.m()) - std::abs(b.m())) != 1) return false;
  const bool same_type = (a.m() >= 0) == (b.m() >= 0);
  return axis == Axis::x ? same_type : !same_type;
}

namespace {

// <100|z|210> in units of q a0.
const double kGround2p = 128.0 * std::numbers::sqrt2 / 243.0;
// <200|z|210> in units of q a0.
constexpr double k2s2p = -3.0;

}  // namespace

DipoleElement dipole_element(const BasisState& a, const BasisState& b, Axis axis,
                             const ConstantsSet& constants) {
  if (a.n() > 2 || b.n() > 2)
    throw CapabilityError("analytic dipole table covers n <= 2 only; use radial_integral_oracle");
  DipoleElement out{a, b, axis, 0.0};
  if (!dipole_allowed(a, b, axis)) return out;
  // Exactly one side is an s state and the other the p orbital aligned with axis.
  const BasisState& s = a.l() == 0 ? a : b;
  out.value = (s.n() == 1 ? kGround2p : k2s2p) * constants.qa0();
  return out;
}

double radial_wavefunction(int n, int l, double rho) {
  if (n < 1 || l < 0 || l >= n) throw DomainError("radial_wavefunction: invalid (n, l)");
  const double x = 2.0 * rho / n;
  const double log_norm = 1.5 * std::log(2.0 / n) +
                          0.5 * (std::lgamma(n - l) - std::log(2.0 * n) - std::lgamma(n + l + 1));
  return std::exp(log_norm - 0.5 * x) * std::pow(x, l) *
         std::assoc_laguerre(static_cast<unsigned>(n - l - 1), static_cast<unsigned>(2 * l + 1), x);
}

namespace {

enum class Ladder { z, plus, minus };  // cos(theta), sin(theta) e^{+i phi}, sin(theta) e^{-i phi}

// <l1 m1| op |l2 m2> between complex Condon-Shortley spherical harmonics.
double complex_element(int l1, int m1, int l2, int m2, Ladder op) {
  const double L = l2, M = m2;
  switch (op) {
    case Ladder::z:
      if (m1 != m2) return 0.0;
      if (l1 == l2 + 1) return std::sqrt(((L + 1) * (L + 1) - M * M) / ((2 * L + 1) * (2 * L + 3)));
      if (l1 == l2 - 1) return std::sqrt((L * L - M * M) / ((2 * L - 1) * (2 * L + 1)));
      return 0.0;
    case Ladder::plus:
      if (m1 != m2 + 1) return 0.0;
      if (l1 == l2 + 1) return -std::sqrt((L + M + 1) * (L + M + 2) / ((2 * L + 1) * (2 * L + 3)));
      if (l1 == l2 - 1) return std::sqrt((L - M) * (L - M - 1) / ((2 * L - 1) * (2 * L + 1)));
      return 0.0;
    case Ladder::minus:
      if (m1 != m2 - 1) return 0.0;
      if (l1 == l2 + 1) return std::sqrt((L - M + 1) * (L - M + 2) / ((2 * L + 1) * (2 * L + 3)));
      if (l1 == l2 - 1) return -std::sqrt((L + M) * (L + M - 1) / ((2 * L - 1) * (2 * L + 1)));
      return 0.0;
  }
  return 0.0;
}

struct Component {
  std::complex<double> weight;
  int m;
};

// Real orbital as a combination of complex harmonics with the same l.
std::vector<Component> real_to_complex(int m) {
  using namespace std::complex_literals;
  const double r = std::numbers::sqrt2 / 2.0;
  if (m == 0) return {{1.0, 0}};
  const int mu = std::abs(m);
  const double sign = (mu % 2 == 0) ? 1.0 : -1.0;
  if (m > 0) return {{r, -mu}, {sign * r, mu}};
  return {{1i * r, -mu}, {-1i * sign * r, mu}};
}

}  // namespace

double angular_factor(const BasisState& a, const BasisState& b, Axis axis) {
  using namespace std::complex_literals;
  if (!dipole_allowed(a, b, axis)) return 0.0;
  std::complex<double> sum = 0.0;
  for (const auto& ca : real_to_complex(a.m()))
    for (const auto& cb : real_to_complex(b.m())) {
      std::complex<double> op;
      const double up = complex_element(a.l(), ca.m, b.l(), cb.m, Ladder::plus);
      const double down = complex_element(a.l(), ca.m, b.l(), cb.m, Ladder::minus);
      switch (axis) {
        case Axis::z:
          op = complex_element(a.l(), ca.m, b.l(), cb.m, Ladder::z);
          break;
        case Axis::x:
          op = 0.5 * (up + down);
          break;
        case Axis::y:
          op = (up - down) / 2i;
          break;
      }
      sum += std::conj(ca.weight) * cb.weight * op;
    }
  return sum.real();
}

double radial_dipole_integral(int n_a, int l_a, int n_b, int l_b) {
  const int n_max = std::max(n_a, n_b);
  const double scale = static_cast<double>(n_max) * n_max;
  auto f = [=](double rho) {
    return radial_wavefunction(n_a, l_a, rho) * radial_wavefunction(n_b, l_b, rho) * rho * rho * rho;
  };
  // Both factors decay at least as exp(-2 rho / n_max); beyond 100 n_max^2 the
  // integrand is below double resolution.
  const std::array<double, 8> breaks = {0.0,          0.5 * scale,  scale,        2.0 * scale,
                                        5.0 * scale,  10.0 * scale, 30.0 * scale, 100.0 * scale};
  quad::Options opt;
  opt.rel_tol = 1e-12;
  opt.abs_tol = 1e-15;
  const quad::Result r = quad::integrate_pieces(f, breaks, opt);
  if (!r.converged)
    throw NumericError("radial integral did not reach 1e-12 relative", r.value, r.error);
  return r.value;
}

double radial_integral_oracle(const BasisState& a, const BasisState& b, Axis axis,
                              const ConstantsSet& constants) {
  if (a.n() > 10 || b.n() > 10) throw CapabilityError("radial oracle supports n <= 10");
  if (!dipole_allowed(a, b, axis)) return 0.0;
  return radial_dipole_integral(a.n(), a.l(), b.n(), b.l()) * angular_factor(a, b, axis) *
         constants.qa0();
}

DipoleTable::DipoleTable(std::vector<BasisState> basis, const ConstantsSet& constants, Source source)
    : basis_(std::move(basis)), source_(source) {
  const std::size_t n = basis_.size();
  for (auto& m : d_) m.assign(n * n, 0.0);
  std::map<std::tuple<int, int, int, int>, double> radial_cache;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (Axis axis : kAxes) {
        const BasisState& a = basis_[i];
        const BasisState& b = basis_[j];
        if (!dipole_allowed(a, b, axis)) continue;
        double v;
        if (source_ == Source::analytic) {
          v = dipole_element(a, b, axis, constants).value;
        } else {
          if (a.n() > 10 || b.n() > 10) throw CapabilityError("radial oracle supports n <= 10");
          const auto key = std::make_tuple(a.n(), a.l(), b.n(), b.l());
          auto it = radial_cache.find(key);
          if (it == radial_cache.end())
            it = radial_cache.emplace(key, radial_dipole_integral(a.n(), a.l(), b.n(), b.l())).first;
          v = it->second * angular_factor(a, b, axis) * constants.qa0();
        }
        d_[index(axis)][i * n + j] = v;
        d_[index(axis)][j * n + i] = v;
      }
}

std::size_t DipoleTable::index_of(const BasisState& s) const {
  auto it = std::find(basis_.begin(), basis_.end(), s);
  if (it == basis_.end()) throw DomainError("state " + s.label() + " not in basis");
  return static_cast<std::size_t>(it - basis_.begin());
}

std::vector<double> level_energies(const std::vector<BasisState>& basis,
                                   const ConstantsSet& constants) {
  std::vector<double> out;
  out.reserve(basis.size());
  for (const auto& s : basis) out.push_back(level_energy(s.n(), constants));
  return out;
}

}  // namespace starkcp
