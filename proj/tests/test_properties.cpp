// Randomized invariants. Seeds are fixed; each case draws its own stream.
#include <doctest.h>

#include <cmath>

#include "starkcp/fitting.hpp"
#include "starkcp/potentials.hpp"
#include "support.hpp"

using namespace starkcp;
using starkcp::test::Gen;
using starkcp::test::norm_defect;
using starkcp::test::rel;

namespace {
const ConstantsSet k = default_constants();
constexpr int kTrials = 60;

Vec3 rotate(const Vec3& v, const Vec3& axis, double angle) {
  // Rodrigues
  const double c = std::cos(angle), s = std::sin(angle);
  const double d = axis[0] * v[0] + axis[1] * v[1] + axis[2] * v[2];
  const Vec3 x = {axis[1] * v[2] - axis[2] * v[1], axis[2] * v[0] - axis[0] * v[2], axis[0] * v[1] - axis[1] * v[0]};
  Vec3 out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = v[i] * c + x[i] * s + axis[i] * d * (1.0 - c);
  return out;
}
}  // namespace

TEST_CASE("normalization is 1 + O(eps^4) for the ground state") {
  Gen gen(0x5eed0001);
  const double c4 = 1.0 + std::pow(3.0, 12) / 8192.0;
  for (int t = 0; t < kTrials; ++t) {
    const double eps = gen.log_uniform(1e6, 3e9);
    const double g = stark_gamma(k) * eps;
    const double defect = norm_defect(dress_hydrogen_ground(eps, k));
    CAPTURE(eps);
    CHECK(std::abs(defect / std::pow(g, 4) - c4) < 0.05 * c4);
  }
}

TEST_CASE("exchange symmetry of every pair potential") {
  Gen gen(0x5eed0002);
  const HydrogenContext ctx(k);
  for (int t = 0; t < kTrials; ++t) {
    const double ea = gen.field(), eb = gen.field(), r = gen.log_uniform(1e-8, 1e-4);
    const double lamb = gen.uniform(0.0, 1e-5) * k.q;
    const auto ab = breakdown(ctx, ea, eb, r, lamb), ba = breakdown(ctx, eb, ea, r, lamb);
    CHECK(ab.E4_classical.value == ba.E4_classical.value);
    CHECK(ab.U_cp_baseline.value == ba.U_cp_baseline.value);
    CHECK(ab.E6_correction.value == ba.E6_correction.value);
    CHECK(ab.E8_correction.value == ba.E8_correction.value);
    CHECK(ab.E_vacuum_estimate.value == ba.E_vacuum_estimate.value);
    CHECK(ab.E_quadrupole_estimate.value == ba.E_quadrupole_estimate.value);

    const auto pa = hydrogen_polarizability(ea, k), pb = hydrogen_polarizability(eb, k);
    CHECK(two_photon_far_zone(pa, pb, r, k).value == doctest::Approx(two_photon_far_zone(pb, pa, r, k).value).epsilon(1e-15));
    const auto ha = hydrogen_hyperpolarizability(ea, k), hb = hydrogen_hyperpolarizability(eb, k);
    CHECK(three_photon_far_zone(ha, hb, r, k).value == doctest::Approx(three_photon_far_zone(hb, ha, r, k).value).epsilon(1e-15));

    const Vec3 dA = {gen.uniform(-1, 1) * 1e-30, gen.uniform(-1, 1) * 1e-30, gen.uniform(-1, 1) * 1e-30};
    const Vec3 dB = {gen.uniform(-1, 1) * 1e-30, gen.uniform(-1, 1) * 1e-30, gen.uniform(-1, 1) * 1e-30};
    const Vec3 n = gen.unit_vector();
    const Vec3 rv = {n[0] * r, n[1] * r, n[2] * r}, rv_neg = {-rv[0], -rv[1], -rv[2]};
    CHECK(rel(classical_dipole_dipole(dA, dB, rv, k), classical_dipole_dipole(dB, dA, rv_neg, k)) < 1e-13);
  }
  for (int t = 0; t < 10; ++t) {
    const double kA = gen.log_uniform(1e6, 1e9), kB = gen.log_uniform(1e6, 1e9), r = gen.log_uniform(1e-7, 1e-4);
    CHECK(rel(cp_full_integral(1e-40, 2e-40, kA, kB, r, k), cp_full_integral(2e-40, 1e-40, kB, kA, r, k)) < 1e-13);
  }
}

TEST_CASE("power-law exponents by slope fits") {
  Gen gen(0x5eed0003);
  const HydrogenContext ctx(k);
  for (int t = 0; t < 12; ++t) {
    const double ea = gen.log_uniform(1e4, 1e9), eb = gen.log_uniform(1e4, 1e9);
    const double lo = gen.log_uniform(1e-8, 1e-6);
    const auto radii = fit::logspace(lo, lo * 100.0, 25);
    std::vector<double> e4, u, e6, e8;
    for (double r : radii) {
      const auto b = breakdown(ctx, ea, eb, r, 0.0);
      e4.push_back(b.E4_classical.value);
      u.push_back(b.U_cp_baseline.value);
      e6.push_back(b.E6_correction.value);
      e8.push_back(b.E8_correction.value);
    }
    CHECK(std::abs(fit::loglog_slope(radii, e4) + 3.0) < 1e-9);
    CHECK(std::abs(fit::loglog_slope(radii, u) + 7.0) < 1e-9);
    CHECK(std::abs(fit::loglog_slope(radii, e6) + 7.0) < 1e-9);
    CHECK(std::abs(fit::loglog_slope(radii, e8) + 11.0) < 1e-9);
  }
}

TEST_CASE("selection-rule zeros are exact") {
  Gen gen(0x5eed0004);
  const auto basis = hydrogen_basis(4);
  int zeros = 0;
  for (int t = 0; t < 400; ++t) {
    const auto& a = basis[static_cast<std::size_t>(gen.integer(0, static_cast<int>(basis.size()) - 1))];
    const auto& b = basis[static_cast<std::size_t>(gen.integer(0, static_cast<int>(basis.size()) - 1))];
    const Axis ax = kAxes[static_cast<std::size_t>(gen.integer(0, 2))];
    if (dipole_allowed(a, b, ax)) continue;
    ++zeros;
    CHECK(radial_integral_oracle(a, b, ax, k) == 0.0);
    CHECK(angular_factor(a, b, ax) == 0.0);
  }
  CHECK(zeros > 100);
}

TEST_CASE("beta is symmetric over all 27 index permutations") {
  Gen gen(0x5eed0005);
  for (int t = 0; t < 20; ++t) {
    const double eps = gen.field();
    const auto b = hydrogen_hyperpolarizability(eps, k);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t l = 0; l < 3; ++l) {
          const double v = b.components[i][j][l];
          CHECK(v == b.components[i][l][j]);
          CHECK(v == b.components[j][i][l]);
          CHECK(v == b.components[j][l][i]);
          CHECK(v == b.components[l][i][j]);
          CHECK(v == b.components[l][j][i]);
        }
    const auto a = hydrogen_polarizability(eps, k);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(a.components[i][j] == a.components[j][i]);
  }
}

TEST_CASE("classical dipole-dipole is rotation invariant") {
  Gen gen(0x5eed0006);
  for (int t = 0; t < kTrials; ++t) {
    const Vec3 dA = {gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1)};
    const Vec3 dB = {gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1)};
    const Vec3 n = gen.unit_vector();
    const double r = gen.log_uniform(1e-9, 1e-3);
    const Vec3 rv = {n[0] * r, n[1] * r, n[2] * r};
    const Vec3 axis = gen.unit_vector();
    const double angle = gen.uniform(0.0, 6.283185307179586);
    const double e0 = classical_dipole_dipole(dA, dB, rv, k);
    const double e1 = classical_dipole_dipole(rotate(dA, axis, angle), rotate(dB, axis, angle), rotate(rv, axis, angle), k);
    CHECK(std::abs(e0 - e1) <= 1e-12 * (std::abs(e0) + 1.0 / (4.0 * 3.141592653589793 * k.epsilon0 * r * r * r)));
  }
}

TEST_CASE("isotropic reduction of the M contraction") {
  Gen gen(0x5eed0007);
  for (int t = 0; t < kTrials; ++t) {
    const double a = gen.log_uniform(1e-42, 1e-38), b = gen.log_uniform(1e-42, 1e-38), r = gen.log_uniform(1e-7, 1e-3);
    const double e = two_photon_far_zone(Polarizability::isotropic(a), Polarizability::isotropic(b), r, k).value;
    CHECK(rel(e, cp_leading(a, b, r, k)) < 1e-14);
  }
}
