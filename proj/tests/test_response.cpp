#include <doctest.h>

#include <cmath>

#include "starkcp/error.hpp"
#include "starkcp/response.hpp"
#include "support.hpp"

using namespace starkcp;
using starkcp::test::rel;

namespace {
const ConstantsSet k = default_constants();
const double alpha0 = std::ldexp(1.0, 18) * k.qa0() * k.qa0() / (std::pow(3.0, 11) * -k.E1);
double u_of(double eps) { return k.qa0() * eps / k.E1; }
}  // namespace

TEST_CASE("undressed polarizability") {
  CHECK(rel(alpha33_closed_form(0.0, k), alpha0) < 1e-15);
  CHECK(rel(hydrogen_scalar_polarizability(k), alpha0) < 1e-13);
  const Polarizability a = hydrogen_polarizability(0.0, k);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j)
        CHECK(rel(a.components[i][j], alpha0) < 1e-13);
      else
        CHECK(a.components[i][j] == 0.0);
    }
}

TEST_CASE("printed closed forms") {
  const double eps = 1e8, u = u_of(eps);
  CHECK(rel(alpha33_closed_form(eps, k), alpha0 * (1.0 + 16.0 * u * u)) < 1e-14);
  const double q4 = std::pow(k.qa0(), 4);
  CHECK(rel(beta333_closed_form(eps, k), std::ldexp(1.0, 38) * q4 * eps / (std::pow(3.0, 22) * std::pow(k.E1, 3))) <
        1e-14);
  CHECK(beta333_closed_form(eps, k) < 0.0);
  CHECK(beta333_closed_form(0.0, k) == 0.0);
  const Polarizability c = hydrogen_polarizability_closed_form(eps, k);
  CHECK(c.components[2][2] == alpha33_closed_form(eps, k));
  CHECK(c.components[0][0] == alpha0);
  CHECK(c.field_at_atom == eps);
}

// Frozen values from an exact rational evaluation of the same assembly.
TEST_CASE("assembled alpha33 has field coefficient 23674160/531441") {
  for (double eps : {1e6, 1e7, 1e8}) {
    const double u = u_of(eps);
    const Polarizability a = hydrogen_polarizability(eps, k);
    const double coeff = (a.components[2][2] - alpha0) / (alpha0 * u * u);
    CAPTURE(eps);
    CHECK(rel(coeff, 23674160.0 / 531441.0) < 1e-4);
  }
}

TEST_CASE("assembled beta333 is -498673/32768 times the printed value") {
  for (double eps : {1e6, 1e7, 1e8}) {
    const Hyperpolarizability b = hydrogen_hyperpolarizability(eps, k);
    CAPTURE(eps);
    CHECK(rel(b.components[2][2][2] / beta333_closed_form(eps, k), -498673.0 / 32768.0) < 1e-9);
  }
}

TEST_CASE("hyperpolarizability vanishes without a field and is permutation symmetric") {
  const Hyperpolarizability zero = hydrogen_hyperpolarizability(0.0, k);
  for (const auto& plane : zero.components)
    for (const auto& row : plane)
      for (double v : row) CHECK(v == 0.0);

  const Hyperpolarizability b = hydrogen_hyperpolarizability(3e7, k);
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
  CHECK(b.components[2][2][2] != 0.0);
}

TEST_CASE("assembly preconditions") {
  const auto basis = hydrogen_basis(2);
  const DipoleTable table(basis, k);
  const DressedState g = undressed({1, 0, 0}, basis);
  const std::vector<DressedState> ex = {undressed({2, 1, 0}, basis)};
  const std::vector<double> zero = {0.0};
  const std::vector<double> two = {1.0, 2.0};
  CHECK_THROWS_AS(polarizability(g, ex, zero, table), DegeneracyError);
  CHECK_THROWS_AS(polarizability(g, ex, two, table), DomainError);
  CHECK_THROWS_AS(hyperpolarizability(g, ex, zero, table), DegeneracyError);
  CHECK_THROWS_AS(undressed({3, 0, 0}, basis), DomainError);
}

TEST_CASE("tensor JSON") {
  const auto j = to_json(hydrogen_polarizability(1e8, k));
  CHECK(j["components"].size() == 9);
  CHECK(j["components"].contains("alpha_33"));
  CHECK(j["field_at_atom_V_per_m"] == 1e8);
  const auto b = to_json(hydrogen_hyperpolarizability(1e8, k));
  CHECK(b["components"].size() == 27);
  CHECK(b["components"]["beta_333"].get<double>() != 0.0);
}
