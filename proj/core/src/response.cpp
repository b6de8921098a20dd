#include "starkcp/response.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "starkcp/error.hpp"

namespace starkcp {

Polarizability Polarizability::isotropic(double alpha, double field) {
  Polarizability p;
  for (std::size_t i = 0; i < 3; ++i) p.components[i][i] = alpha;
  p.field_at_atom = field;
  return p;
}

namespace {

void check_denominators(std::span<const DressedState> excited, std::span<const double> energies) {
  if (excited.size() != energies.size())
    throw DomainError("one excitation energy per intermediate state required");
  for (std::size_t s = 0; s < energies.size(); ++s)
    if (energies[s] == 0.0)
      throw DegeneracyError("vanishing excitation energy for intermediate state " + excited[s].label());
}

// d[s][axis] = <ground| d_axis |s> and its transpose (real elements, so equal).
using ElementSet = std::vector<std::array<OrderSeries, 3>>;

ElementSet ground_elements(const DressedState& ground, std::span<const DressedState> excited,
                           const DipoleTable& table) {
  ElementSet out(excited.size());
  for (std::size_t s = 0; s < excited.size(); ++s)
    for (Axis a : kAxes) out[s][index(a)] = matrix_element(ground, excited[s], table, a);
  return out;
}

}  // namespace

Polarizability polarizability(const DressedState& ground, std::span<const DressedState> excited,
                              std::span<const double> excitation_energies, const DipoleTable& table) {
  check_denominators(excited, excitation_energies);
  const ElementSet d0 = ground_elements(ground, excited, table);
  std::vector<std::array<OrderSeries, 3>> ds0(excited.size());
  for (std::size_t s = 0; s < excited.size(); ++s)
    for (Axis a : kAxes) ds0[s][index(a)] = matrix_element(excited[s], ground, table, a);

  Polarizability out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double total = 0.0;
      for (std::size_t s = 0; s < excited.size(); ++s) {
        const double num = sum(truncated_product(d0[s][i], ds0[s][j])) +
                           sum(truncated_product(d0[s][j], ds0[s][i]));
        total += num / excitation_energies[s];
      }
      out.components[i][j] = total;
    }
  return out;
}

double scalar_polarizability(const DressedState& ground, std::span<const DressedState> manifold,
                             std::span<const double> excitation_energies, const DipoleTable& table) {
  check_denominators(manifold, excitation_energies);
  double total = 0.0;
  for (std::size_t s = 0; s < manifold.size(); ++s) {
    double sq = 0.0;
    for (Axis a : kAxes)
      sq += sum(truncated_product(matrix_element(ground, manifold[s], table, a),
                                  matrix_element(manifold[s], ground, table, a)));
    total += 2.0 * sq / (3.0 * excitation_energies[s]);
  }
  return total;
}

Hyperpolarizability hyperpolarizability(const DressedState& ground, std::span<const DressedState> excited,
                                        std::span<const double> excitation_energies,
                                        const DipoleTable& table) {
  check_denominators(excited, excitation_energies);
  const std::size_t ns = excited.size();
  const ElementSet d0 = ground_elements(ground, excited, table);
  ElementSet ds0(ns);
  for (std::size_t s = 0; s < ns; ++s)
    for (Axis a : kAxes) ds0[s][index(a)] = matrix_element(excited[s], ground, table, a);
  // dts[t * ns + s][axis]
  std::vector<std::array<OrderSeries, 3>> dts(ns * ns);
  for (std::size_t t = 0; t < ns; ++t)
    for (std::size_t s = 0; s < ns; ++s)
      for (Axis a : kAxes) dts[t * ns + s][index(a)] = matrix_element(excited[t], excited[s], table, a);

  auto term = [&](std::size_t t, std::size_t s, std::size_t a, std::size_t b, std::size_t c) {
    return sum(truncated_product(truncated_product(d0[t][a], dts[t * ns + s][b]), ds0[s][c]));
  };

  Hyperpolarizability out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        double total = 0.0;
        for (std::size_t t = 0; t < ns; ++t)
          for (std::size_t s = 0; s < ns; ++s) {
            const double num = term(t, s, i, j, k) + term(t, s, i, k, j) + term(t, s, j, k, i) +
                               term(t, s, j, i, k) + term(t, s, k, i, j) + term(t, s, k, j, i);
            total += num / (excitation_energies[t] * excitation_energies[s]);
          }
        out.components[i][j][k] = total;
      }
  return out;
}

double alpha33_closed_form(double epsilon, const ConstantsSet& k) {
  const double qa0 = k.qa0();
  const double x = qa0 * epsilon / k.E1;
  const double base = -std::ldexp(1.0, 18) * qa0 * qa0 / (std::pow(3.0, 11) * k.E1);
  return base + 16.0 * base * x * x;
}

double beta333_closed_form(double epsilon, const ConstantsSet& k) {
  const double qa0 = k.qa0();
  const double q4 = (qa0 * qa0) * (qa0 * qa0);
  return std::ldexp(1.0, 38) * q4 * epsilon / (std::pow(3.0, 22) * k.E1 * k.E1 * k.E1);
}

double hydrogen_scalar_polarizability(const ConstantsSet& constants) {
  const auto basis = hydrogen_basis(2);
  const DipoleTable table(basis, constants);
  const DressedState ground = undressed(BasisState(1, 0, 0), basis);
  std::vector<DressedState> manifold;
  std::vector<double> energies;
  for (int m : {0, 1, -1}) {
    manifold.push_back(undressed(BasisState(2, 1, m), basis));
    energies.push_back(level_energy(2, constants) - level_energy(1, constants));
  }
  return scalar_polarizability(ground, manifold, energies, table);
}

Polarizability hydrogen_polarizability(double epsilon, const ConstantsSet& constants) {
  const auto basis = hydrogen_basis(2);
  const DipoleTable table(basis, constants);
  const double gap = level_energy(2, constants) - level_energy(1, constants);

  const DressedState ground = dress_hydrogen_ground(epsilon, constants);
  const std::vector<DressedState> branches = {
      dress_hydrogen_excited(epsilon, StarkBranch::minus, constants),
      dress_hydrogen_excited(epsilon, StarkBranch::plus, constants)};
  const std::vector<double> branch_gaps(branches.size(), gap);
  Polarizability out = polarizability(ground, branches, branch_gaps, table);

  const DressedState bare_ground = undressed(BasisState(1, 0, 0), basis);
  const std::vector<DressedState> transverse = {undressed(BasisState(2, 1, 1), basis),
                                                undressed(BasisState(2, 1, -1), basis)};
  const std::vector<double> transverse_gaps(transverse.size(), gap);
  const Polarizability t = polarizability(bare_ground, transverse, transverse_gaps, table);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out.components[i][j] += t.components[i][j];
  out.field_at_atom = epsilon;
  return out;
}

Hyperpolarizability hydrogen_hyperpolarizability(double epsilon, const ConstantsSet& constants) {
  const auto basis = hydrogen_basis(2);
  const DipoleTable table(basis, constants);
  const double gap = level_energy(2, constants) - level_energy(1, constants);
  const DressedState ground = dress_hydrogen_ground(epsilon, constants);
  const std::vector<DressedState> branches = {
      dress_hydrogen_excited(epsilon, StarkBranch::minus, constants),
      dress_hydrogen_excited(epsilon, StarkBranch::plus, constants)};
  const std::vector<double> gaps(branches.size(), gap);
  Hyperpolarizability out = hyperpolarizability(ground, branches, gaps, table);
  out.field_at_atom = epsilon;
  return out;
}

Polarizability hydrogen_polarizability_closed_form(double epsilon, const ConstantsSet& constants) {
  Polarizability p = Polarizability::isotropic(alpha33_closed_form(0.0, constants), epsilon);
  p.components[2][2] = alpha33_closed_form(epsilon, constants);
  return p;
}

Hyperpolarizability hydrogen_hyperpolarizability_closed_form(double epsilon,
                                                             const ConstantsSet& constants) {
  Hyperpolarizability b;
  b.components[2][2][2] = beta333_closed_form(epsilon, constants);
  b.field_at_atom = epsilon;
  return b;
}

nlohmann::json to_json(const Polarizability& alpha) {
  nlohmann::json j;
  j["kind"] = "polarizability";
  j["unit"] = "C m^2 / V";
  j["field_at_atom_V_per_m"] = alpha.field_at_atom;
  nlohmann::json comps = nlohmann::json::object();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      comps["alpha_" + std::to_string(i + 1) + std::to_string(k + 1)] =
          alpha.components[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  j["components"] = comps;
  return j;
}

nlohmann::json to_json(const Hyperpolarizability& beta) {
  nlohmann::json j;
  j["kind"] = "hyperpolarizability";
  j["unit"] = "C m^3 / V^2";
  j["field_at_atom_V_per_m"] = beta.field_at_atom;
  nlohmann::json comps = nlohmann::json::object();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l)
        comps["beta_" + std::to_string(i + 1) + std::to_string(k + 1) + std::to_string(l + 1)] =
            beta.components[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]
                           [static_cast<std::size_t>(l)];
  j["components"] = comps;
  return j;
}

}  // namespace starkcp
