#pragma once

#include <string>

#include <json.hpp>

#include "susyqm/dirac.hpp"
#include "susyqm/planar.hpp"
#include "susyqm/potentials.hpp"
#include "susyqm/superpotential.hpp"

namespace susyqm {

using json = nlohmann::json;

// Superpotential <-> {"family": "linear"|"linear_inverse"|"isotonic"|
// "tabulated", "params": {...}} with the field names of each family
// (slope_half/offset, k/l/z/t, r/s/eta[/offset], xs/ws).
json superpotential_to_json(const Superpotential& w);
Superpotential superpotential_from_json(const json& j);

// A scalar potential specification. The same {"family", "params"} schema
// also covers direct potentials: family "urabe" (zeta/omega), and family
// "isotonic" with params omega_cap/eta selects the isotonic well rather
// than the superpotential of the same name (disambiguated by keys).
struct PotentialSpec {
  PotentialFn fn;
  Domain domain;
  std::string description;
};
PotentialSpec potential_from_json(const json& j);

// DiracParams <-> {"S": potential-spec | {"const": s0}, "W": spec,
// "m0c2": real, "gamma": real, "delta": real | "perfect_square"}.
json dirac_params_to_json(const DiracParams& p);
DiracParams dirac_params_from_json(const json& j);

// VectorPotential <-> {"family": "linear"|"isochronous"|"isotonic"|
// "tabulated", "params": {...}}.
json vector_potential_to_json(const VectorPotential& a);
VectorPotential vector_potential_from_json(const json& j);

// PlanarConfig <-> {"vector_potential": {...}, "k", "S0", "gamma",
// "delta", "vF"}.
json planar_config_to_json(const PlanarConfig& cfg);
PlanarConfig planar_config_from_json(const json& j);

}  // namespace susyqm
