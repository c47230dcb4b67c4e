#include "susyqm/json_io.hpp"

#include <cmath>

namespace susyqm {

namespace {

double need_number(const json& j, const char* key, const char* context) {
  if (!j.contains(key) || !j[key].is_number())
    throw ConfigError(std::string(context) + ": missing or non-numeric field '" +
                      key + "'");
  return j[key].get<double>();
}

double opt_number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number())
    throw ConfigError(std::string("field '") + key + "' must be numeric");
  return j[key].get<double>();
}

std::vector<double> need_array(const json& j, const char* key,
                               const char* context) {
  if (!j.contains(key) || !j[key].is_array())
    throw ConfigError(std::string(context) + ": missing or non-array field '" +
                      key + "'");
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number())
      throw ConfigError(std::string(context) + ": field '" + key +
                        "' must contain numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

const json& need_params(const json& j, const char* context) {
  if (!j.contains("params") || !j["params"].is_object())
    throw ConfigError(std::string(context) + ": missing 'params' object");
  return j["params"];
}

std::string need_family(const json& j, const char* context) {
  if (!j.contains("family") || !j["family"].is_string())
    throw ConfigError(std::string(context) + ": missing 'family' string");
  return j["family"].get<std::string>();
}

}  // namespace

json superpotential_to_json(const Superpotential& w) {
  json p;
  if (const auto* lin = std::get_if<LinearW>(&w.variant())) {
    p["slope_half"] = lin->slope_half;
    p["offset"] = lin->offset;
  } else if (const auto* li = std::get_if<LinearInverseW>(&w.variant())) {
    p["k"] = li->k;
    p["l"] = li->l;
    p["z"] = li->z;
    p["t"] = li->t;
  } else if (const auto* iso = std::get_if<IsotonicShiftedW>(&w.variant())) {
    p["r"] = iso->r;
    p["s"] = iso->s;
    p["eta"] = iso->eta;
    if (iso->offset != 0.0) p["offset"] = iso->offset;
  } else {
    const auto& tab = std::get<TabulatedW>(w.variant());
    p["xs"] = tab.xs;
    p["ws"] = tab.ws;
  }
  return json{{"family", w.family_name()}, {"params", p}};
}

Superpotential superpotential_from_json(const json& j) {
  const std::string family = need_family(j, "superpotential");
  const json& p = need_params(j, "superpotential");
  if (family == "linear")
    return Superpotential::linear(need_number(p, "slope_half", "linear"),
                                  opt_number(p, "offset", 0.0));
  if (family == "linear_inverse")
    return Superpotential::linear_inverse(
        need_number(p, "k", "linear_inverse"),
        need_number(p, "l", "linear_inverse"),
        need_number(p, "z", "linear_inverse"),
        need_number(p, "t", "linear_inverse"));
  if (family == "isotonic")
    return Superpotential::isotonic_shifted(
        need_number(p, "r", "isotonic"), need_number(p, "s", "isotonic"),
        need_number(p, "eta", "isotonic"), opt_number(p, "offset", 0.0));
  if (family == "tabulated")
    return Superpotential::tabulated(need_array(p, "xs", "tabulated"),
                                     need_array(p, "ws", "tabulated"));
  throw ConfigError("superpotential: unknown family '" + family + "'");
}

PotentialSpec potential_from_json(const json& j) {
  if (j.is_object() && j.contains("const")) {
    const double v = need_number(j, "const", "potential");
    return {[v](double) { return v; }, Domain::full_line(),
            "constant " + std::to_string(v)};
  }
  const std::string family = need_family(j, "potential");
  if (family == "urabe") {
    const json& p = need_params(j, "potential");
    const double zeta = need_number(p, "zeta", "urabe");
    const double omega = need_number(p, "omega", "urabe");
    if (zeta == 0.0) throw ConfigError("urabe: zeta must be nonzero");
    return {[zeta, omega](double x) { return urabe_potential(zeta, omega, x); },
            urabe_domain(zeta), "urabe well"};
  }
  if (family == "isotonic" && need_params(j, "potential").contains("omega_cap")) {
    const json& p = j["params"];
    const double omega_cap = need_number(p, "omega_cap", "isotonic");
    const double eta = need_number(p, "eta", "isotonic");
    if (eta == 0.0) throw ConfigError("isotonic: eta must be nonzero");
    return {[omega_cap, eta](double x) {
              return isotonic_potential(omega_cap, eta, x);
            },
            Domain::half_line_left(-1.0 / eta), "isotonic well"};
  }
  // Remaining families are function specs evaluated directly.
  const Superpotential w = superpotential_from_json(j);
  return {[w](double x) { return w.value(x); }, w.natural_domain(),
          w.family_name() + " profile"};
}

json dirac_params_to_json(const DiracParams& p) {
  json j;
  if (const auto* lin = std::get_if<LinearW>(&p.scalar_s.variant());
      lin && lin->slope_half == 0.0)
    j["S"] = json{{"const", lin->offset}};
  else
    j["S"] = superpotential_to_json(p.scalar_s);
  j["W"] = superpotential_to_json(p.pseudo_w);
  j["m0c2"] = p.rest_mass_energy;
  j["gamma"] = p.gamma;
  j["delta"] = p.delta;
  return j;
}

DiracParams dirac_params_from_json(const json& j) {
  DiracParams p;
  if (j.contains("S")) {
    const json& s = j["S"];
    if (s.is_object() && s.contains("const"))
      p.scalar_s = Superpotential::constant(need_number(s, "const", "S"));
    else
      p.scalar_s = superpotential_from_json(s);
  }
  if (j.contains("W")) p.pseudo_w = superpotential_from_json(j["W"]);
  p.rest_mass_energy = opt_number(j, "m0c2", 1.0);
  if (p.rest_mass_energy < 0.0)
    throw ConfigError("dirac: field 'm0c2' must be nonnegative");
  p.gamma = opt_number(j, "gamma", 0.0);
  if (j.contains("delta") && j["delta"].is_string()) {
    if (j["delta"].get<std::string>() != "perfect_square")
      throw ConfigError("dirac: field 'delta' must be a number or "
                        "\"perfect_square\"");
    p.delta = p.perfect_square_delta();
  } else {
    p.delta = opt_number(j, "delta", 0.0);
  }
  return p;
}

json vector_potential_to_json(const VectorPotential& a) {
  json p;
  if (const auto* lin = std::get_if<LinearField>(&a.variant())) {
    p["lambda"] = lin->lambda;
    p["mu"] = lin->mu;
  } else if (const auto* iso = std::get_if<IsochronousField>(&a.variant())) {
    p["p"] = iso->p;
    p["q"] = iso->q;
    p["r"] = iso->r;
  } else if (const auto* it = std::get_if<IsotonicField>(&a.variant())) {
    p["r"] = it->r;
    p["s"] = it->s;
    p["eta"] = it->eta;
    p["upsilon"] = it->upsilon;
  } else {
    const auto& tab = std::get<TabulatedField>(a.variant());
    p["xs"] = tab.xs;
    p["as"] = tab.as;
  }
  if (a.positivity_overridden()) p["override_positivity"] = true;
  return json{{"family", a.family_name()}, {"params", p}};
}

VectorPotential vector_potential_from_json(const json& j) {
  const std::string family = need_family(j, "vector potential");
  const json& p = need_params(j, "vector potential");
  const bool override_flag = p.contains("override_positivity") &&
                             p["override_positivity"].is_boolean() &&
                             p["override_positivity"].get<bool>();
  if (family == "linear")
    return VectorPotential::linear(need_number(p, "lambda", "linear field"),
                                   opt_number(p, "mu", 0.0), override_flag);
  if (family == "isochronous")
    return VectorPotential::isochronous(
        need_number(p, "p", "isochronous field"),
        need_number(p, "q", "isochronous field"), opt_number(p, "r", 0.0),
        override_flag);
  if (family == "isotonic")
    return VectorPotential::isotonic(need_number(p, "r", "isotonic field"),
                                     need_number(p, "s", "isotonic field"),
                                     need_number(p, "eta", "isotonic field"),
                                     opt_number(p, "upsilon", 0.0),
                                     override_flag);
  if (family == "tabulated")
    return VectorPotential::tabulated(need_array(p, "xs", "tabulated field"),
                                      need_array(p, "as", "tabulated field"));
  throw ConfigError("vector potential: unknown family '" + family + "'");
}

json planar_config_to_json(const PlanarConfig& cfg) {
  return json{{"vector_potential", vector_potential_to_json(cfg.vector_potential)},
              {"k", cfg.wavenumber_k},
              {"S0", cfg.s0},
              {"gamma", cfg.gamma},
              {"delta", cfg.delta},
              {"vF", cfg.fermi_velocity}};
}

PlanarConfig planar_config_from_json(const json& j) {
  PlanarConfig cfg;
  if (j.contains("vector_potential"))
    cfg.vector_potential = vector_potential_from_json(j["vector_potential"]);
  cfg.wavenumber_k = opt_number(j, "k", 0.0);
  cfg.s0 = opt_number(j, "S0", 0.0);
  cfg.gamma = opt_number(j, "gamma", 0.0);
  cfg.delta = opt_number(j, "delta", 0.0);
  cfg.fermi_velocity = opt_number(j, "vF", 1.0);
  if (!(cfg.fermi_velocity > 0.0))
    throw ConfigError("planar: field 'vF' must be positive");
  return cfg;
}

}  // namespace susyqm
