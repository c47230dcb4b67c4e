// Spectral workbench CLI: samples partner potentials, solves 1D spectra,
// inspects quasi-Hamiltonian blocks, reduces the planar magnetic problem,
// and runs the built-in verification suite.
//
// Exit codes: 0 success, 1 verification-check failure, 2 configuration
// error, 3 numerical failure.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "susyqm/analytic.hpp"
#include "susyqm/csv.hpp"
#include "susyqm/dirac.hpp"
#include "susyqm/eigensolver.hpp"
#include "susyqm/json_io.hpp"
#include "susyqm/planar.hpp"
#include "susyqm/susy_checks.hpp"
#include "susyqm/verify.hpp"

namespace {

using susyqm::json;

constexpr int kExitCheckFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

// ---------------------------------------------------------------------------
// "family:a,b,..." or "family:key=val,..." -> {"family":..., "params":{...}}

json spec_string_to_json(const std::string& text,
                         const std::vector<std::pair<std::string,
                                                     std::vector<std::string>>>&
                             families) {
  const auto colon = text.find(':');
  const std::string family = text.substr(0, colon);
  json params = json::object();

  const std::vector<std::string>* positional = nullptr;
  for (const auto& [name, keys] : families)
    if (name == family) positional = &keys;
  if (!positional)
    throw susyqm::ConfigError("unknown family '" + family + "' in spec '" +
                              text + "'");

  std::size_t next_positional = 0;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      std::string key;
      std::string value = item;
      const auto eq = item.find('=');
      if (eq != std::string::npos) {
        key = item.substr(0, eq);
        value = item.substr(eq + 1);
      } else {
        if (next_positional >= positional->size())
          throw susyqm::ConfigError("too many values for family '" + family +
                                    "' in spec '" + text + "'");
        key = (*positional)[next_positional++];
      }
      try {
        std::size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        params[key] = parsed;
      } catch (const std::exception&) {
        throw susyqm::ConfigError("field '" + key + "' of family '" + family +
                                  "' is not a number: '" + value + "'");
      }
    }
  }
  return json{{"family", family}, {"params", params}};
}

susyqm::Superpotential superpotential_from_string(const std::string& text) {
  if (text.rfind("const:", 0) == 0)
    return susyqm::superpotential_from_json(json{
        {"family", "linear"},
        {"params",
         json{{"slope_half", 0.0},
              {"offset", std::stod(text.substr(6))}}}});
  static const std::vector<std::pair<std::string, std::vector<std::string>>>
      families = {
          {"linear", {"slope_half", "offset"}},
          {"linear_inverse", {"k", "l", "z", "t"}},
          {"isotonic", {"r", "s", "eta", "offset"}},
      };
  return susyqm::superpotential_from_json(spec_string_to_json(text, families));
}

susyqm::PotentialSpec potential_from_string(const std::string& text) {
  if (text == "ho")
    return {[](double x) { return x * x; },
            susyqm::Domain::full_line(), "harmonic well"};
  if (text == "box")
    return {[](double) { return 0.0; }, susyqm::Domain::full_line(),
            "flat box"};
  if (text.rfind("const:", 0) == 0) {
    const double v = std::stod(text.substr(6));
    return {[v](double) { return v; }, susyqm::Domain::full_line(),
            "constant"};
  }
  static const std::vector<std::pair<std::string, std::vector<std::string>>>
      families = {
          {"linear", {"slope_half", "offset"}},
          {"linear_inverse", {"k", "l", "z", "t"}},
          {"isotonic", {"omega_cap", "eta"}},
          {"urabe", {"zeta", "omega"}},
      };
  return susyqm::potential_from_json(spec_string_to_json(text, families));
}

// A pair spec is a superpotential family or the closed isochronous form.
susyqm::PartnerPair pair_from_string(const std::string& text, double lambda) {
  if (text.rfind("isochronous:", 0) == 0) {
    static const std::vector<std::pair<std::string, std::vector<std::string>>>
        fam = {{"isochronous", {"z"}}};
    const json j = spec_string_to_json(text, fam);
    if (!j["params"].contains("z"))
      throw susyqm::ConfigError("isochronous pair: missing field 'z'");
    return susyqm::isochronous_pair(j["params"]["z"].get<double>());
  }
  return susyqm::partner_potentials(superpotential_from_string(text), lambda);
}

susyqm::VectorPotential field_from_string(const std::string& text) {
  static const std::vector<std::pair<std::string, std::vector<std::string>>>
      families = {
          {"linear", {"lambda", "mu"}},
          {"isochronous", {"p", "q", "r"}},
          {"isotonic", {"r", "s", "eta", "upsilon"}},
      };
  return susyqm::vector_potential_from_json(spec_string_to_json(text, families));
}

// ---------------------------------------------------------------------------

struct GridArgs {
  std::optional<double> xmin, xmax;
  std::optional<int> n;
  std::optional<int> levels;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--xmin", xmin, "left end of the solve box");
    cmd->add_option("--xmax", xmax, "right end of the solve box");
    cmd->add_option("-n,--n", n, "number of interior grid nodes");
    cmd->add_option("-m,--levels", levels, "number of levels to compute");
  }

  void overlay(const json& grid_cfg) {
    if (!xmin && grid_cfg.contains("a")) xmin = grid_cfg["a"].get<double>();
    if (!xmax && grid_cfg.contains("b")) xmax = grid_cfg["b"].get<double>();
    if (!n && grid_cfg.contains("n")) n = grid_cfg["n"].get<int>();
    if (!levels && grid_cfg.contains("m")) levels = grid_cfg["m"].get<int>();
  }

  susyqm::SolveConfig solve_config() const {
    susyqm::SolveConfig cfg;
    if (xmax) cfg.box = *xmax;
    if (n) cfg.n = *n;
    if (levels) cfg.m = *levels;
    return cfg;
  }

  // Sampling grid for a domain (partners command; no solver involved).
  susyqm::Grid sampling_grid(const susyqm::Domain& dom) const {
    const double b = xmax.value_or(12.0);
    const int nodes = n.value_or(3000);
    if (dom.kind == susyqm::BoundaryKind::half_line_left) {
      const double eps = 1e-3 * (b - dom.left);
      return susyqm::Grid(dom.left + eps, b, nodes, eps);
    }
    if (dom.kind == susyqm::BoundaryKind::custom)
      return susyqm::Grid(xmin.value_or(dom.left), xmax.value_or(dom.right),
                          nodes);
    return susyqm::Grid(xmin.value_or(-12.0), b, nodes);
  }
};

void emit(const std::string& payload, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out)
    throw susyqm::ConfigError("cannot open output file '" + output_path + "'");
  out << payload;
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || path.find('/', dot) != std::string::npos)
    return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in)
    throw susyqm::ConfigError("cannot read config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw susyqm::ConfigError("config file '" + path +
                              "' is not valid JSON: " + e.what());
  }
  return j;
}

std::string solve_note(const susyqm::SolveOutcome& out) {
  char buf[160];
  if (out.guard_epsilon > 0.0)
    std::snprintf(buf, sizeof buf,
                  "# grid: [%.6g, %.6g], n=%d, guard eps=%.3g (%d halvings, "
                  "drift %.3g)\n",
                  out.grid.a, out.grid.b, out.grid.n, out.guard_epsilon,
                  out.guard_halvings, out.guard_drift);
  else
    std::snprintf(buf, sizeof buf, "# grid: [%.6g, %.6g], n=%d\n", out.grid.a,
                  out.grid.b, out.grid.n);
  return buf;
}

// ---------------------------------------------------------------------------

int cmd_partners(const std::string& w_spec, double lambda, const GridArgs& ga,
                 const std::string& output) {
  const auto w = superpotential_from_string(w_spec);
  const auto pair = susyqm::partner_potentials(w, lambda);
  const auto grid = ga.sampling_grid(pair.domain);
  emit(susyqm::partners_to_csv(pair, grid), output);
  return 0;
}

int cmd_spectrum(const std::string& potential_spec,
                 const std::string& pair_spec, double lambda,
                 bool check_pairing, const GridArgs& ga,
                 const std::string& output) {
  if (potential_spec.empty() == pair_spec.empty())
    throw susyqm::ConfigError(
        "spectrum: pass exactly one of --potential or --pair");
  susyqm::SolveConfig cfg = ga.solve_config();

  if (!potential_spec.empty()) {
    const auto spec = potential_from_string(potential_spec);
    susyqm::SolveOutcome out;
    if (ga.xmin && ga.xmax) {
      out.grid = susyqm::Grid(*ga.xmin, *ga.xmax, cfg.n);
      out.spectrum = susyqm::eigen_lowest(
          susyqm::discretize(spec.fn, out.grid), cfg.m, cfg.eig);
    } else {
      out = susyqm::solve_potential(spec.fn, spec.domain, cfg);
    }
    std::string payload = solve_note(out) + susyqm::spectrum_to_csv(out.spectrum);
    if (out.spectrum.levels() >= 2) {
      payload += "# spacing:";
      for (const double gap : susyqm::level_spacing(out.spectrum))
        payload += " " + susyqm::format_value(gap);
      payload += "\n";
    }
    emit(payload, output);
    return 0;
  }

  const auto pair = pair_from_string(pair_spec, lambda);
  const auto ps = susyqm::solve_pair(pair, cfg);
  std::string payload_plus =
      "# member=plus\n" + solve_note(ps.plus) +
      susyqm::spectrum_to_csv(ps.plus.spectrum);
  std::string payload_minus =
      "# member=minus\n" + solve_note(ps.minus) +
      susyqm::spectrum_to_csv(ps.minus.spectrum);
  std::string report;
  if (check_pairing) {
    const auto rep = susyqm::susy_pairing_check(ps.plus.spectrum,
                                                ps.minus.spectrum, 1e-2);
    report = "# pairing: " + rep.describe() + "\n# pairing: " +
             (rep.paired ? "pass" : "FAIL") + "\n";
  }
  if (output.empty()) {
    std::cout << payload_plus << payload_minus << report;
  } else {
    emit(payload_plus, with_suffix(output, ".plus"));
    emit(payload_minus, with_suffix(output, ".minus"));
    if (!report.empty()) std::cout << report;
  }
  if (check_pairing && report.find("FAIL") != std::string::npos)
    return kExitCheckFailure;
  return 0;
}

susyqm::DiracParams dirac_from_flags(const std::string& s_spec,
                                     const std::string& w_spec,
                                     double gamma, const std::string& delta,
                                     double m0c2) {
  susyqm::DiracParams p;
  p.scalar_s = superpotential_from_string(s_spec);
  p.pseudo_w = superpotential_from_string(w_spec);
  p.gamma = gamma;
  p.rest_mass_energy = m0c2;
  if (p.rest_mass_energy < 0.0)
    throw susyqm::ConfigError("quasi: field 'm0c2' must be nonnegative");
  if (delta == "perfect_square") {
    p.delta = p.perfect_square_delta();
  } else {
    try {
      p.delta = std::stod(delta);
    } catch (const std::exception&) {
      throw susyqm::ConfigError(
          "quasi: field 'delta' must be a number or 'perfect_square'");
    }
  }
  return p;
}

int cmd_quasi(const susyqm::DiracParams& params, bool convergence,
              const GridArgs& ga, const std::string& output) {
  std::string payload;
  const auto dom = params.pseudo_w.natural_domain();
  const auto grid = ga.sampling_grid(dom);

  const auto q = susyqm::quasi_elements(params);
  payload += "offdiagonal_residual: " +
             susyqm::format_value(susyqm::offdiagonal_residual(q, grid)) + "\n";

  const susyqm::Grid small(grid.a, grid.b, std::min(grid.n, 200));
  const auto op = susyqm::build_dirac(params, small);
  payload += "hermiticity_defect(n=" + std::to_string(small.n) +
             "): " + susyqm::format_value(op.hermiticity_defect()) + "\n";

  if (convergence) {
    payload += "n,h,residual\n";
    std::vector<double> hs, rs;
    for (const int n : {200, 400, 800}) {
      const susyqm::Grid g(grid.a, grid.b, n);
      const double r = susyqm::quasi_matrix_residual(params, g);
      hs.push_back(g.h());
      rs.push_back(r);
      payload += std::to_string(n) + "," + susyqm::format_value(g.h()) + "," +
                 susyqm::format_value(r) + "\n";
    }
    const double o1 = std::log(rs[0] / rs[1]) / std::log(hs[0] / hs[1]);
    const double o2 = std::log(rs[1] / rs[2]) / std::log(hs[1] / hs[2]);
    payload += "fitted_order: " + susyqm::format_value(o1) + " " +
               susyqm::format_value(o2) + "\n";
    if (!(o1 >= 1.9 && o2 >= 1.9)) {
      emit(payload, output);
      return kExitCheckFailure;
    }
  }
  emit(payload, output);
  return 0;
}

int cmd_planar(const susyqm::PlanarConfig& cfg, const GridArgs& ga,
               const std::string& output) {
  const auto red = susyqm::reduce_planar(cfg.vector_potential, cfg.wavenumber_k);
  std::string payload;
  payload += "# family=" + cfg.vector_potential.family_name() +
             " k=" + susyqm::format_value(cfg.wavenumber_k) +
             " vF=" + susyqm::format_value(cfg.fermi_velocity) + "\n";
  payload += std::string("# zero_mode_side=") +
             (red.zero_mode == susyqm::ZeroModeSide::plus
                  ? "plus"
                  : red.zero_mode == susyqm::ZeroModeSide::minus ? "minus"
                                                                 : "none") +
             "\n";
  {
    const auto q = susyqm::planar_quasi_elements(cfg);
    const auto grid = ga.sampling_grid(red.pair.domain);
    payload += "# offdiagonal_residual=" +
               susyqm::format_value(susyqm::offdiagonal_residual(q, grid)) +
               "\n";
  }
  if (!red.has_discrete_spectrum) {
    payload += "# discrete_spectrum=none (free case)\n";
    emit(payload, output);
    return 0;
  }

  const auto ps = susyqm::solve_pair(red.pair, ga.solve_config());
  payload += "# member=plus\n" + solve_note(ps.plus) +
             susyqm::spectrum_to_csv(ps.plus.spectrum);
  payload += "# member=minus\n" + solve_note(ps.minus) +
             susyqm::spectrum_to_csv(ps.minus.spectrum);

  payload += "# dirac energies from plus member (E, -E):\n";
  payload += "n,E_plus,E_minus\n";
  for (int i = 0; i < ps.plus.spectrum.levels(); ++i) {
    double eps = ps.plus.spectrum.eigenvalues[static_cast<std::size_t>(i)];
    // The zero mode may round below zero by the discretization error; only
    // a clearly negative level is a real failure.
    if (eps < 0.0 && eps > -1e-2) eps = 0.0;
    const auto [ep, em] = susyqm::dirac_energy(eps, cfg.fermi_velocity);
    payload += std::to_string(i) + "," + susyqm::format_value(ep) + "," +
               susyqm::format_value(em) + "\n";
  }
  emit(payload, output);
  return 0;
}

int cmd_verify(const std::string& only, int threads, bool as_json,
               const std::string& output) {
  susyqm::VerifyOptions opts;
  opts.only = only;
  opts.threads = threads;
  const auto report = susyqm::run_verification(opts);
  if (as_json) {
    emit(report.to_json().dump(2) + "\n", output);
  } else {
    std::ostringstream os;
    report.print(os, true);
    emit(os.str(), output);
  }
  return report.all_passed() ? 0 : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "susyqm workbench: partner potentials, 1D spectra, quasi-Hamiltonian "
      "blocks, planar reduction, verification suite"};
  app.require_subcommand(0, 1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON config file (keys: grid, command, params, output); "
                 "flags override file values");

  // partners ----------------------------------------------------------------
  auto* partners = app.add_subcommand(
      "partners", "sample V+- of a superpotential on a grid (CSV x,v_plus,v_minus)");
  std::string w_spec;
  double lambda = 0.0;
  GridArgs pa_grid;
  std::string output;
  partners->add_option("--w", w_spec,
                       "superpotential spec, e.g. linear:1,0 | "
                       "linear_inverse:0,1,-1,0 | isotonic:1.4,1,1 | const:0.5");
  partners->add_option("--lambda", lambda, "energy offset added to both members");
  pa_grid.add_flags(partners);
  partners->add_option("-o,--output", output, "write CSV here instead of stdout");

  // spectrum ----------------------------------------------------------------
  auto* spectrum = app.add_subcommand(
      "spectrum", "lowest levels of a potential or of a partner pair (CSV)");
  std::string potential_spec, pair_spec;
  bool check_pairing = false;
  GridArgs sp_grid;
  spectrum->add_option("--potential", potential_spec,
                       "potential spec: ho | box | const:c | "
                       "isotonic:omega_cap=2,eta=1 | urabe:zeta=1,omega=2 | "
                       "linear:... (profile)");
  spectrum->add_option("--pair", pair_spec,
                       "pair spec: superpotential family or isochronous:z=-1");
  spectrum->add_option("--lambda", lambda, "energy offset for --pair");
  spectrum->add_flag("--check-pairing", check_pairing,
                     "append a SUSY pairing report");
  sp_grid.add_flags(spectrum);
  spectrum->add_option("-o,--output", output, "write CSV here instead of stdout");

  // quasi ---------------------------------------------------------------
  auto* quasi = app.add_subcommand(
      "quasi", "off-diagonal residual and discretization checks of the "
               "squared-Hamiltonian blocks");
  std::string s_spec = "const:0", wq_spec = "linear:1,0", delta_str = "0";
  double gamma = 0.0, m0c2 = 1.0;
  bool convergence = false;
  GridArgs qa_grid;
  quasi->add_option("--S", s_spec, "scalar potential spec (const:c, linear:...)");
  quasi->add_option("--W", wq_spec, "pseudoscalar superpotential spec");
  quasi->add_option("--gamma", gamma, "linear polynomial coefficient");
  quasi->add_option("--delta", delta_str, "constant term, or 'perfect_square'");
  quasi->add_option("--m0c2", m0c2, "rest-mass energy");
  quasi->add_flag("--convergence", convergence,
                  "residual-vs-h table over N in {200,400,800} with fitted order");
  qa_grid.add_flags(quasi);
  quasi->add_option("-o,--output", output, "write report here instead of stdout");

  // planar --------------------------------------------------------------
  auto* planar = app.add_subcommand(
      "planar", "reduce the planar magnetic problem at fixed k and solve the "
                "1D members");
  std::string a_spec = "linear:1,0";
  double k = 0.0, vf = 1.0, s0 = 0.0, pgamma = 0.0, pdelta = 0.0;
  GridArgs pl_grid;
  planar->add_option("--A", a_spec,
                     "field spec: linear:lambda,mu | isochronous:p,q,r | "
                     "isotonic:r,s,eta,upsilon");
  planar->add_option("--k", k, "conserved wavenumber");
  planar->add_option("--vF", vf, "Fermi velocity for the energy map");
  planar->add_option("--S0", s0, "constant scalar mass term");
  planar->add_option("--gamma", pgamma, "polynomial coefficient");
  planar->add_option("--delta", pdelta, "polynomial constant");
  pl_grid.add_flags(planar);
  planar->add_option("-o,--output", output, "write report here instead of stdout");

  // verify-paper ----------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify-paper", "run the verification suite (analytic spectra vs the "
                      "numerical oracle)");
  std::string only;
  int threads = 0;
  bool as_json = false;
  verify->add_option("--only", only, "substring filter on check names");
  verify->add_option("--threads", threads,
                     "worker threads (default: WORKBENCH_THREADS or cores)");
  verify->add_flag("--json", as_json, "machine-readable report");
  verify->add_option("-o,--output", output, "write report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitConfig;
  }

  try {
    const json cfg = load_config(config_path);
    const json params = cfg.contains("params") ? cfg["params"] : json::object();
    const json grid_cfg = cfg.contains("grid") ? cfg["grid"] : json::object();
    if (output.empty() && cfg.contains("output"))
      output = cfg["output"].get<std::string>();

    std::string command;
    if (app.get_subcommands().size() == 1)
      command = app.get_subcommands().front()->get_name();
    else if (cfg.contains("command"))
      command = cfg["command"].get<std::string>();
    if (command.empty())
      throw susyqm::ConfigError(
          "no command given (subcommand or config key 'command')");

    if (command == "partners") {
      pa_grid.overlay(grid_cfg);
      if (w_spec.empty() && params.contains("w")) {
        const auto w = susyqm::superpotential_from_json(params["w"]);
        if (params.contains("lambda")) lambda = params["lambda"].get<double>();
        const auto pair = susyqm::partner_potentials(w, lambda);
        emit(susyqm::partners_to_csv(pair, pa_grid.sampling_grid(pair.domain)),
             output);
        return 0;
      }
      if (w_spec.empty())
        throw susyqm::ConfigError("partners: missing --w (or config params.w)");
      return cmd_partners(w_spec, lambda, pa_grid, output);
    }
    if (command == "spectrum") {
      sp_grid.overlay(grid_cfg);
      if (potential_spec.empty() && pair_spec.empty() &&
          params.contains("potential")) {
        const auto spec = susyqm::potential_from_json(params["potential"]);
        susyqm::SolveOutcome out =
            susyqm::solve_potential(spec.fn, spec.domain, sp_grid.solve_config());
        emit(solve_note(out) + susyqm::spectrum_to_csv(out.spectrum), output);
        return 0;
      }
      return cmd_spectrum(potential_spec, pair_spec, lambda, check_pairing,
                          sp_grid, output);
    }
    if (command == "quasi") {
      qa_grid.overlay(grid_cfg);
      susyqm::DiracParams p;
      if (!params.empty() && quasi->count("--S") == 0 &&
          quasi->count("--W") == 0)
        p = susyqm::dirac_params_from_json(params);
      else
        p = dirac_from_flags(s_spec, wq_spec, gamma, delta_str, m0c2);
      if (params.contains("convergence"))
        convergence = convergence || params["convergence"].get<bool>();
      return cmd_quasi(p, convergence, qa_grid, output);
    }
    if (command == "planar") {
      pl_grid.overlay(grid_cfg);
      susyqm::PlanarConfig pc;
      if (!params.empty() && planar->count("--A") == 0) {
        pc = susyqm::planar_config_from_json(params);
      } else {
        pc.vector_potential = field_from_string(a_spec);
        pc.wavenumber_k = k;
        pc.fermi_velocity = vf;
        pc.s0 = s0;
        pc.gamma = pgamma;
        pc.delta = pdelta;
        if (!(pc.fermi_velocity > 0.0))
          throw susyqm::ConfigError("planar: field 'vF' must be positive");
      }
      return cmd_planar(pc, pl_grid, output);
    }
    if (command == "verify-paper") {
      if (params.contains("only") && only.empty())
        only = params["only"].get<std::string>();
      return cmd_verify(only, threads, as_json, output);
    }
    throw susyqm::ConfigError("unknown command '" + command + "'");
  } catch (const susyqm::ConvergenceFailureError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const susyqm::NegativeEigenvalueError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const susyqm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}
