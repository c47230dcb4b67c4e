#include "susyqm/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

#include "susyqm/analytic.hpp"
#include "susyqm/csv.hpp"
#include "susyqm/dirac.hpp"
#include "susyqm/planar.hpp"
#include "susyqm/quasi.hpp"
#include "susyqm/susy_checks.hpp"

namespace susyqm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Every spectrum computed anywhere in the suite lands here so the
// certificate check can audit residuals and node counts afterwards.
struct CertificateLog {
  std::mutex mu;
  struct Entry {
    std::string origin;
    Spectrum spectrum;
  };
  std::vector<Entry> entries;

  void add(const std::string& origin, const Spectrum& s) {
    std::lock_guard<std::mutex> lock(mu);
    entries.push_back({origin, s});
  }
};

struct Ctx {
  const VerifyOptions* opts;
  CertificateLog* log;
};

SolveOutcome logged_solve(const Ctx& ctx, const std::string& origin,
                          const PotentialFn& v, const Domain& dom, int m) {
  SolveConfig cfg = ctx.opts->solve;
  cfg.m = m;
  SolveOutcome out = solve_potential(v, dom, cfg);
  ctx.log->add(origin, out.spectrum);
  return out;
}

PairSolve logged_pair(const Ctx& ctx, const std::string& origin,
                      const PartnerPair& pair, int m) {
  SolveConfig cfg = ctx.opts->solve;
  cfg.m = m;
  PairSolve ps = solve_pair(pair, cfg);
  ctx.log->add(origin + "/plus", ps.plus.spectrum);
  ctx.log->add(origin + "/minus", ps.minus.spectrum);
  return ps;
}

CheckRow value_row(std::string label, std::string provenance, double expected,
                   double observed, double tol, bool mandatory = true,
                   std::string note = {}) {
  CheckRow row;
  row.label = std::move(label);
  row.provenance = std::move(provenance);
  row.expected = expected;
  row.observed = observed;
  row.tolerance = tol;
  row.pass = std::abs(expected - observed) <= tol;
  row.mandatory = mandatory;
  row.note = std::move(note);
  return row;
}

CheckRow order_row(std::string label, double observed_order,
                   double required = 1.9) {
  CheckRow row;
  row.label = std::move(label);
  row.provenance = kProvenanceOracle;
  row.expected = required;
  row.observed = observed_order;
  row.tolerance = 0.0;
  row.pass = observed_order >= required;
  row.mandatory = true;
  row.note = "pass when observed >= expected";
  return row;
}

void finish(CheckResult& r) {
  r.passed = true;
  for (const auto& row : r.rows)
    if (row.mandatory && !row.pass) r.passed = false;
}

// ---------------------------------------------------------------------------

CheckResult check_harmonic(const Ctx& ctx) {
  CheckResult r;
  r.name = "harmonic-oscillator";
  const auto t0 = Clock::now();

  const auto red = linear_field_superpotential(1.0, 0.0, 0.0);  // omega = 2
  const PartnerPair pair = partner_potentials(red.w);
  const auto solved =
      logged_solve(ctx, r.name, pair.v_plus, pair.domain, 6);
  for (int n = 0; n < 6; ++n)
    r.rows.push_back(value_row("level " + std::to_string(n),
                               kProvenancePrinted, red.rule.energy(n),
                               solved.spectrum.eigenvalues[static_cast<std::size_t>(n)],
                               1e-3));

  r.seconds = seconds_since(t0);
  CheckRow timing;
  timing.label = "check runtime [s]";
  timing.provenance = kProvenanceOracle;
  timing.expected = 2.0;
  timing.observed = r.seconds;
  timing.pass = r.seconds < 2.0;
  timing.note = "pass when observed < expected";
  r.rows.push_back(timing);
  finish(r);
  return r;
}

CheckResult check_pairing(const Ctx& ctx) {
  CheckResult r;
  r.name = "susy-pairing";
  const auto t0 = Clock::now();

  struct Case {
    std::string label;
    Superpotential w;
  };
  const auto iso = isotonic_match(2.0, 1.0, MatchSign::upper);
  const std::vector<Case> cases = {
      {"W=x", Superpotential::linear(1.0, 0.0)},
      {"W=x-1/x", Superpotential::linear_inverse(0.0, 1.0, -1.0, 0.0)},
      {"W=isotonic(2,1)",
       Superpotential::isotonic_shifted(iso.r, iso.s, iso.eta)},
  };
  for (const auto& c : cases) {
    const PartnerPair pair = partner_potentials(c.w);
    const PairSolve ps = logged_pair(ctx, r.name + "/" + c.label, pair, 7);
    const PairingReport rep =
        susy_pairing_check(ps.plus.spectrum, ps.minus.spectrum, 1e-2);
    r.rows.push_back(value_row(c.label + " zero mode hosted on plus side",
                               kProvenanceOracle, 1.0,
                               rep.mode == PairingMode::zero_mode_plus ? 1.0
                                                                       : 0.0,
                               0.0, true, rep.describe()));
    r.rows.push_back(value_row(c.label + " max pairing deviation (6 levels)",
                               kProvenanceOracle, 0.0, rep.max_abs_deviation,
                               1e-2));
    r.rows.push_back(value_row(c.label + " |zero mode|", kProvenanceOracle,
                               0.0, std::abs(rep.zero_mode_value), 1e-4));
  }

  r.seconds = seconds_since(t0);
  finish(r);
  return r;
}

CheckResult check_isochronous(const Ctx& ctx) {
  CheckResult r;
  r.name = "isochronous-spacing";
  const auto t0 = Clock::now();

  for (const double z : {-1.0, 0.0, 1.0, 2.0}) {
    const PartnerPair pair = isochronous_pair(z);
    const PairSolve ps =
        logged_pair(ctx, r.name + "/z=" + std::to_string(z), pair, 7);
    for (const bool plus : {true, false}) {
      const Spectrum& spec = plus ? ps.plus.spectrum : ps.minus.spectrum;
      double worst = 0.0;
      for (const double gap : level_spacing(spec))
        worst = std::max(worst, std::abs(gap - 4.0));
      const std::string member = plus ? "plus" : "minus";
      r.rows.push_back(value_row(
          "z=" + std::to_string(static_cast<int>(z)) + " " + member +
              " member max |spacing-4| (6 gaps)",
          kProvenanceOracle, 0.0, worst, 2e-2));
    }
  }

  r.seconds = seconds_since(t0);
  finish(r);
  return r;
}

CheckResult check_quantization(const Ctx& ctx) {
  CheckResult r;
  r.name = "quantization-constraint";
  const auto t0 = Clock::now();

  // Half-line oracles for the two isochronous-pair members at z = -1 and
  // the regular member at z = 0.
  const Domain half = Domain::half_line_left(0.0);
  const auto pot_x2m1 = [](double x) { return x * x - 1.0; };
  const auto pot_sing = [](double x) { return x * x + 2.0 / (x * x) - 1.0; };
  const auto pot_x2p1 = [](double x) { return x * x + 1.0; };
  const auto pot_x2m3 = [](double x) { return x * x - 3.0; };
  const auto sa = logged_solve(ctx, r.name + "/x^2-1", pot_x2m1, half, 4);
  const auto sb = logged_solve(ctx, r.name + "/x^2+2x^-2-1", pot_sing, half, 4);
  const auto sc = logged_solve(ctx, r.name + "/x^2+1", pot_x2p1, half, 2);
  const auto sd = logged_solve(ctx, r.name + "/x^2-3", pot_x2m3, half, 2);

  const QuantizationInput qa{1.0, 0.0, -1.0, Branch::plus};
  const QuantizationInput qb{1.0, 2.0, -1.0, Branch::plus};
  for (int n = 0; n < 4; ++n) {
    r.rows.push_back(value_row(
        "regular branch vs half-line x^2-1, n=" + std::to_string(n),
        kProvenanceOracle,
        sa.spectrum.eigenvalues[static_cast<std::size_t>(n)],
        quantization_energy(qa, n), 1e-2));
    r.rows.push_back(value_row(
        "regular branch vs half-line x^2+2/x^2-1, n=" + std::to_string(n),
        kProvenanceOracle,
        sb.spectrum.eigenvalues[static_cast<std::size_t>(n)],
        quantization_energy(qb, n), 1e-2));
  }

  // Constraint round trip recovers the integer index exactly.
  double worst_roundtrip = 0.0;
  for (const Branch branch : {Branch::plus, Branch::minus})
    for (const double c : {0.0, 2.0, 6.0})
      for (const double v0 : {-1.0, 0.5})
        for (const int n : {0, 3, 7}) {
          const QuantizationInput q{1.0, c, v0, branch};
          const double back = quantization_constraint(q, quantization_energy(q, n));
          worst_roundtrip = std::max(worst_roundtrip, std::abs(back + n));
        }
  r.rows.push_back(value_row("constraint round trip max |lhs + n|",
                             kProvenanceOracle, 0.0, worst_roundtrip, 1e-12));

  // Branch negative control: the irregular branch must miss the oracle.
  const QuantizationInput qneg{1.0, 0.0, -1.0, Branch::minus};
  r.rows.push_back(value_row(
      "irregular branch deviation from oracle (negative control)",
      kProvenanceOracle, 2.0,
      std::abs(quantization_energy(qneg, 0) - sa.spectrum.eigenvalues[0]),
      0.05));

  // Side-by-side arbitration rows (informational): closed-form rule as
  // printed, the quoted special cases, and the numerical oracle.
  struct Arb {
    std::string label;
    double printed;
    double claimed;
    double oracle;
  };
  const std::vector<Arb> arbs = {
      {"z=0 plus member (x^2-1), n=0", isochronous_energy_formula(0, 0.0, +1),
       0.0, sa.spectrum.eigenvalues[0]},
      {"z=0 minus member (x^2+1), n=0", isochronous_energy_formula(0, 0.0, -1),
       2.0, sc.spectrum.eigenvalues[0]},
      {"z=-1 plus member (x^2-3), n=0",
       isochronous_energy_formula(0, -1.0, +1), -2.0,
       sd.spectrum.eigenvalues[0]},
      {"z=-1 minus member (x^2+2/x^2-1), n=0",
       isochronous_energy_formula(0, -1.0, -1), 0.0,
       sb.spectrum.eigenvalues[0]},
  };
  for (const auto& a : arbs) {
    r.rows.push_back(value_row(a.label + " [rule]", kProvenancePrinted,
                               a.oracle, a.printed, 5e-2, false,
                               "verdict vs numerical oracle"));
    r.rows.push_back(value_row(a.label + " [quoted]", kProvenanceInText,
                               a.oracle, a.claimed, 5e-2, false,
                               "verdict vs numerical oracle"));
  }
  // Domain arbitration for the regular member: full-line levels differ.
  {
    SolveConfig cfg = ctx.opts->solve;
    cfg.m = 1;
    const auto full =
        solve_potential(pot_x2m1, Domain::full_line(), cfg);
    ctx.log->add(r.name + "/x^2-1 full line", full.spectrum);
    r.rows.push_back(value_row("x^2-1 ground level on the full line",
                               kProvenanceOracle, 0.0,
                               full.spectrum.eigenvalues[0], 1e-3, false,
                               "half line adopted for singular members; both "
                               "reported for regular ones"));
  }

  r.seconds = seconds_since(t0);
  finish(r);
  return r;
}

Superpotential random_superpotential(std::mt19937& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int family = static_cast<int>(uni(rng) * 3.0);
  switch (family) {
    case 0:
      return Superpotential::linear(0.5 + 1.5 * uni(rng),
                                    -1.0 + 2.0 * uni(rng));
    case 1: {
      const double z = (uni(rng) < 0.5 ? -1.0 : 1.0) * (0.25 + 1.75 * uni(rng));
      return Superpotential::linear_inverse(-1.0 + 2.0 * uni(rng),
                                            0.5 + 1.5 * uni(rng), z,
                                            -1.0 + 2.0 * uni(rng));
    }
    default:
      return Superpotential::isotonic_shifted(0.5 + 1.5 * uni(rng),
                                              0.5 + 1.5 * uni(rng),
                                              0.5 + uni(rng));
  }
}

Grid grid_for(const Superpotential& w, int n = 257) {
  const Domain dom = w.natural_domain();
  if (dom.kind == BoundaryKind::half_line_left) {
    const double span = 12.0;
    return Grid(dom.left + 1e-3 * span, dom.left + span, n);
  }
  return Grid(-8.0, 8.0, n);
}

CheckResult check_offdiagonal(const Ctx&) {
  CheckResult r;
  r.name = "offdiagonal-vanishing";
  const auto t0 = Clock::now();

  std::mt19937 rng(7001u);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    DiracParams params;
    params.pseudo_w = random_superpotential(rng);
    params.scalar_s = Superpotential::constant(-2.0 + 4.0 * uni(rng));
    params.rest_mass_energy = 2.0 * uni(rng);
    params.gamma = 0.0;
    params.delta = -1.0 + 2.0 * uni(rng);
    const Grid grid = grid_for(params.pseudo_w);
    worst = std::max(worst,
                     offdiagonal_residual(quasi_elements(params), grid));
  }
  r.rows.push_back(value_row(
      "max off-diagonal residual, 10 random (W, S0), gamma=0",
      kProvenanceOracle, 0.0, worst, 0.0, true, "must vanish exactly"));

  r.seconds = seconds_since(t0);
  finish(r);
  return r;
}

CheckResult check_perfect_square(const Ctx&) {
  CheckResult r;
  r.name = "perfect-square-identity";
  const auto t0 = Clock::now();

  std::mt19937 rng(7002u);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    DiracParams params;
    params.pseudo_w = random_superpotential(rng);
    params.scalar_s = uni(rng) < 0.5
                          ? Superpotential::constant(-1.0 + 2.0 * uni(rng))
                          : Superpotential::linear(-0.5 + uni(rng),
                                                   -1.0 + 2.0 * uni(rng));
    params.rest_mass_energy = 2.0 * uni(rng);
    params.gamma = -1.5 + 3.0 * uni(rng);
    params.delta = params.perfect_square_delta();
    const QuasiElements q = quasi_elements(params);
    const QuasiElements ps = perfect_square_elements(params);
    const Grid grid = grid_for(params.pseudo_w);
    auto dev = [](Complex a, Complex b) {
      return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
    };
    const std::vector<std::pair<const BlockCoeff*, const BlockCoeff*>> blocks =
        {{&q.k11, &ps.k11},
         {&q.k12, &ps.k12},
         {&q.k21, &ps.k21},
         {&q.k22, &ps.k22}};
    for (int i = 0; i < grid.n; ++i) {
      const double x = grid.node(i);
      for (const auto& [qa, pb] : blocks) {
        worst = std::max(worst, dev(qa->c0_at(x), pb->c0_at(x)));
        worst = std::max(worst, dev(qa->c1_at(x), pb->c1_at(x)));
      }
    }
  }
  r.rows.push_back(value_row(
      "max pointwise |quasi - perfect-square| over 10 random configs",
      kProvenanceOracle, 0.0, worst, 1e-12));

  // Discrete residual convergence on a smooth configuration.
  DiracParams params;
  params.pseudo_w = Superpotential::linear(1.0, 0.0);
  params.scalar_s = Superpotential::linear(0.3, 0.0);
  params.rest_mass_energy = 1.0;
  params.gamma = 0.6;
  params.delta = 0.4;
  std::vector<double> hs, resids;
  for (const int n : {200, 400, 800}) {
    const Grid grid(-10.0, 10.0, n);
    hs.push_back(grid.h());
    resids.push_back(quasi_matrix_residual(params, grid));
  }
  const double order12 =
      std::log(resids[0] / resids[1]) / std::log(hs[0] / hs[1]);
  const double order23 =
      std::log(resids[1] / resids[2]) / std::log(hs[1] / hs[2]);
  r.rows.push_back(order_row("K vs polynomial-in-H order, N 200->400", order12));
  r.rows.push_back(order_row("K vs polynomial-in-H order, N 400->800", order23));

  r.seconds = seconds_since(t0);
  finish(r);
  return r;
}

CheckResult check_intertwining(const Ctx&) {
  CheckResult r;
  r.name = "intertwining-residual";
  const auto t0 = Clock::now();

  const Superpotential w = Superpotential::linear(1.0, 0.0);
  std::vector<double> hs, resids;
  for (const int n : {200, 400, 800}) {
    const Grid grid(-10.0, 10.0, n);
    hs.push_back(grid.h());
    resids.push_back(intertwining_residual(w, grid));
  }
  r.rows.push_back(order_row("intertwining order, N 200->400",
                             std::log(resids[0] / resids[1]) /
                                 std::log(hs[0] / hs[1])));
  r.rows.push_back(order_row("intertwining order, N 400->800",
                             std::log(resids[1] / resids[2]) /
                                 std::log(hs[1] / hs[2])));

  // The constant superpotential commutes exactly.
  const Grid grid(-10.0, 10.0, 300);
  r.rows.push_back(value_row("constant W residual", kProvenanceOracle, 0.0,
                             intertwining_residual(Superpotential::constant(0.7),
                                                   grid),
                             1e-12));

  r.seconds = seconds_since(t0);
  finish(r);
  return r;
}

CheckResult check_isotonic_match(const Ctx&) {
  CheckResult r;
  r.name = "isotonic-matching";
  const auto t0 = Clock::now();

  const std::vector<std::pair<double, double>> combos = {
      {1.0, 1.0}, {2.0, 1.0}, {4.0, 0.5}};
  for (const auto& [omega_cap, eta] : combos) {
    const IsotonicMatch m = isotonic_match(omega_cap, eta, MatchSign::upper);
    const PartnerPair pair = partner_potentials(
        Superpotential::isotonic_shifted(m.r, m.s, m.eta));
    const double pole = -1.0 / eta;
    double worst = 0.0;
    const int samples = 1000;
    const double lo = pole + 0.1, hi = 4.0;
    for (int i = 0; i < samples; ++i) {
      const double x = lo + (hi - lo) * (i + 0.5) / samples;
      const double lhs = pair.v_minus(x) + m.lambda_shift;
      const double rhs = isotonic_potential(omega_cap, eta, x);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    r.rows.push_back(value_row(
        "Omega=" + std::to_string(omega_cap) + ", eta=" + std::to_string(eta) +
            " max |v_minus + Lambda - isotonic| (1000 pts)",
        kProvenanceOracle, 0.0, worst, 1e-12));
  }

  r.seconds = seconds_since(t0);
  finish(r);
  return r;
}

CheckResult check_certificates(const Ctx& ctx) {
  CheckResult r;
  r.name = "eigensolver-certificates";
  const auto t0 = Clock::now();

  double worst_residual = 0.0;
  int node_count_violations = 0;
  int ordering_violations = 0;
  int audited = 0;
  {
    std::lock_guard<std::mutex> lock(ctx.log->mu);
    for (const auto& entry : ctx.log->entries) {
      const Spectrum& s = entry.spectrum;
      for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
        ++audited;
        if (k < s.residuals.size())
          worst_residual = std::max(worst_residual, s.residuals[k]);
        if (k < s.eigenvectors.size() && !s.eigenvectors[k].empty() &&
            interior_sign_changes(s.eigenvectors[k]) != static_cast<int>(k))
          ++node_count_violations;
        if (k > 0 && !(s.eigenvalues[k] > s.eigenvalues[k - 1]))
          ++ordering_violations;
      }
    }
  }
  r.rows.push_back(value_row("max eigenpair residual across suite",
                             kProvenanceOracle, 0.0, worst_residual, 1e-8));
  r.rows.push_back(value_row("Sturm node-count violations", kProvenanceOracle,
                             0.0, node_count_violations, 0.0));
  r.rows.push_back(value_row("strict level-ordering violations",
                             kProvenanceOracle, 0.0, ordering_violations, 0.0));
  r.rows.push_back(value_row("eigenpairs audited", kProvenanceOracle,
                             static_cast<double>(audited),
                             static_cast<double>(audited), 0.0, false));

  r.seconds = seconds_since(t0);
  finish(r);
  return r;
}

int resolve_threads(const VerifyOptions& opts) {
  if (opts.threads > 0) return opts.threads;
  if (const char* env = std::getenv("WORKBENCH_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::vector<std::string> verification_check_names() {
  return {"harmonic-oscillator",   "susy-pairing",
          "isochronous-spacing",   "quantization-constraint",
          "offdiagonal-vanishing", "perfect-square-identity",
          "intertwining-residual", "isotonic-matching",
          "eigensolver-certificates"};
}

VerificationReport run_verification(const VerifyOptions& opts) {
  const auto t0 = Clock::now();
  CertificateLog log;
  Ctx ctx{&opts, &log};

  using CheckFn = std::function<CheckResult(const Ctx&)>;
  std::vector<std::pair<std::string, CheckFn>> registry = {
      {"harmonic-oscillator", check_harmonic},
      {"susy-pairing", check_pairing},
      {"isochronous-spacing", check_isochronous},
      {"quantization-constraint", check_quantization},
      {"offdiagonal-vanishing", check_offdiagonal},
      {"perfect-square-identity", check_perfect_square},
      {"intertwining-residual", check_intertwining},
      {"isotonic-matching", check_isotonic_match},
  };

  std::vector<std::pair<std::size_t, CheckFn>> selected;
  for (std::size_t i = 0; i < registry.size(); ++i)
    if (opts.only.empty() || registry[i].first.find(opts.only) != std::string::npos)
      selected.push_back({i, registry[i].second});

  std::vector<CheckResult> results(registry.size());
  std::vector<bool> ran(registry.size(), false);

  const int threads =
      std::min<int>(resolve_threads(opts),
                    std::max<std::size_t>(selected.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t job = next.fetch_add(1);
      if (job >= selected.size()) return;
      const auto& [idx, fn] = selected[job];
      CheckResult res;
      try {
        res = fn(ctx);
      } catch (const std::exception& e) {
        res.name = registry[idx].first;
        res.passed = false;
        res.error = e.what();
      }
      results[idx] = std::move(res);
      ran[idx] = true;
    }
  };
  if (threads <= 1 || selected.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerificationReport report;
  for (std::size_t i = 0; i < registry.size(); ++i)
    if (ran[i]) report.checks.push_back(std::move(results[i]));

  const std::string cert_name = "eigensolver-certificates";
  if (opts.only.empty() || cert_name.find(opts.only) != std::string::npos) {
    report.checks.push_back(check_certificates(ctx));
  }

  report.total_seconds = seconds_since(t0);
  return report;
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["total_seconds"] = total_seconds;
  j["all_passed"] = all_passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["seconds"] = c.seconds;
    if (!c.error.empty()) cj["error"] = c.error;
    cj["rows"] = nlohmann::json::array();
    for (const auto& row : c.rows) {
      nlohmann::json rj;
      rj["label"] = row.label;
      rj["provenance"] = row.provenance;
      rj["expected"] = row.expected;
      rj["observed"] = row.observed;
      rj["tolerance"] = row.tolerance;
      rj["pass"] = row.pass;
      rj["mandatory"] = row.mandatory;
      if (!row.note.empty()) rj["note"] = row.note;
      cj["rows"].push_back(rj);
    }
    j["checks"].push_back(cj);
  }
  return j;
}

void VerificationReport::print(std::ostream& os, bool verbose) const {
  for (const auto& c : checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    char buf[40];
    std::snprintf(buf, sizeof buf, " (%.2f s)", c.seconds);
    os << buf << "\n";
    if (!c.error.empty()) os << "    error: " << c.error << "\n";
    if (!verbose) continue;
    for (const auto& row : c.rows) {
      os << "    " << (row.pass ? "[ok]  " : (row.mandatory ? "[BAD] " : "[--]  "))
         << row.label << ": expected " << format_value(row.expected) << " ("
         << row.provenance << "), observed " << format_value(row.observed)
         << ", tol " << format_value(row.tolerance);
      if (!row.mandatory) os << " [informational]";
      if (!row.note.empty()) os << " (" << row.note << ")";
      os << "\n";
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "total: %.2f s, ", total_seconds);
  os << buf << (all_passed() ? "all checks passed" : "CHECK FAILURES PRESENT")
     << "\n";
}

}  // namespace susyqm
