#include "aqft/analysis.hpp"
#include "aqft/pipeline.hpp"
#include "aqft/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace aqft;

namespace {

// Data-register width cap for operator extraction; AQFT_MATRIX_CAP overrides
// the built-in default, --matrix-cap overrides both.
int default_matrix_cap() {
  if (const char* env = std::getenv("AQFT_MATRIX_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(std::string("AQFT_MATRIX_CAP is not an integer: ") + env);
    }
  }
  return kDefaultMatrixCap;
}

struct Config {
  int n = 4;
  double epsilon = 0.25;
  int bits = 0;  // 0: derive from epsilon
  bool unpruned = false;
  bool figure_compat = false;
  bool snapshots = false;
  bool no_swaps = false;
  std::string uncompute = "measure";
  std::uint64_t seed = 1;
  std::optional<int> force_outcomes;
  int matrix_cap = 0;
  std::string out = "aqft";
  bool qasm = false;
  bool simulate = false;
  int n_min = 8, n_max = 24, n_step = 1;
  int census_max = 1024;  // larger n: closed-form columns only
  std::string input;
};

AqftParams params_of(const Config& cfg, bool allow_b3 = false) {
  AqftParams p;
  if (cfg.unpruned) {
    p = AqftParams::unpruned(cfg.n);
  } else if (cfg.bits > 0) {
    p = AqftParams::from_bits(cfg.n, cfg.bits);
  } else {
    p = AqftParams::from_epsilon(cfg.n, cfg.epsilon);
  }
  p.figure_compat = cfg.figure_compat || (allow_b3 && p.b == 3);
  p.keep_snapshots = cfg.snapshots;
  p.final_swaps = !cfg.no_swaps;
  if (cfg.uncompute == "coherent") p.style = UncomputeStyle::CoherentReference;
  p.validate();
  return p;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text;
  std::cout << "wrote " << path << "\n";
}

std::string coherent_qasm(AqftParams p) {
  p.style = UncomputeStyle::CoherentReference;
  p.keep_snapshots = false;
  return to_qasm(build_aqft(p).circuit);
}

int cmd_build(const Config& cfg) {
  const auto p = params_of(cfg);
  const auto a = build_aqft(p);
  write_file(cfg.out + ".json", to_json(a.circuit).dump(2) + "\n");
  write_file(cfg.out + ".sidecar.json", sidecar_json(a).dump(2) + "\n");
  for (const auto& [name, c] : a.snapshots) write_file(cfg.out + "." + name + ".json", to_json(c).dump(2) + "\n");
  if (cfg.qasm) write_file(cfg.out + ".qasm", coherent_qasm(p));
  const auto r = census(a);
  std::cout << "n=" << p.n << " b=" << p.b << " qubits=" << a.circuit.num_qubits()
            << " gates=" << a.circuit.gates().size() << " T=" << r.t_gates << " T-depth=" << r.t_depth_exact
            << "\n";
  return 0;
}

bool report(const std::string& what, bool ok) {
  std::cout << what << ": " << (ok ? "PASS" : "FAIL") << "\n";
  return ok;
}

int cmd_verify(const Config& cfg) {
  const auto p = params_of(cfg);
  const int cap = cfg.matrix_cap > 0 ? cfg.matrix_cap : default_matrix_cap();
  if (p.n > cap) {
    std::cerr << "error: n = " << p.n << " exceeds the matrix width cap " << cap
              << "; use a smaller n or a larger epsilon, or raise --matrix-cap / AQFT_MATRIX_CAP\n";
    return 2;
  }
  const auto a = build_aqft(p);
  ErrorBudgetOptions opts;
  opts.simulate = true;
  opts.width_cap = cap;
  opts.policy = cfg.force_outcomes ? MeasurementPolicy::forced_all(a.circuit, *cfg.force_outcomes)
                                   : MeasurementPolicy::seeded(cfg.seed);
  const auto e = error_budget(a, opts);
  const double tol = 1e-9;
  const double pi = std::numbers::pi;
  std::cout << "n=" << p.n << " b=" << p.b << " epsilon=" << p.epsilon << "\n"
            << "exact error      " << *e.exact_error << "\n"
            << "ledger bound     " << e.ledger_bound << " (" << a.ledger.entries.size() << " removed)\n"
            << "pruning bound    " << e.pruning_bound << "\n"
            << "synthesis bound  " << e.synthesis_bound << "\n"
            << "total bound      " << e.total_bound << "\n"
            << "eps(pi+1)        " << e.epsilon_bound << "\n"
            << "restoration      " << *e.restoration << "\n";
  bool ok = true;
  if (p.prune) {
    ok &= report("exact <= ledger <= pi(n-b+3)/2^b",
                 *e.exact_error <= e.ledger_bound + tol &&
                     e.ledger_bound <= pi * (p.n - p.b + 3) / std::ldexp(1.0, p.b) + tol);
    if (p.b >= 4) ok &= report("total <= eps(pi+1)", e.total_bound <= e.epsilon_bound + tol);
  } else {
    ok &= report("unpruned exact <= 1e-8", *e.exact_error <= 1e-8);
  }
  ok &= report("ancillas restored", *e.restoration >= 1 - 1e-9);
  if (p.style == UncomputeStyle::MeasureBased) {
    const auto op0 = artifact_operator(a, MeasurementPolicy::forced_all(a.circuit, 0), cap);
    const auto op1 = artifact_operator(a, MeasurementPolicy::forced_all(a.circuit, 1), cap);
    const double d = spectral_distance(op0.matrix, op1.matrix, false);
    std::cout << "outcome spread   " << d << "\n";
    ok &= report("outcome independence", d <= tol);
  }
  return ok ? 0 : 1;
}

void emit_rows(const Config& cfg, const std::vector<int>& ns) {
  std::ostringstream os;
  os << csv_header() << "\n";
  for (int n : ns) {
    Config c = cfg;
    c.n = n;
    const auto p = params_of(c, true);
    if (p.n > cfg.census_max) {
      os << csv_row(p, closed_form_report(p), formula_budget(p)) << "\n";
      continue;
    }
    const auto a = build_aqft(p);
    ErrorBudgetOptions opts;
    opts.simulate = cfg.simulate && p.n <= (cfg.matrix_cap > 0 ? cfg.matrix_cap : default_matrix_cap());
    opts.width_cap = cfg.matrix_cap > 0 ? cfg.matrix_cap : default_matrix_cap();
    opts.policy = MeasurementPolicy::seeded(cfg.seed);
    os << csv_row(p, census(a), error_budget(a, opts)) << "\n";
  }
  if (cfg.out == "-") {
    std::cout << os.str();
  } else {
    write_file(cfg.out, os.str());
  }
}

int cmd_export(const Config& cfg) {
  if (!cfg.input.empty()) {
    std::ifstream f(cfg.input);
    if (!f) throw Error("cannot read " + cfg.input);
    auto c = circuit_from_json(nlohmann::json::parse(f));
    if (!c.is_coherent()) c = with_coherent_uncompute(c);
    write_file(cfg.out + ".qasm", to_qasm(c));
    return 0;
  }
  auto p = params_of(cfg);
  p.style = UncomputeStyle::CoherentReference;
  const auto a = build_aqft(p);
  write_file(cfg.out + ".json", to_json(a.circuit).dump(2) + "\n");
  write_file(cfg.out + ".qasm", to_qasm(a.circuit));
  return 0;
}

void add_params(CLI::App* app, Config& cfg) {
  app->add_option("-n,--n", cfg.n, "data qubits")->check(CLI::Range(2, 1 << 16));
  app->add_option("-e,--epsilon", cfg.epsilon, "target accuracy, 0 < epsilon <= 1");
  app->add_option("-b,--bits", cfg.bits, "pruning bits (overrides --epsilon; epsilon becomes n/2^b)");
  app->add_flag("--unpruned", cfg.unpruned, "keep every rotation (b = n)");
  app->add_flag("--figure-compat", cfg.figure_compat, "admit b = 3");
  app->add_flag("--no-swaps", cfg.no_swaps, "omit the final swaps (bit-reversed output)");
  app->add_option("--uncompute", cfg.uncompute, "AND uncompute style")
      ->check(CLI::IsMember({"measure", "coherent"}));
  app->add_option("--seed", cfg.seed, "measurement seed");
  app->add_option("--matrix-cap", cfg.matrix_cap, "data width cap for operator extraction");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate QFT construction, verification and cost analysis"};
  app.require_subcommand(1);
  Config cfg;

  auto* build = app.add_subcommand("build", "build an artifact and write circuit JSON and sidecar");
  add_params(build, cfg);
  build->add_flag("--snapshots", cfg.snapshots, "also write intermediate stages");
  build->add_flag("--qasm", cfg.qasm, "also write OpenQASM (coherent uncompute)");
  build->add_option("-o,--out", cfg.out, "output path prefix");

  auto* verify = app.add_subcommand("verify", "simulate and check the error bounds");
  add_params(verify, cfg);
  verify->add_option("--force-outcomes", cfg.force_outcomes, "force every measurement to 0 or 1")
      ->check(CLI::IsMember({0, 1}));

  auto* cost = app.add_subcommand("cost", "CSV cost row for one (n, epsilon)");
  add_params(cost, cfg);
  cost->add_option("--census-max", cfg.census_max, "largest n that is built for an exact census");
  cost->add_flag("--simulate", cfg.simulate, "fill the exact-error column when the width allows");
  cost->add_option("-o,--out", cfg.out, "CSV path, - for stdout")->default_val("-");

  auto* sweep = app.add_subcommand("sweep", "CSV cost rows over a range of n");
  add_params(sweep, cfg);
  sweep->add_option("--n-min", cfg.n_min)->check(CLI::Range(2, 1 << 16));
  sweep->add_option("--n-max", cfg.n_max)->check(CLI::Range(2, 1 << 16));
  sweep->add_option("--n-step", cfg.n_step)->check(CLI::PositiveNumber);
  sweep->add_option("--census-max", cfg.census_max, "largest n that is built for an exact census");
  sweep->add_flag("--simulate", cfg.simulate, "fill the exact-error column when the width allows");
  sweep->add_option("-o,--out", cfg.out, "CSV path, - for stdout")->default_val("-");

  auto* exp = app.add_subcommand("export", "write OpenQASM for an artifact or a circuit JSON file");
  add_params(exp, cfg);
  exp->add_option("-i,--in", cfg.input, "circuit JSON to convert");
  exp->add_option("-o,--out", cfg.out, "output path prefix");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (cost->parsed()) {
      emit_rows(cfg, {cfg.n});
      return 0;
    }
    if (sweep->parsed()) {
      if (cfg.n_min > cfg.n_max) throw Error("--n-min exceeds --n-max");
      std::vector<int> ns;
      for (int n = cfg.n_min; n <= cfg.n_max; n += cfg.n_step) ns.push_back(n);
      emit_rows(cfg, ns);
      return 0;
    }
    if (exp->parsed()) return cmd_export(cfg);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
