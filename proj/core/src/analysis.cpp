#include "aqft/analysis.hpp"

#include "aqft/layering.hpp"
#include "aqft/qft.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

namespace aqft {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

TCountBreakdown closed_form_tcount(int n, double epsilon, int b) {
  if (b < 3) throw Error("closed form needs b >= 3");
  TCountBreakdown t;
  t.full_width = 4.0 * b * (n - b + 3);
  t.tail = 2.0 * (b + 1) * (b - 2);
  t.synthesis = 2.3 * (b - 2) * std::log2(2.0 * b / epsilon);
  t.linear = n;
  t.slack = 3.0 * b;
  t.leading = 4.0 * n * std::log2(n / epsilon);
  return t;
}

TDepthBreakdown closed_form_tdepth(int n, double epsilon, int b) {
  if (b < 3) throw Error("closed form needs b >= 3");
  TDepthBreakdown d;
  d.adders = 1.0 * b * (n - b + 1) + 2.0 * b + (b + 1) * (b - 2) / 2.0;
  d.synthesis = 1.15 * std::log2(2.0 * b / epsilon);
  d.linear = n;
  d.slack = 2;
  d.leading = n * std::log2(n / epsilon);
  return d;
}

Baseline baseline_ref10(int n, double epsilon) {
  const double l = n * std::log2(n / epsilon);
  return {8 * l, 2 * l};
}

double synthesis_leaf_error(double epsilon, int b) { return epsilon / (2.0 * b); }

CostReport census(const Circuit& c, double synth_eps) {
  if (!(synth_eps > 0)) throw Error("census: synth_eps must be positive");
  CostReport r;
  std::map<std::string, std::set<int>> adder_qubits;
  for (const auto& g : c.gates()) {
    r.by_kind[to_string(g.kind)] += 1;
    r.by_tag[g.tag] += 1;
    r.t_gates += g.is_t_like();
    r.synth_leaves += g.kind == GateKind::SynthRz;
    if (g.tag.rfind("adder:", 0) == 0) adder_qubits[g.tag].insert(g.qubits.begin(), g.qubits.end());
  }
  // an adder of width w touches x, y and w-1 carries
  for (const auto& [tag, qs] : adder_qubits) r.inventory[(static_cast<int>(qs.size()) + 1) / 3] += 1;
  const auto model = SynthModel::for_leaf_error(synth_eps);
  r.leaf_cost = model.leaf_cost;
  r.t_count = r.t_gates + r.synth_leaves * r.leaf_cost;
  const auto dag = layer_dag(c);
  r.t_depth_exact = static_cast<int>(t_depth(c, dag));
  r.t_depth = t_depth(c, dag, model);
  for (const auto& reg : c.registers()) r.register_widths[reg.name] = static_cast<int>(reg.qubits.size());
  return r;
}

CostReport census(const AqftArtifact& a) {
  const auto& p = a.params;
  CostReport r = census(a.circuit, synthesis_leaf_error(p.epsilon, p.b));
  if (p.b >= 3) {
    r.closed_form_tcount = closed_form_tcount(p.n, p.epsilon, p.b);
    r.closed_form_tdepth = closed_form_tdepth(p.n, p.epsilon, p.b);
  }
  r.baseline = baseline_ref10(p.n, p.epsilon);
  return r;
}

OperatorMatrix reference_operator(const AqftParams& p) {
  OperatorMatrix u = dft_matrix(p.n);
  if (p.final_swaps) return u;
  const std::size_t dim = std::size_t{1} << p.n;
  OperatorMatrix r(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t rev = 0;
    for (int bit = 0; bit < p.n; ++bit)
      if (k >> bit & 1) rev |= std::size_t{1} << (p.n - 1 - bit);
    r.row(rev) = u.row(k);
  }
  return r;
}

CostReport closed_form_report(const AqftParams& p) {
  CostReport r;
  r.has_census = false;
  if (p.b >= 3) {
    r.closed_form_tcount = closed_form_tcount(p.n, p.epsilon, p.b);
    r.closed_form_tdepth = closed_form_tdepth(p.n, p.epsilon, p.b);
  }
  r.baseline = baseline_ref10(p.n, p.epsilon);
  return r;
}

EffectiveOperator artifact_operator(const AqftArtifact& a, const MeasurementPolicy& policy, int width_cap) {
  EffectiveOperatorOptions opts;
  opts.policy = policy;
  opts.width_cap = width_cap;
  for (const auto& reg : a.circuit.registers())
    if (reg.role == RegisterRole::Catalyst)
      opts.expected_outputs[reg.name] = psi_state(static_cast<int>(reg.qubits.size()));
  return effective_operator(a.circuit, "data", zero_inputs(a.circuit, "data"), opts);
}

ErrorBudget formula_budget(const AqftParams& p) {
  ErrorBudget e;
  e.pruning_bound = p.prune ? kPi * (p.n - p.b + 3) / std::ldexp(1.0, p.b) : 0.0;
  e.synthesis_bound = p.prune ? p.epsilon * (p.b - 2) / p.b : 0.0;
  e.total_bound = e.pruning_bound + e.synthesis_bound;
  e.epsilon_bound = p.epsilon * (kPi + 1);
  return e;
}

ErrorBudget error_budget(const AqftArtifact& a, const ErrorBudgetOptions& opts) {
  const auto& p = a.params;
  ErrorBudget e = formula_budget(p);
  e.ledger_bound = a.ledger.bound();
  for (const auto& r : a.ledger.entries) e.ledger_angle_bound += std::abs(r.angle.to_radians());
  if (opts.simulate) {
    if (p.n > opts.width_cap)
      throw Error("error_budget: n = " + std::to_string(p.n) + " exceeds the width cap " +
                  std::to_string(opts.width_cap) + "; use a smaller n or a larger epsilon");
    auto op = artifact_operator(a, opts.policy, opts.width_cap);
    e.exact_error = spectral_distance(op.matrix, reference_operator(p), true);
    e.restoration = op.min_restoration();
  }
  return e;
}

std::string csv_header() {
  return "n,epsilon,b,t_count,t_gates,synth_leaves,t_depth,t_depth_exact,"
         "cf_t_adders,cf_t_synthesis,cf_t_linear,cf_t_slack,cf_t_total,t_leading,"
         "cf_d_adders,cf_d_synthesis,cf_d_linear,cf_d_slack,cf_d_total,d_leading,"
         "baseline_t_count,baseline_t_depth,census_t_ratio,cf_t_ratio,cf_d_ratio,baseline_t_ratio,baseline_d_ratio,"
         "ledger_bound,pruning_bound,synthesis_bound,total_bound,epsilon_bound,exact_error";
}

std::string csv_row(const AqftParams& p, const CostReport& r, const ErrorBudget& e) {
  std::ostringstream os;
  os << p.n << ',' << num(p.epsilon) << ',' << p.b << ',';
  if (r.has_census)
    os << num(r.t_count) << ',' << r.t_gates << ',' << r.synth_leaves << ',' << num(r.t_depth) << ','
       << r.t_depth_exact << ',';
  else
    os << ",,,,,";
  if (r.closed_form_tcount) {
    const auto& t = *r.closed_form_tcount;
    os << num(t.adders()) << ',' << num(t.synthesis) << ',' << num(t.linear) << ',' << num(t.slack) << ','
       << num(t.deterministic()) << ',' << num(t.leading) << ',';
  } else {
    os << ",,,,,,";
  }
  if (r.closed_form_tdepth) {
    const auto& d = *r.closed_form_tdepth;
    os << num(d.adders) << ',' << num(d.synthesis) << ',' << num(d.linear) << ',' << num(d.slack) << ','
       << num(d.deterministic()) << ',' << num(d.leading) << ',';
  } else {
    os << ",,,,,,";
  }
  const Baseline base = r.baseline.value_or(baseline_ref10(p.n, p.epsilon));
  const double lead_t = 4.0 * p.n * std::log2(p.n / p.epsilon);
  const double lead_d = p.n * std::log2(p.n / p.epsilon);
  os << num(base.t_count) << ',' << num(base.t_depth) << ',';
  os << (r.has_census ? num(r.t_count / lead_t) : "") << ',';
  os << (r.closed_form_tcount ? num(r.closed_form_tcount->deterministic() / lead_t) : "") << ',';
  os << (r.closed_form_tdepth ? num(r.closed_form_tdepth->deterministic() / lead_d) : "") << ',';
  os << num(base.t_count / lead_t) << ',' << num(base.t_depth / lead_d) << ',';
  os << (r.has_census ? num(e.ledger_bound) : "") << ',' << num(e.pruning_bound) << ',' << num(e.synthesis_bound) << ','
     << num(e.total_bound) << ',' << num(e.epsilon_bound) << ',';
  if (e.exact_error) os << num(*e.exact_error);
  return os.str();
}

}  // namespace aqft
