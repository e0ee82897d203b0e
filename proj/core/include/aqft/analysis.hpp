#pragma once

#include "aqft/circuit.hpp"
#include "aqft/pipeline.hpp"
#include "aqft/statevec.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace aqft {

/// Closed-form T-count addends for the AQFT circuit.
struct TCountBreakdown {
  double full_width = 0;    // 4b(n-b+3), the (b+1)-qubit adders
  double tail = 0;          // 2(b+1)(b-2), adders of widths b..3
  double synthesis = 0;     // 2.3(b-2) log2(2b/eps)
  double linear = 0;        // nullifier and non-PGT T gates, n
  double slack = 0;         // O(b) band, taken as 3b
  double leading = 0;       // 4n log2(n/eps)

  double adders() const { return full_width + tail; }
  double deterministic() const { return adders() + synthesis + linear; }
};

struct TDepthBreakdown {
  double adders = 0;        // b(n-b+1) + 2b + (b+1)(b-2)/2
  double synthesis = 0;     // 1.15 log2(2b/eps)
  double linear = 0;        // n
  double slack = 0;         // O(1) band, taken as 2
  double leading = 0;       // n log2(n/eps)

  double deterministic() const { return adders + synthesis + linear; }
};

TCountBreakdown closed_form_tcount(int n, double epsilon, int b);
TDepthBreakdown closed_form_tdepth(int n, double epsilon, int b);

/// Leading-order figures of the reference construction: 8n log2(n/eps) and
/// 2n log2(n/eps). Leading order only.
struct Baseline {
  double t_count = 0;
  double t_depth = 0;
};
Baseline baseline_ref10(int n, double epsilon);

struct CostReport {
  bool has_census = true;  // false: closed form and baseline only
  std::map<std::string, int> by_kind;
  std::map<std::string, int> by_tag;
  int t_gates = 0;           // T + Tdg
  int synth_leaves = 0;
  double leaf_cost = 0;      // model T-count of one leaf
  double t_count = 0;        // t_gates + synth_leaves * leaf_cost
  int t_depth_exact = 0;     // layers holding a T/Tdg
  double t_depth = 0;        // with the synthesis model
  std::map<int, int> inventory;                  // adder width -> count, from tags
  std::map<std::string, int> register_widths;
  std::optional<TCountBreakdown> closed_form_tcount;
  std::optional<TDepthBreakdown> closed_form_tdepth;
  std::optional<Baseline> baseline;
};

/// Exact census of `c`; SynthRz leaves cost 1.15 log2(1/synth_eps) each.
CostReport census(const Circuit& c, double synth_eps);
/// Census plus closed form and baseline at the artifact's (n, eps, b).
CostReport census(const AqftArtifact& a);

/// Closed form and baseline at (n, eps, b) without building anything.
CostReport closed_form_report(const AqftParams& p);

/// Leaf error of one synthesized catalyst rotation: eps / (2b).
double synthesis_leaf_error(double epsilon, int b);

struct ErrorBudget {
  double ledger_bound = 0;        // sum |1 - e^{i theta}| over removed rotations
  double ledger_angle_bound = 0;  // sum |theta| over removed rotations
  double pruning_bound = 0;       // pi (n-b+3) / 2^b
  double synthesis_bound = 0;     // eps (b-2) / b
  double total_bound = 0;         // pruning + synthesis
  double epsilon_bound = 0;       // eps (pi + 1)
  std::optional<double> exact_error;
  std::optional<double> restoration;  // min over columns, when simulated
};

struct ErrorBudgetOptions {
  bool simulate = false;
  int width_cap = kDefaultMatrixCap;  // data-register width for the operator
  MeasurementPolicy policy = MeasurementPolicy::seeded(1);
};

/// Formula bounds only; the ledger fields stay zero.
ErrorBudget formula_budget(const AqftParams& p);

/// Bounds for `a`; with simulate set also the exact spectral distance to the
/// DFT. Throws when the data register exceeds the width cap.
ErrorBudget error_budget(const AqftArtifact& a, const ErrorBudgetOptions& opts = {});

/// The DFT, with rows bit-reversed when the artifact omits the final swaps.
OperatorMatrix reference_operator(const AqftParams& p);

/// Data-register operator of an artifact, catalysts checked for restoration.
EffectiveOperator artifact_operator(const AqftArtifact& a, const MeasurementPolicy& policy,
                                    int width_cap = kDefaultMatrixCap);

/// One CSV row per (n, eps).
std::string csv_header();
std::string csv_row(const AqftParams& p, const CostReport& r, const ErrorBudget& e);

}  // namespace aqft
