#pragma once

#include "aqft/adders.hpp"
#include "aqft/circuit.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace aqft {

/// Smallest integer b with 2^b >= n / epsilon.
int bits_for(int n, double epsilon);

struct AqftParams {
  int n = 2;
  double epsilon = 0.5;
  int b = 2;
  bool prune = true;           // false: threshold below every angle, b = n
  bool figure_compat = false;  // admits b = 3
  bool keep_snapshots = false;
  bool final_swaps = true;     // false: output in bit-reversed order
  UncomputeStyle style = UncomputeStyle::MeasureBased;

  static AqftParams from_epsilon(int n, double epsilon);
  /// epsilon is set to n / 2^b.
  static AqftParams from_bits(int n, int b);
  static AqftParams unpruned(int n);

  void validate() const;
};

struct RemovedGate {
  std::string layer;
  int qubit = -1;
  DyadicAngle angle;
};

struct RemovedGateLedger {
  std::vector<RemovedGate> entries;

  /// sum of |1 - exp(i theta)| over removed rotations
  double bound() const;
};

enum class LayerKind { First, Last, Lone, A, B };
const char* to_string(LayerKind k);

/// One Rz layer that becomes an inverse PGT. Slot e carries -pi/2^e; `slots`
/// maps e to the qubit that holds it.
struct LayerInfo {
  std::string id;  // also the tag on the layer's gates
  LayerKind kind = LayerKind::First;
  int block = -1;  // partition block, -1 for the first and last layers
  std::map<int, int> slots;
  int width = 0;   // set by step 6
};

/// A circuit plus the bookkeeping the later steps need.
struct Stage {
  Circuit circuit;
  std::vector<LayerInfo> layers;
};

enum class BlockKind { Lone, Pair };

/// Step-1 output: gates of one box, reordered, on the full data register.
struct Subcircuit {
  Circuit circuit;
  BlockKind kind = BlockKind::Pair;
  int index = 0;
  int wire = 1;            // first target wire (1-based, 1 = MSB)
  bool has_trailing_h = false;
};

std::vector<Subcircuit> step1_reorder_and_partition(const Circuit& qft);
/// Moves the fan-out CNOTs feeding the top input of the A (resp. B) adder
/// this many chain positions earlier. A non-empty `b_order` (control wires)
/// replaces the B chain order outright.
struct FanoutShift {
  int a = 0;
  int b = 0;
  std::vector<int> b_order;
  bool parity_in_place = false;  // CR2 parity on w_{i+1} instead of a copy qubit
};

/// `width_cap` (b + 1, or 0 for none) and `shift` only reorder commuting
/// fan-out CNOTs.
Stage step2_transform_subcircuit(const Subcircuit& sub, int width_cap = 0, FanoutShift shift = {});
Stage step34_assemble_and_split(const std::vector<Stage>& subs);
Stage step5_prune(const Stage& s, const AqftParams& p, RemovedGateLedger& ledger);
Stage step6_complete_pgt(const Stage& s, const AqftParams& p);

struct AdderRecord {
  std::string layer;
  LayerKind kind = LayerKind::First;
  int block = -1;
  int width = 0;
  std::string catalyst;
  std::size_t gate_begin = 0;  // [begin, end) in the final circuit
  std::size_t gate_end = 0;
};

struct AqftArtifact {
  Circuit circuit;
  AqftParams params;
  RemovedGateLedger ledger;
  std::vector<AdderRecord> adders;
  std::map<int, int> inventory;  // adder width -> count
  std::vector<std::pair<std::string, Circuit>> snapshots;

  /// Paired A/B adders of each interior block.
  std::vector<std::pair<const AdderRecord*, const AdderRecord*>> pairs() const;
};

AqftArtifact step7_substitute_adders(const Stage& s, const AqftParams& p);

AqftArtifact build_aqft(const AqftParams& p);

/// {params, ledger, registers, inventory, adders}
nlohmann::json sidecar_json(const AqftArtifact& a);

/// Expected adder inventory: n-b+3 adders of width b+1 and one each of
/// widths b down to 3.
std::map<int, int> expected_inventory(int n, int b);

}  // namespace aqft
