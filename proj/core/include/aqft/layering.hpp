#pragma once

#include "aqft/circuit.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace aqft {

/// ASAP layering of a gate stream: each gate lands one layer after the latest
/// earlier gate sharing a qubit or classical bit with it.
struct LayeredDag {
  std::vector<std::vector<std::size_t>> layers;
  std::vector<std::size_t> layer_of;  // indexed by gate position

  std::size_t depth() const { return layers.size(); }
};

LayeredDag layer_dag(const Circuit& c);

/// Price of one SynthRz leaf, in T gates. The same figure serves as the leaf's
/// T-depth because a synthesized rotation is a serial T sequence.
struct SynthModel {
  double leaf_cost = 0.0;

  /// 1.15 * log2(1 / leaf_eps), the O(1) term taken as zero.
  static SynthModel for_leaf_error(double leaf_eps);
};

/// Layers containing at least one T/Tdg, plus the model depth of every layer
/// holding SynthRz leaves (leaves within one layer overlap).
double t_depth(const Circuit& c, std::optional<SynthModel> synth = std::nullopt);
double t_depth(const Circuit& c, const LayeredDag& dag, std::optional<SynthModel> synth = std::nullopt);

/// Indices of the layers that contain a T/Tdg among the given gates.
std::vector<std::size_t> t_layers(const Circuit& c, const LayeredDag& dag,
                                  const std::vector<std::size_t>& gate_indices);

}  // namespace aqft
