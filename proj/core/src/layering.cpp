#include "aqft/layering.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace aqft {

LayeredDag layer_dag(const Circuit& c) {
  LayeredDag dag;
  // next free layer per wire; qubits first, then classical bits
  std::vector<std::size_t> ready(c.num_qubits() + c.num_bits(), 0);
  const auto& gates = c.gates();
  dag.layer_of.resize(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    std::vector<std::size_t> wires(g.qubits.begin(), g.qubits.end());
    if (is_measurement(g.kind)) wires.push_back(c.num_qubits() + g.bit);
    if (g.condition) wires.push_back(c.num_qubits() + *g.condition);
    std::size_t layer = 0;
    for (auto w : wires) layer = std::max(layer, ready[w]);
    for (auto w : wires) ready[w] = layer + 1;
    dag.layer_of[i] = layer;
    if (layer >= dag.layers.size()) dag.layers.resize(layer + 1);
    dag.layers[layer].push_back(i);
  }
  return dag;
}

SynthModel SynthModel::for_leaf_error(double leaf_eps) {
  return SynthModel{1.15 * std::log2(1.0 / leaf_eps)};
}

double t_depth(const Circuit& c, std::optional<SynthModel> synth) {
  return t_depth(c, layer_dag(c), synth);
}

double t_depth(const Circuit& c, const LayeredDag& dag, std::optional<SynthModel> synth) {
  double depth = 0.0;
  for (const auto& layer : dag.layers) {
    bool has_t = false;
    bool has_leaf = false;
    for (auto i : layer) {
      const Gate& g = c.gates()[i];
      has_t = has_t || g.is_t_like();
      has_leaf = has_leaf || g.kind == GateKind::SynthRz;
    }
    double here = has_t ? 1.0 : 0.0;
    if (has_leaf && synth) here = std::max(here, synth->leaf_cost);
    depth += here;
  }
  return depth;
}

std::vector<std::size_t> t_layers(const Circuit& c, const LayeredDag& dag,
                                  const std::vector<std::size_t>& gate_indices) {
  std::set<std::size_t> out;
  for (auto i : gate_indices)
    if (c.gates()[i].is_t_like()) out.insert(dag.layer_of[i]);
  return {out.begin(), out.end()};
}

}  // namespace aqft
