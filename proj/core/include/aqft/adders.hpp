#pragma once

#include "aqft/circuit.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace aqft {

enum class UncomputeStyle {
  MeasureBased,       // X-basis measurement plus classically controlled CZ
  CoherentReference,  // H, CCZ, H; measurement-free, used for export
};

struct AdderSpec {
  int width = 1;
  UncomputeStyle style = UncomputeStyle::MeasureBased;
};

/// t ^= a & b for t in |0>. 4 T gates in two T-layers; the first waits on
/// both inputs, so chained gadgets never share a T-layer.
void append_and_compute(Circuit& c, int a, int b, int t, const std::string& tag);
/// Returns t = a & b to |0>. No T gates.
void append_and_uncompute(Circuit& c, int a, int b, int t, UncomputeStyle style,
                          const std::string& tag);

/// Replaces every measure-based AND uncompute (MeasureX, conditioned CZ, H,
/// conditioned X) by H, CCZ, H. Throws on any other measurement.
Circuit with_coherent_uncompute(const Circuit& c);

/// y <- (x + y) mod 2^w in place, x unchanged. `carries` needs at least w-1
/// zero qubits and is returned to zero.
void append_adder(Circuit& c, const std::vector<int>& x, const std::vector<int>& y,
                  const std::vector<int>& carries, UncomputeStyle style, const std::string& tag);

/// Registers "x", "y" (data) and "carry" (zero ancilla, width w-1).
Circuit build_adder(const AdderSpec& spec);

/// Registers "a", "b", "t": the logical-AND gadget and its uncompute.
Circuit build_and_gadget(bool with_uncompute, UncomputeStyle style = UncomputeStyle::MeasureBased);

inline std::pair<std::uint64_t, std::uint64_t> classical_adder_oracle(int w, std::uint64_t x,
                                                                      std::uint64_t y) {
  const std::uint64_t mask = w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
  return {x & mask, (x + y) & mask};
}

/// Adds register "data" (width b) into register "catalyst" (width b). With the
/// catalyst holding the gradient state this applies the inverse phase gradient
/// to "data".
Circuit pgt_via_addition(int b, UncomputeStyle style = UncomputeStyle::MeasureBased);

inline int adder_t_count(int w) { return 4 * (w - 1); }
inline int adder_t_depth(int w) { return 2 * (w - 1); }

}  // namespace aqft
