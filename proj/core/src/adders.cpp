#include "aqft/adders.hpp"

namespace aqft {

namespace {

Gate conditioned(GateKind kind, std::vector<int> qubits, int bit, const std::string& tag) {
  Gate g;
  g.kind = kind;
  g.qubits = std::move(qubits);
  g.condition = bit;
  g.tag = tag;
  return g;
}

}  // namespace

void append_and_compute(Circuit& c, int a, int b, int t, const std::string& tag) {
  c.h(t, tag);
  c.cnot(a, t, tag);
  c.cnot(t, b, tag);
  c.tdg(t, tag);  // t0 ^ a
  c.t(b, tag);    // t0 ^ a ^ b
  c.cnot(t, b, tag);
  c.cnot(a, t, tag);
  c.cnot(t, b, tag);
  c.t(t, tag);    // t0
  c.tdg(b, tag);  // t0 ^ b
  c.cnot(t, b, tag);
  c.h(t, tag);
  c.s(t, tag);
}

void append_and_uncompute(Circuit& c, int a, int b, int t, UncomputeStyle style,
                          const std::string& tag) {
  if (style == UncomputeStyle::CoherentReference) {
    c.h(t, tag);
    c.ccz(a, b, t, tag);
    c.h(t, tag);
    return;
  }
  const int bit = c.add_bit();
  c.measure_x(t, bit, tag);
  c.append(conditioned(GateKind::CZ, {a, b}, bit, tag));
  c.h(t, tag);
  c.append(conditioned(GateKind::X, {t}, bit, tag));
}

Circuit with_coherent_uncompute(const Circuit& c) {
  Circuit out = c.empty_like();
  const auto& gs = c.gates();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const Gate& g = gs[i];
    if (!is_measurement(g.kind)) {
      out.append(g);
      continue;
    }
    const bool ok = g.kind == GateKind::MeasureX && i + 3 < gs.size() && gs[i + 1].kind == GateKind::CZ &&
                    gs[i + 1].condition == g.bit && gs[i + 2].kind == GateKind::H &&
                    gs[i + 2].qubits[0] == g.qubits[0] && gs[i + 3].kind == GateKind::X &&
                    gs[i + 3].condition == g.bit && gs[i + 3].qubits[0] == g.qubits[0];
    if (!ok) throw Error("measurement at gate " + std::to_string(i) + " is not an AND uncompute");
    const int t = g.qubits[0], a = gs[i + 1].qubits[0], b = gs[i + 1].qubits[1];
    out.h(t, g.tag);
    out.ccz(a, b, t, g.tag);
    out.h(t, g.tag);
    i += 3;
  }
  return out;
}

void append_adder(Circuit& c, const std::vector<int>& x, const std::vector<int>& y,
                  const std::vector<int>& carries, UncomputeStyle style, const std::string& tag) {
  const int w = static_cast<int>(x.size());
  if (w < 1 || y.size() != x.size()) throw Error("adder operands must have equal nonzero width");
  if (static_cast<int>(carries.size()) < w - 1) throw Error("adder needs w-1 carry qubits");
  if (w == 1) {
    c.cnot(x[0], y[0], tag);
    return;
  }
  // carry into bit i lives on t(i), i = 1..w-1
  auto t = [&](int i) { return carries[i - 1]; };

  append_and_compute(c, x[0], y[0], t(1), tag);
  for (int i = 1; i <= w - 2; ++i) {
    c.cnot(t(i), x[i], tag);
    c.cnot(t(i), y[i], tag);
    append_and_compute(c, x[i], y[i], t(i + 1), tag);
    c.cnot(t(i), t(i + 1), tag);
  }
  c.cnot(x[w - 1], y[w - 1], tag);
  c.cnot(t(w - 1), y[w - 1], tag);
  for (int i = w - 2; i >= 1; --i) {
    c.cnot(t(i), t(i + 1), tag);
    append_and_uncompute(c, x[i], y[i], t(i + 1), style, tag);
    c.cnot(t(i), x[i], tag);
    c.cnot(x[i], y[i], tag);
  }
  append_and_uncompute(c, x[0], y[0], t(1), style, tag);
  c.cnot(x[0], y[0], tag);
}

Circuit build_adder(const AdderSpec& spec) {
  if (spec.width < 1) throw Error("adder width must be >= 1");
  Circuit c;
  auto x = c.add_register("x", RegisterRole::Data, spec.width);
  auto y = c.add_register("y", RegisterRole::Data, spec.width);
  std::vector<int> carries;
  if (spec.width > 1) carries = c.add_register("carry", RegisterRole::ZeroAncilla, spec.width - 1).qubits;
  append_adder(c, x.qubits, y.qubits, carries, spec.style, "adder");
  return c;
}

Circuit build_and_gadget(bool with_uncompute, UncomputeStyle style) {
  Circuit c;
  int a = c.add_register("a", RegisterRole::Data, 1).qubits[0];
  int b = c.add_register("b", RegisterRole::Data, 1).qubits[0];
  int t = c.add_register("t", RegisterRole::ZeroAncilla, 1).qubits[0];
  append_and_compute(c, a, b, t, "and");
  if (with_uncompute) append_and_uncompute(c, a, b, t, style, "and");
  return c;
}

Circuit pgt_via_addition(int b, UncomputeStyle style) {
  if (b < 1) throw Error("PGT width must be >= 1");
  Circuit c;
  auto data = c.add_register("data", RegisterRole::Data, b);
  auto cat = c.add_register("catalyst", RegisterRole::Catalyst, b);
  std::vector<int> carries;
  if (b > 1) carries = c.add_register("carry", RegisterRole::ZeroAncilla, b - 1).qubits;
  append_adder(c, data.qubits, cat.qubits, carries, style, "pgt-adder");
  return c;
}

}  // namespace aqft
