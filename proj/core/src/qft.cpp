#include "aqft/qft.hpp"

#include <cmath>
#include <numbers>

namespace aqft {

Circuit build_standard_qft(const QftSpec& spec) {
  if (spec.n < 1) throw Error("QFT width must be >= 1");
  const int n = spec.n;
  Circuit c;
  c.add_register("data", RegisterRole::Data, n);
  for (int i = 1; i <= n; ++i) {
    c.h(qft_wire(n, i));
    for (int k = 2; k <= n - i + 1; ++k) c.crk(k, qft_wire(n, i + k - 1), qft_wire(n, i));
  }
  if (spec.include_final_swaps)
    for (int i = 1; i <= n / 2; ++i) c.swap(qft_wire(n, i), qft_wire(n, n + 1 - i));
  return c;
}

Circuit decompose_crk(const Circuit& c) {
  Circuit out = c.empty_like();
  for (const auto& g : c.gates()) {
    if (g.kind != GateKind::CRk) {
      out.append(g);
      continue;
    }
    const int a = g.qubits[0], b = g.qubits[1];
    const std::string tag = g.tag.empty() ? "crk" : g.tag;
    auto half = DyadicAngle::pi_over_pow2(static_cast<unsigned>(g.k));
    out.rz(a, half, tag);
    out.rz(b, half, tag);
    out.cnot(a, b, tag);
    out.rz(b, -half, tag);
    out.cnot(a, b, tag);
  }
  return out;
}

void append_inverse_pgt_layer(Circuit& c, const std::vector<int>& qubits, const std::string& tag) {
  const int b = static_cast<int>(qubits.size());
  for (int j = 0; j < b; ++j)
    c.rz(qubits[j], DyadicAngle::pi_over_pow2(static_cast<unsigned>(b - 1 - j), true), tag);
}

Circuit build_inverse_pgt_layer(int b, bool invert) {
  if (b < 1) throw Error("PGT width must be >= 1");
  Circuit c;
  auto r = c.add_register("data", RegisterRole::Data, b);
  append_inverse_pgt_layer(c, r.qubits, "pgt");
  if (invert)
    for (auto& g : c.mutable_gates()) g.angle = -g.angle;
  return c;
}

void append_psi_prep(Circuit& c, const std::vector<int>& qubits, const std::string& tag) {
  const int b = static_cast<int>(qubits.size());
  for (int q : qubits) c.h(q, tag);
  for (int j = b - 1; j >= 0; --j) {
    auto angle = DyadicAngle::pi_over_pow2(static_cast<unsigned>(b - 1 - j));
    switch (classify_rz(angle)) {
      case RzClass::Z: c.z(qubits[j], tag); break;
      case RzClass::S: c.s(qubits[j], tag); break;
      case RzClass::T: c.t(qubits[j], tag); break;
      default: c.synth_rz(qubits[j], angle, tag); break;
    }
  }
}

Circuit build_psi_prep(int b) {
  if (b < 1) throw Error("catalyst width must be >= 1");
  Circuit c;
  auto r = c.add_register("catalyst", RegisterRole::Catalyst, b);
  append_psi_prep(c, r.qubits, "psi-prep");
  return c;
}

OperatorMatrix dft_matrix(int n) {
  const std::size_t dim = std::size_t{1} << n;
  const double s = 1.0 / std::sqrt(static_cast<double>(dim));
  OperatorMatrix u(dim, dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t j = 0; j < dim; ++j) {
      // reduce j*k mod 2^n first so the phase stays exact for large products
      const auto jk = (j * k) & (dim - 1);
      u(k, j) = std::polar(s, 2 * std::numbers::pi * static_cast<double>(jk) / static_cast<double>(dim));
    }
  return u;
}

StateVector psi_state(int b) {
  const std::size_t dim = std::size_t{1} << b;
  std::vector<Complex> a(dim);
  const double s = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t l = 0; l < dim; ++l)
    a[l] = std::polar(s, 2 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(dim));
  return StateVector(b, std::move(a));
}

}  // namespace aqft
