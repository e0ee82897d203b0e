#include "aqft/serialize.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

namespace aqft {

using nlohmann::json;

json to_json(const DyadicAngle& a) {
  json j;
  const BigInt& n = a.num();
  if (n <= std::numeric_limits<std::int64_t>::max() && n >= std::numeric_limits<std::int64_t>::min())
    j["num"] = n.convert_to<std::int64_t>();
  else
    j["num"] = n.str();
  j["den_pow2"] = a.denom_pow();
  return j;
}

DyadicAngle angle_from_json(const json& j) {
  const json& n = j.at("num");
  BigInt num = n.is_string() ? BigInt(n.get<std::string>()) : BigInt(n.get<std::int64_t>());
  return DyadicAngle(num, j.at("den_pow2").get<unsigned>());
}

json to_json(const Circuit& c) {
  json j;
  j["version"] = kCircuitSchemaVersion;
  j["num_qubits"] = c.num_qubits();
  j["num_bits"] = c.num_bits();
  j["registers"] = json::array();
  for (const auto& r : c.registers())
    j["registers"].push_back({{"name", r.name}, {"role", to_string(r.role)}, {"qubits", r.qubits}});
  j["gates"] = json::array();
  for (const auto& g : c.gates()) {
    json jg{{"kind", to_string(g.kind)}, {"qubits", g.qubits}};
    if (g.kind == GateKind::Rz || g.kind == GateKind::SynthRz) jg["angle"] = to_json(g.angle);
    if (g.kind == GateKind::CRk) jg["k"] = g.k;
    if (is_measurement(g.kind)) jg["bit"] = g.bit;
    if (g.condition) jg["if_bit"] = *g.condition;
    if (!g.tag.empty()) jg["tag"] = g.tag;
    j["gates"].push_back(std::move(jg));
  }
  return j;
}

Circuit circuit_from_json(const json& j) {
  if (j.value("version", 0) != kCircuitSchemaVersion)
    throw Error("unsupported circuit schema version");
  Circuit c;
  int expected_qubits = j.at("num_qubits").get<int>();
  for (const auto& jr : j.at("registers")) {
    auto qubits = jr.at("qubits").get<std::vector<int>>();
    // registers are re-allocated in order; the stored indices must agree
    auto r = c.add_register(jr.at("name").get<std::string>(),
                            register_role_from_string(jr.at("role").get<std::string>()),
                            static_cast<int>(qubits.size()));
    if (r.qubits != qubits) throw Error("register qubits are not contiguous in declaration order");
  }
  if (c.num_qubits() != expected_qubits) throw Error("num_qubits disagrees with registers");
  for (int b = 0, nb = j.at("num_bits").get<int>(); b < nb; ++b) c.add_bit();
  for (const auto& jg : j.at("gates")) {
    Gate g;
    g.kind = gate_kind_from_string(jg.at("kind").get<std::string>());
    g.qubits = jg.at("qubits").get<std::vector<int>>();
    if (jg.contains("angle")) g.angle = angle_from_json(jg["angle"]);
    if (jg.contains("k")) g.k = jg["k"].get<int>();
    if (jg.contains("bit")) g.bit = jg["bit"].get<int>();
    if (jg.contains("if_bit")) g.condition = jg["if_bit"].get<int>();
    if (jg.contains("tag")) g.tag = jg["tag"].get<std::string>();
    c.append(std::move(g));
  }
  c.validate();
  return c;
}

namespace {

std::string qasm_angle(const DyadicAngle& a) {
  std::ostringstream os;
  os << std::setprecision(17) << a.to_radians();
  return os.str();
}

std::string q(int i) { return "q[" + std::to_string(i) + "]"; }

}  // namespace

std::string to_qasm(const Circuit& c) {
  if (!c.is_coherent()) throw Error("QASM export requires a measurement-free circuit");
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  os << "qreg q[" << c.num_qubits() << "];\n";
  for (const auto& g : c.gates()) {
    const auto& qs = g.qubits;
    switch (g.kind) {
      case GateKind::H: os << "h " << q(qs[0]); break;
      case GateKind::X: os << "x " << q(qs[0]); break;
      case GateKind::Z: os << "z " << q(qs[0]); break;
      case GateKind::S: os << "s " << q(qs[0]); break;
      case GateKind::Sdg: os << "sdg " << q(qs[0]); break;
      case GateKind::T: os << "t " << q(qs[0]); break;
      case GateKind::Tdg: os << "tdg " << q(qs[0]); break;
      case GateKind::Rz:
      case GateKind::SynthRz: os << "rz(" << qasm_angle(g.angle) << ") " << q(qs[0]); break;
      case GateKind::CNOT: os << "cx " << q(qs[0]) << "," << q(qs[1]); break;
      case GateKind::CZ: os << "cz " << q(qs[0]) << "," << q(qs[1]); break;
      case GateKind::SWAP: os << "swap " << q(qs[0]) << "," << q(qs[1]); break;
      case GateKind::CCZ:
        os << "h " << q(qs[2]) << ";\nccx " << q(qs[0]) << "," << q(qs[1]) << "," << q(qs[2])
           << ";\nh " << q(qs[2]);
        break;
      case GateKind::CRk:
        os << "cu1(" << qasm_angle(DyadicAngle::pi_over_pow2(g.k - 1)) << ") " << q(qs[0]) << ","
           << q(qs[1]);
        break;
      case GateKind::MeasureX:
      case GateKind::MeasureZ: break;  // excluded by is_coherent
    }
    os << ";\n";
  }
  return os.str();
}

}  // namespace aqft
