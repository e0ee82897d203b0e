#include "aqft/circuit.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace aqft {

namespace {

constexpr std::array<std::pair<GateKind, const char*>, 16> kKindNames{{
    {GateKind::H, "H"},       {GateKind::X, "X"},         {GateKind::Z, "Z"},
    {GateKind::S, "S"},       {GateKind::Sdg, "Sdg"},     {GateKind::T, "T"},
    {GateKind::Tdg, "Tdg"},   {GateKind::Rz, "Rz"},       {GateKind::SynthRz, "SynthRz"},
    {GateKind::CNOT, "CNOT"}, {GateKind::CZ, "CZ"},       {GateKind::CCZ, "CCZ"},
    {GateKind::SWAP, "SWAP"}, {GateKind::CRk, "CRk"},     {GateKind::MeasureX, "MeasureX"},
    {GateKind::MeasureZ, "MeasureZ"},
}};

}  // namespace

const char* to_string(GateKind k) {
  for (auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

GateKind gate_kind_from_string(std::string_view s) {
  for (auto& [kind, name] : kKindNames)
    if (s == name) return kind;
  throw Error("unknown gate kind '" + std::string(s) + "'");
}

std::size_t arity(GateKind k) {
  switch (k) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
    case GateKind::CRk: return 2;
    case GateKind::CCZ: return 3;
    default: return 1;
  }
}

bool is_measurement(GateKind k) { return k == GateKind::MeasureX || k == GateKind::MeasureZ; }

bool is_diagonal(GateKind k) {
  switch (k) {
    case GateKind::Z: case GateKind::S: case GateKind::Sdg: case GateKind::T:
    case GateKind::Tdg: case GateKind::Rz: case GateKind::SynthRz: case GateKind::CZ:
    case GateKind::CCZ: case GateKind::CRk: return true;
    default: return false;
  }
}

const char* to_string(RegisterRole r) {
  switch (r) {
    case RegisterRole::Data: return "data";
    case RegisterRole::ZeroAncilla: return "zero-ancilla";
    case RegisterRole::Catalyst: return "catalyst";
  }
  return "?";
}

RegisterRole register_role_from_string(std::string_view s) {
  if (s == "data") return RegisterRole::Data;
  if (s == "zero-ancilla") return RegisterRole::ZeroAncilla;
  if (s == "catalyst") return RegisterRole::Catalyst;
  throw Error("unknown register role '" + std::string(s) + "'");
}

Register Circuit::add_register(std::string name, RegisterRole role, int width) {
  if (width < 0) throw Error("negative register width");
  if (find_register(name)) throw Error("duplicate register '" + name + "'");
  Register r{std::move(name), role, {}};
  for (int i = 0; i < width; ++i) r.qubits.push_back(num_qubits_++);
  registers_.push_back(std::move(r));
  return registers_.back();
}

void Circuit::check_gate(const Gate& g) const {
  if (g.qubits.size() != arity(g.kind))
    throw Error(std::string("arity mismatch for ") + to_string(g.kind));
  for (std::size_t i = 0; i < g.qubits.size(); ++i) {
    if (g.qubits[i] < 0 || g.qubits[i] >= num_qubits_)
      throw Error(std::string("qubit index out of range in ") + to_string(g.kind));
    for (std::size_t j = 0; j < i; ++j)
      if (g.qubits[i] == g.qubits[j]) throw Error("repeated qubit in gate");
  }
  if (is_measurement(g.kind) && (g.bit < 0 || g.bit >= num_bits_))
    throw Error("measurement bit out of range");
  if (g.condition && (*g.condition < 0 || *g.condition >= num_bits_))
    throw Error("condition bit out of range");
  if (g.kind == GateKind::CRk && g.k < 2) throw Error("CRk requires k >= 2");
}

void Circuit::append(Gate g) {
  check_gate(g);
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits_ > num_qubits_ || other.num_bits_ > num_bits_)
    throw Error("appended circuit is wider than the destination");
  for (const auto& g : other.gates_) append(g);
}

namespace {
Gate make1(GateKind k, int q, std::string tag) {
  Gate g;
  g.kind = k;
  g.qubits = {q};
  g.tag = std::move(tag);
  return g;
}
Gate make2(GateKind k, int a, int b, std::string tag) {
  Gate g;
  g.kind = k;
  g.qubits = {a, b};
  g.tag = std::move(tag);
  return g;
}
}  // namespace

void Circuit::h(int q, std::string tag) { append(make1(GateKind::H, q, std::move(tag))); }
void Circuit::x(int q, std::string tag) { append(make1(GateKind::X, q, std::move(tag))); }
void Circuit::z(int q, std::string tag) { append(make1(GateKind::Z, q, std::move(tag))); }
void Circuit::s(int q, std::string tag) { append(make1(GateKind::S, q, std::move(tag))); }
void Circuit::sdg(int q, std::string tag) { append(make1(GateKind::Sdg, q, std::move(tag))); }
void Circuit::t(int q, std::string tag) { append(make1(GateKind::T, q, std::move(tag))); }
void Circuit::tdg(int q, std::string tag) { append(make1(GateKind::Tdg, q, std::move(tag))); }

void Circuit::rz(int q, DyadicAngle a, std::string tag) {
  Gate g = make1(GateKind::Rz, q, std::move(tag));
  g.angle = std::move(a);
  append(std::move(g));
}

void Circuit::synth_rz(int q, DyadicAngle a, std::string tag) {
  Gate g = make1(GateKind::SynthRz, q, std::move(tag));
  g.angle = std::move(a);
  append(std::move(g));
}

void Circuit::cnot(int c, int t, std::string tag) { append(make2(GateKind::CNOT, c, t, std::move(tag))); }
void Circuit::cz(int a, int b, std::string tag) { append(make2(GateKind::CZ, a, b, std::move(tag))); }
void Circuit::swap(int a, int b, std::string tag) { append(make2(GateKind::SWAP, a, b, std::move(tag))); }

void Circuit::ccz(int a, int b, int c, std::string tag) {
  Gate g;
  g.kind = GateKind::CCZ;
  g.qubits = {a, b, c};
  g.tag = std::move(tag);
  append(std::move(g));
}

void Circuit::crk(int k, int control, int target, std::string tag) {
  Gate g = make2(GateKind::CRk, control, target, std::move(tag));
  g.k = k;
  append(std::move(g));
}

void Circuit::measure_x(int q, int bit, std::string tag) {
  Gate g = make1(GateKind::MeasureX, q, std::move(tag));
  g.bit = bit;
  append(std::move(g));
}

void Circuit::measure_z(int q, int bit, std::string tag) {
  Gate g = make1(GateKind::MeasureZ, q, std::move(tag));
  g.bit = bit;
  append(std::move(g));
}

const Register* Circuit::find_register(std::string_view name) const {
  for (const auto& r : registers_)
    if (r.name == name) return &r;
  return nullptr;
}

const Register& Circuit::reg(std::string_view name) const {
  if (auto* r = find_register(name)) return *r;
  throw Error("no register named '" + std::string(name) + "'");
}

bool Circuit::is_coherent() const {
  return std::none_of(gates_.begin(), gates_.end(),
                      [](const Gate& g) { return is_measurement(g.kind) || g.condition.has_value(); });
}

void Circuit::validate() const {
  std::vector<int> owner(num_qubits_, 0);
  for (const auto& r : registers_)
    for (int q : r.qubits) {
      if (q < 0 || q >= num_qubits_) throw Error("register '" + r.name + "' out of range");
      ++owner[q];
    }
  for (int q = 0; q < num_qubits_; ++q)
    if (owner[q] != 1) throw Error("qubit " + std::to_string(q) + " is not in exactly one register");
  for (const auto& g : gates_) check_gate(g);
}

Circuit Circuit::empty_like() const {
  Circuit c;
  c.num_qubits_ = num_qubits_;
  c.num_bits_ = num_bits_;
  c.registers_ = registers_;
  return c;
}

}  // namespace aqft
