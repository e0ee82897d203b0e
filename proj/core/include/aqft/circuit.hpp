#pragma once

#include "aqft/dyadic.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aqft {

/// Raised for malformed circuits, bad parameters and failed contracts.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class GateKind {
  H, X, Z, S, Sdg, T, Tdg,
  Rz,       // exact dyadic rotation
  SynthRz,  // rotation left for Clifford+T synthesis; priced by model
  CNOT, CZ, CCZ, SWAP,
  CRk,      // diag(1, 1, 1, exp(i pi / 2^(k-1)))
  MeasureX, MeasureZ,
};

const char* to_string(GateKind k);
GateKind gate_kind_from_string(std::string_view s);
std::size_t arity(GateKind k);
bool is_measurement(GateKind k);
bool is_diagonal(GateKind k);

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> qubits;
  DyadicAngle angle;              // Rz / SynthRz only
  int k = 0;                      // CRk only
  int bit = -1;                   // measurement result bit
  std::optional<int> condition;   // classical bit gating this gate
  std::string tag;

  bool is_t_like() const { return kind == GateKind::T || kind == GateKind::Tdg; }
  friend bool operator==(const Gate&, const Gate&) = default;
};

enum class RegisterRole { Data, ZeroAncilla, Catalyst };
const char* to_string(RegisterRole r);
RegisterRole register_role_from_string(std::string_view s);

/// Named qubit group; qubits[0] is the least significant bit.
struct Register {
  std::string name;
  RegisterRole role = RegisterRole::Data;
  std::vector<int> qubits;
  friend bool operator==(const Register&, const Register&) = default;
};

class Circuit {
public:
  Circuit() = default;

  /// Allocates `width` fresh qubits under a new register.
  Register add_register(std::string name, RegisterRole role, int width);
  int add_bit() { return num_bits_++; }

  void append(Gate g);
  void append(const Circuit& other);  // same qubit/bit layout expected

  // Gate shorthands. Tags are optional provenance labels.
  void h(int q, std::string tag = {});
  void x(int q, std::string tag = {});
  void z(int q, std::string tag = {});
  void s(int q, std::string tag = {});
  void sdg(int q, std::string tag = {});
  void t(int q, std::string tag = {});
  void tdg(int q, std::string tag = {});
  void rz(int q, DyadicAngle a, std::string tag = {});
  void synth_rz(int q, DyadicAngle a, std::string tag = {});
  void cnot(int c, int t, std::string tag = {});
  void cz(int a, int b, std::string tag = {});
  void ccz(int a, int b, int c, std::string tag = {});
  void swap(int a, int b, std::string tag = {});
  void crk(int k, int control, int target, std::string tag = {});
  void measure_x(int q, int bit, std::string tag = {});
  void measure_z(int q, int bit, std::string tag = {});

  int num_qubits() const { return num_qubits_; }
  int num_bits() const { return num_bits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::vector<Gate>& mutable_gates() { return gates_; }
  const std::vector<Register>& registers() const { return registers_; }

  const Register& reg(std::string_view name) const;
  const Register* find_register(std::string_view name) const;

  /// No measurements and no classically conditioned gates.
  bool is_coherent() const;

  /// Checks every structural invariant; throws Error on the first violation.
  void validate() const;

  /// Copy with the same registers and bits but no gates.
  Circuit empty_like() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

private:
  void check_gate(const Gate& g) const;

  int num_qubits_ = 0;
  int num_bits_ = 0;
  std::vector<Gate> gates_;
  std::vector<Register> registers_;
};

}  // namespace aqft
