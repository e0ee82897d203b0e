#pragma once

#include "aqft/circuit.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace aqft {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;

/// Dense state; basis index bit q is the value of qubit q.
class StateVector {
public:
  StateVector() = default;
  explicit StateVector(int num_qubits);  // |0...0>
  StateVector(int num_qubits, std::vector<Complex> amplitudes);

  static StateVector basis(int num_qubits, std::uint64_t index);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  std::vector<Complex>& amplitudes() { return amps_; }
  Complex operator[](std::uint64_t i) const { return amps_[i]; }
  double norm() const;

  /// [{"index": i, "re": ..., "im": ...}] for nonzero entries.
  std::string dump_json() const;

private:
  int num_qubits_ = 0;
  std::vector<Complex> amps_;
};

/// |<a|b>|^2 maximized over nothing: plain overlap fidelity.
double fidelity(const StateVector& a, const StateVector& b);

/// How measurement outcomes are chosen.
struct MeasurementPolicy {
  enum class Mode { SeededRandom, Forced };
  Mode mode = Mode::SeededRandom;
  std::uint64_t seed = 0;
  std::vector<int> outcomes;

  static MeasurementPolicy seeded(std::uint64_t seed) { return {Mode::SeededRandom, seed, {}}; }
  static MeasurementPolicy forced(std::vector<int> outcomes) {
    return {Mode::Forced, 0, std::move(outcomes)};
  }
  /// Forces every measurement in `c` to `value`.
  static MeasurementPolicy forced_all(const Circuit& c, int value);
};

/// Sparse amplitude store keyed by basis index. Used for circuits that are too
/// wide for a dense vector but keep a small support, such as adders acting on
/// computational-basis inputs and catalyst states.
class SparseState {
public:
  SparseState() = default;
  explicit SparseState(int num_qubits);  // |0...0>

  static SparseState from_dense(const StateVector& s);
  /// Tensor product placing `part` on `qubits` (qubits[i] = bit i of part).
  void embed(const StateVector& part, const std::vector<int>& qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t support() const { return keys_.size(); }
  const std::vector<std::uint64_t>& keys() const { return keys_; }
  const std::vector<Complex>& amps() const { return amps_; }
  double norm() const;

  StateVector to_dense() const;

  void apply_diag(int q, Complex d0, Complex d1);
  void apply_x(int q);
  void apply_h(int q);
  void apply_cnot(int c, int t);
  void apply_swap(int a, int b);
  void apply_phase_if_all(std::uint64_t mask, Complex phase);
  /// Collapses qubit q in the Z basis; returns the probability of `outcome`.
  double project_z(int q, int outcome);
  double probability_one(int q) const;

private:
  template <class Classify>
  void shift_classes(Classify cls, const std::array<std::uint64_t, 3>& delta);

  int num_qubits_ = 0;
  std::vector<std::uint64_t> keys_;  // sorted
  std::vector<Complex> amps_;
  std::vector<std::uint64_t> scratch_keys_;
  std::vector<Complex> scratch_amps_;
};

struct SimResult {
  SparseState state;
  std::vector<int> outcomes;  // in execution order
  std::vector<int> bits;      // classical register after the run
};

using GateHook = std::function<void(std::size_t gate_index, const SparseState&)>;

/// Runs `c` on `input`. Rz(theta) applies diag(e^{-i theta/2}, e^{i theta/2}).
SimResult simulate(const Circuit& c, SparseState input, const MeasurementPolicy& policy,
                   const GateHook& hook = {});

struct DenseSimResult {
  StateVector state;
  std::vector<int> outcomes;
  std::vector<int> bits;
};

DenseSimResult simulate(const Circuit& c, const StateVector& input, const MeasurementPolicy& policy);

inline constexpr int kDefaultMatrixCap = 12;
inline constexpr int kDefaultStateCap = 26;

/// Column j is the output for basis input |j>. Coherent circuits only.
OperatorMatrix unitary_of(const Circuit& c, int width_cap = kDefaultMatrixCap);

struct EffectiveOperator {
  OperatorMatrix matrix;
  std::vector<double> restoration;  // per column: squared norm of the projection
  double min_restoration() const;
};

struct EffectiveOperatorOptions {
  /// Expected output state per non-data register; defaults to its input.
  std::map<std::string, StateVector> expected_outputs;
  MeasurementPolicy policy = MeasurementPolicy::seeded(1);
  double restoration_tolerance = 1e-9;
  int width_cap = kDefaultMatrixCap;
};

/// Operator induced on `data_register` with every other register fixed to the
/// supplied input and projected back onto its expected output.
EffectiveOperator effective_operator(const Circuit& c, const std::string& data_register,
                                     const std::map<std::string, StateVector>& ancilla_inputs,
                                     const EffectiveOperatorOptions& opts = {});

/// |0...0> for every register other than `data_register`.
std::map<std::string, StateVector> zero_inputs(const Circuit& c, const std::string& data_register);

/// Largest singular value of U - e^{i phi} V, with phi minimized when requested.
double spectral_distance(const OperatorMatrix& u, const OperatorMatrix& v, bool up_to_global_phase,
                         double unitarity_tol = 1e-8);

/// max |(U^dagger U - I)_{ij}|
double unitarity_defect(const OperatorMatrix& u);

}  // namespace aqft
