#pragma once

#include "aqft/circuit.hpp"
#include "aqft/statevec.hpp"

#include <vector>

namespace aqft {

struct QftSpec {
  int n = 1;
  bool include_final_swaps = true;
};

/// Textbook QFT on register "data": for each wire from the most significant
/// down, H followed by controlled-R_k from every less significant wire, then
/// the bit-reversal swaps. Wire i (1-based, 1 = MSB) is qubit n - i.
Circuit build_standard_qft(const QftSpec& spec);

/// Qubit index of 1-based wire `i` in an n-qubit QFT.
inline int qft_wire(int n, int i) { return n - i; }

/// Replaces every CRk by Rz(pi/2^k) on both qubits, CNOT, Rz(-pi/2^k) on the
/// target, CNOT. Equal to the input up to global phase.
Circuit decompose_crk(const Circuit& c);

/// Rz layer on register "data" of width b: qubit of significance 2^j gets
/// -pi/2^(b-1-j), negated when `invert` is set (forward gradient).
Circuit build_inverse_pgt_layer(int b, bool invert = false);
void append_inverse_pgt_layer(Circuit& c, const std::vector<int>& qubits, const std::string& tag);

/// H on every qubit of register "catalyst" followed by the forward gradient
/// rotations. Rotations of pi, pi/2, pi/4 come out as Z, S, T; the rest as
/// SynthRz leaves.
Circuit build_psi_prep(int b);
void append_psi_prep(Circuit& c, const std::vector<int>& qubits, const std::string& tag);

/// (1/sqrt(2^n)) sum_k exp(2 pi i j k / 2^n) |k><j|
OperatorMatrix dft_matrix(int n);

/// (1/sqrt(2^b)) sum_l exp(2 pi i l / 2^b) |l>
StateVector psi_state(int b);

}  // namespace aqft
