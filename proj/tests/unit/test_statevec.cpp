#include "doctest.h"

#include "aqft/statevec.hpp"
#include "random_circuit.hpp"

#include <cmath>
#include <numbers>

using namespace aqft;

namespace {

// Gate matrices written out from their textbook definitions and lifted with
// Kronecker products; shares nothing with the simulator kernels.
OperatorMatrix single(const Gate& g) {
  const Complex i1(0, 1);
  const double r = 1 / std::sqrt(2.0);
  OperatorMatrix m(2, 2);
  switch (g.kind) {
    case GateKind::H: m << r, r, r, -r; break;
    case GateKind::X: m << 0, 1, 1, 0; break;
    case GateKind::Z: m << 1, 0, 0, -1; break;
    case GateKind::S: m << 1, 0, 0, i1; break;
    case GateKind::Sdg: m << 1, 0, 0, -i1; break;
    case GateKind::T: m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4); break;
    case GateKind::Tdg: m << 1, 0, 0, std::polar(1.0, -std::numbers::pi / 4); break;
    default: {
      double th = g.angle.to_radians();
      m << std::polar(1.0, -th / 2), 0, 0, std::polar(1.0, th / 2);
    }
  }
  return m;
}

OperatorMatrix lift1(const OperatorMatrix& m, int q, int n) {
  OperatorMatrix out = OperatorMatrix::Ones(1, 1);
  for (int k = n - 1; k >= 0; --k) {
    OperatorMatrix f = k == q ? m : OperatorMatrix::Identity(2, 2);
    OperatorMatrix nxt(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index a = 0; a < out.rows(); ++a)
      for (Eigen::Index b = 0; b < out.cols(); ++b) nxt.block(a * 2, b * 2, 2, 2) = out(a, b) * f;
    out = nxt;
  }
  return out;
}

OperatorMatrix projector(int q, int v, int n) {
  OperatorMatrix p = OperatorMatrix::Zero(2, 2);
  p(v, v) = 1;
  return lift1(p, q, n);
}

OperatorMatrix oracle_unitary(const Circuit& c) {
  const int n = c.num_qubits();
  const auto dim = Eigen::Index{1} << n;
  OperatorMatrix u = OperatorMatrix::Identity(dim, dim);
  const OperatorMatrix X = (OperatorMatrix(2, 2) << 0, 1, 1, 0).finished();
  for (const auto& g : c.gates()) {
    OperatorMatrix m;
    const auto& q = g.qubits;
    switch (g.kind) {
      case GateKind::CNOT: m = projector(q[0], 0, n) + projector(q[0], 1, n) * lift1(X, q[1], n); break;
      case GateKind::CZ:
        m = OperatorMatrix::Identity(dim, dim) - 2.0 * projector(q[0], 1, n) * projector(q[1], 1, n);
        break;
      case GateKind::CCZ:
        m = OperatorMatrix::Identity(dim, dim) -
            2.0 * projector(q[0], 1, n) * projector(q[1], 1, n) * projector(q[2], 1, n);
        break;
      case GateKind::CRk: {
        Complex ph = std::polar(1.0, std::numbers::pi / std::pow(2.0, g.k - 1));
        m = OperatorMatrix::Identity(dim, dim) +
            (ph - 1.0) * projector(q[0], 1, n) * projector(q[1], 1, n);
        break;
      }
      case GateKind::SWAP: {
        OperatorMatrix cx01 = projector(q[0], 0, n) + projector(q[0], 1, n) * lift1(X, q[1], n);
        OperatorMatrix cx10 = projector(q[1], 0, n) + projector(q[1], 1, n) * lift1(X, q[0], n);
        m = cx01 * cx10 * cx01;
        break;
      }
      default: m = lift1(single(g), q[0], n);
    }
    u = m * u;
  }
  return u;
}

}  // namespace

TEST_CASE("unitary_of agrees with the Kronecker oracle") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto c = random_circuit(4, 50, seed);
    auto u = unitary_of(c);
    auto v = oracle_unitary(c);
    CHECK((u - v).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(unitarity_defect(u) < 1e-12);
  }
  Circuit ccz;
  ccz.add_register("q", RegisterRole::Data, 3);
  ccz.h(0);
  ccz.ccz(2, 0, 1);
  ccz.h(1);
  CHECK((unitary_of(ccz) - oracle_unitary(ccz)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dense and sparse runs agree") {
  auto c = random_circuit(5, 70, 3);
  StateVector in = StateVector::basis(5, 0b10110);
  auto dense = simulate(c, in, MeasurementPolicy::seeded(0)).state;
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(32);
  e(0b10110) = 1;
  Eigen::VectorXcd ref = oracle_unitary(c) * e;
  for (int i = 0; i < 32; ++i) CHECK(std::abs(dense[i] - ref(i)) < 1e-12);
  CHECK(dense.norm() == doctest::Approx(1.0));
}

TEST_CASE("embed builds tensor products") {
  SparseState s(4);
  StateVector plus(1, {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)});
  s.embed(plus, {2});
  s.embed(StateVector::basis(1, 1), {0});
  auto d = s.to_dense();
  CHECK(std::abs(d[0b0001] - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(d[0b0101] - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(s.support() == 2);
}

TEST_CASE("mid-circuit measurement collapses and records") {
  Circuit c;
  c.add_register("q", RegisterRole::Data, 2);
  int b0 = c.add_bit();
  c.h(0);
  c.cnot(0, 1);
  c.measure_z(0, b0);
  for (int v : {0, 1}) {
    auto r = simulate(c, StateVector(2), MeasurementPolicy::forced({v}));
    CHECK(r.outcomes == std::vector<int>{v});
    CHECK(r.bits[b0] == v);
    CHECK(std::abs(r.state[v ? 3 : 0]) == doctest::Approx(1.0));
  }
  int zeros = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    zeros += simulate(c, StateVector(2), MeasurementPolicy::seeded(seed)).outcomes[0] == 0;
  CHECK(zeros > 70);
  CHECK(zeros < 130);
}

TEST_CASE("classical control fires only on a set bit") {
  Circuit c;
  c.add_register("q", RegisterRole::Data, 2);
  int b = c.add_bit();
  c.measure_x(0, b);
  Gate g;
  g.kind = GateKind::X;
  g.qubits = {1};
  g.condition = b;
  c.append(g);
  auto r0 = simulate(c, StateVector(2), MeasurementPolicy::forced({0}));
  // X-basis outcome 0 leaves |+> on qubit 0 and qubit 1 untouched
  CHECK(r0.state[0b00].real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(r0.state[0b01].real() == doctest::Approx(1 / std::sqrt(2.0)));
  auto r1 = simulate(c, StateVector(2), MeasurementPolicy::forced({1}));
  // X-basis outcome 1 leaves |-> on qubit 0
  CHECK(r1.state[0b10].real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(r1.state[0b11].real() == doctest::Approx(-1 / std::sqrt(2.0)));
}

TEST_CASE("forcing an impossible outcome throws") {
  Circuit c;
  c.add_register("q", RegisterRole::Data, 1);
  c.measure_z(0, c.add_bit());
  CHECK_THROWS_AS(simulate(c, StateVector(1), MeasurementPolicy::forced({1})), Error);
  CHECK_THROWS_AS(simulate(c, StateVector(1), MeasurementPolicy::forced({})), Error);
}

TEST_CASE("spectral distance") {
  OperatorMatrix I = OperatorMatrix::Identity(2, 2);
  OperatorMatrix Z = (OperatorMatrix(2, 2) << 1, 0, 0, -1).finished();
  CHECK(spectral_distance(I, Z, false) == doctest::Approx(2.0));
  CHECK(spectral_distance(I, Z, true) == doctest::Approx(std::sqrt(2.0)));
  CHECK(spectral_distance(I, Complex(0, 1) * I, true) < 1e-12);
  CHECK(spectral_distance(I, Complex(0, 1) * I, false) == doctest::Approx(std::sqrt(2.0)));

  // minimized phase never exceeds any sampled phase; triangle inequality
  auto a = unitary_of(random_circuit(3, 30, 11));
  auto b = unitary_of(random_circuit(3, 30, 12));
  auto c = unitary_of(random_circuit(3, 30, 13));
  double dab = spectral_distance(a, b, true);
  for (int k = 0; k < 64; ++k) {
    OperatorMatrix d = a - std::polar(1.0, 2 * std::numbers::pi * k / 64) * b;
    CHECK(dab <= Eigen::BDCSVD<OperatorMatrix>(d).singularValues()(0) + 1e-12);
  }
  CHECK(dab <= spectral_distance(a, c, true) + spectral_distance(c, b, true) + 1e-9);
  CHECK_THROWS_AS(spectral_distance(I, 2.0 * I, false), Error);
}

TEST_CASE("effective operator checks ancilla restoration") {
  Circuit c;
  auto d = c.add_register("data", RegisterRole::Data, 1);
  auto a = c.add_register("anc", RegisterRole::ZeroAncilla, 1);
  c.cnot(d.qubits[0], a.qubits[0]);
  CHECK_THROWS_AS(effective_operator(c, "data", zero_inputs(c, "data")), Error);
  c.cnot(d.qubits[0], a.qubits[0]);
  auto eff = effective_operator(c, "data", zero_inputs(c, "data"));
  CHECK((eff.matrix - OperatorMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(eff.min_restoration() == doctest::Approx(1.0));
}
