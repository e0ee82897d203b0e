#include "doctest.h"

#include "aqft/adders.hpp"
#include "aqft/layering.hpp"
#include "aqft/qft.hpp"

#include <cmath>
#include <numbers>

using namespace aqft;

namespace {

int count_t(const Circuit& c) {
  int t = 0;
  for (const auto& g : c.gates()) t += g.is_t_like();
  return t;
}

SparseState basis_input(const Circuit& c, const std::map<std::string, std::uint64_t>& values) {
  SparseState s(c.num_qubits());
  for (const auto& [name, v] : values) {
    const auto& r = c.reg(name);
    for (std::size_t b = 0; b < r.qubits.size(); ++b)
      if ((v >> b) & 1) s.apply_x(r.qubits[b]);
  }
  return s;
}

std::uint64_t read(const Circuit& c, const std::string& name, std::uint64_t key) {
  std::uint64_t v = 0;
  const auto& r = c.reg(name);
  for (std::size_t b = 0; b < r.qubits.size(); ++b)
    if ((key >> r.qubits[b]) & 1) v |= std::uint64_t{1} << b;
  return v;
}

}  // namespace

TEST_CASE("AND gadget truth table with unit amplitude") {
  auto c = build_and_gadget(false);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      auto r = simulate(c, basis_input(c, {{"a", a}, {"b", b}}), MeasurementPolicy::seeded(0));
      REQUIRE(r.state.support() == 1);
      auto key = r.state.keys()[0];
      CHECK(read(c, "t", key) == static_cast<std::uint64_t>(a & b));
      CHECK(read(c, "a", key) == static_cast<std::uint64_t>(a));
      CHECK(std::abs(r.state.amps()[0] - Complex(1, 0)) < 1e-12);
    }
}

TEST_CASE("AND gadget cost") {
  auto c = build_and_gadget(false);
  CHECK(count_t(c) == 4);
  CHECK(t_depth(c) == 2.0);
  for (auto style : {UncomputeStyle::MeasureBased, UncomputeStyle::CoherentReference}) {
    auto full = build_and_gadget(true, style);
    CHECK(count_t(full) == 4);
  }
}

TEST_CASE("AND compute then uncompute is the identity") {
  for (auto style : {UncomputeStyle::MeasureBased, UncomputeStyle::CoherentReference}) {
    auto c = build_and_gadget(true, style);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      EffectiveOperatorOptions opts;
      opts.policy = MeasurementPolicy::seeded(seed);
      // treat a and b jointly by viewing them through a 2-qubit unitary check per basis input
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          auto r = simulate(c, basis_input(c, {{"a", a}, {"b", b}}), opts.policy);
          REQUIRE(r.state.support() == 1);
          CHECK(read(c, "t", r.state.keys()[0]) == 0);
          CHECK(std::abs(r.state.amps()[0] - Complex(1, 0)) < 1e-12);
        }
    }
  }
}

TEST_CASE("adder matches the classical oracle") {
  for (auto style : {UncomputeStyle::MeasureBased, UncomputeStyle::CoherentReference})
    for (int w = 1; w <= 4; ++w) {
      auto c = build_adder({w, style});
      for (std::uint64_t x = 0; x < (1u << w); ++x)
        for (std::uint64_t y = 0; y < (1u << w); ++y) {
          auto r = simulate(c, basis_input(c, {{"x", x}, {"y", y}}), MeasurementPolicy::seeded(x * 31 + y));
          REQUIRE(r.state.support() == 1);
          auto key = r.state.keys()[0];
          auto [ex, ey] = classical_adder_oracle(w, x, y);
          CHECK(read(c, "x", key) == ex);
          CHECK(read(c, "y", key) == ey);
          if (w > 1) CHECK(read(c, "carry", key) == 0);
          CHECK(std::abs(r.state.amps()[0] - Complex(1, 0)) < 1e-12);
        }
    }
}

TEST_CASE("adder cost is 4(w-1) T and 2(w-1) T-depth") {
  for (int w = 1; w <= 10; ++w) {
    auto c = build_adder({w, UncomputeStyle::MeasureBased});
    CHECK(count_t(c) == adder_t_count(w));
    CHECK(t_depth(c) == adder_t_depth(w));
  }
  CHECK(adder_t_count(5) == 16);
  CHECK(adder_t_depth(5) == 8);
  CHECK(adder_t_depth(4) == 6);
}

TEST_CASE("adding into the gradient state kicks back the inverse gradient") {
  for (int b = 1; b <= 4; ++b) {
    auto c = pgt_via_addition(b);
    auto inputs = zero_inputs(c, "data");
    inputs["catalyst"] = psi_state(b);
    auto eff = effective_operator(c, "data", inputs);
    CHECK(eff.min_restoration() > 1 - 1e-10);
    CHECK(spectral_distance(eff.matrix, unitary_of(build_inverse_pgt_layer(b)), true) < 1e-9);
  }
}

TEST_CASE("adder handles superposed operands") {
  auto c = build_adder({3, UncomputeStyle::MeasureBased});
  SparseState s(c.num_qubits());
  for (int q : c.reg("x").qubits) s.apply_h(q);
  for (int q : c.reg("y").qubits) s.apply_h(q);
  auto r = simulate(c, s, MeasurementPolicy::seeded(5));
  CHECK(r.state.support() == 64);
  for (std::size_t e = 0; e < r.state.keys().size(); ++e) {
    CHECK(read(c, "carry", r.state.keys()[e]) == 0);
    CHECK(std::abs(r.state.amps()[e] - Complex(0.125, 0)) < 1e-12);
  }
}

TEST_CASE("measure-based uncompute rewrites to the coherent form") {
  for (int w = 2; w <= 3; ++w) {
    auto m = build_adder({w, UncomputeStyle::MeasureBased});
    auto rewritten = with_coherent_uncompute(m);
    CHECK(rewritten.is_coherent());
    CHECK(spectral_distance(unitary_of(rewritten), unitary_of(build_adder({w, UncomputeStyle::CoherentReference})),
                            false) < 1e-12);
  }
  Circuit bad;
  bad.add_register("q", RegisterRole::Data, 1);
  bad.measure_z(0, bad.add_bit());
  CHECK_THROWS_AS(with_coherent_uncompute(bad), Error);
}
