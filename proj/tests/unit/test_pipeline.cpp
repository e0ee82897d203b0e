#include "doctest.h"

#include "aqft/layering.hpp"
#include "aqft/pipeline.hpp"
#include "aqft/qft.hpp"

#include <cmath>
#include <set>

using namespace aqft;

namespace {

int count_kind(const Circuit& c, GateKind k) {
  int n = 0;
  for (const auto& g : c.gates()) n += g.kind == k;
  return n;
}

int count_t(const Circuit& c) {
  int n = 0;
  for (const auto& g : c.gates()) n += g.is_t_like();
  return n;
}

int count_tag(const Circuit& c, const std::string& tag) {
  int n = 0;
  for (const auto& g : c.gates()) n += g.tag == tag;
  return n;
}

OperatorMatrix data_operator(const Circuit& c, const std::map<std::string, StateVector>& expected = {}) {
  EffectiveOperatorOptions opts;
  opts.expected_outputs = expected;
  return effective_operator(c, "data", zero_inputs(c, "data"), opts).matrix;
}

std::map<std::string, StateVector> catalyst_outputs(const AqftArtifact& a) {
  return {{"catalyst_a", psi_state(a.params.b + 1)}, {"catalyst_b", psi_state(a.params.b + 1)}};
}

Stage staged(int n, int up_to, const AqftParams& p, RemovedGateLedger* ledger = nullptr) {
  auto subs = step1_reorder_and_partition(build_standard_qft({n, false}));
  std::vector<Stage> t;
  for (const auto& s : subs) t.push_back(step2_transform_subcircuit(s));
  Stage s = step34_assemble_and_split(t);
  RemovedGateLedger local;
  if (up_to >= 5) s = step5_prune(s, p, ledger ? *ledger : local);
  if (up_to >= 6) s = step6_complete_pgt(s, p);
  return s;
}

}  // namespace

TEST_CASE("b is the ceiling of log2(n / epsilon)") {
  CHECK(bits_for(5, 5.0 / 8) == 3);
  CHECK(bits_for(4, 0.25) == 4);
  CHECK(bits_for(6, 0.09375) == 6);
  CHECK(bits_for(32, 1e-3) == 15);
  CHECK(bits_for(256, 1e-3) == 18);
  CHECK(bits_for(6, 6.0 / 32 + 1e-12) == 5);
  CHECK(bits_for(6, 6.0 / 32 - 1e-12) == 6);
  for (int n = 2; n < 40; ++n)
    for (int b = 1; b < 30; ++b) CHECK(bits_for(n, std::ldexp(double(n), -b)) == b);
}

TEST_CASE("parameter gate") {
  CHECK_THROWS_AS(AqftParams::from_bits(5, 3).validate(), Error);
  auto fig = AqftParams::from_bits(5, 3);
  fig.figure_compat = true;
  CHECK_NOTHROW(fig.validate());
  CHECK_NOTHROW(AqftParams::from_bits(8, 4).validate());
  CHECK_THROWS_AS(AqftParams::from_epsilon(1, 0.1).validate(), Error);
  CHECK_THROWS_AS(AqftParams::from_epsilon(4, 1.5).validate(), Error);
  CHECK_NOTHROW(AqftParams::from_bits(16, 4).validate());
  CHECK_NOTHROW(AqftParams::unpruned(3).validate());
}

TEST_CASE("step 1 partition") {
  CHECK(step1_reorder_and_partition(build_standard_qft({2, false})).size() == 1);
  CHECK(step1_reorder_and_partition(build_standard_qft({5, false})).size() == 2);
  CHECK(step1_reorder_and_partition(build_standard_qft({6, true})).size() == 3);
  CHECK_THROWS_AS(step1_reorder_and_partition(decompose_crk(build_standard_qft({4, false}))), Error);
  for (int n = 2; n <= 6; ++n) {
    auto qft = build_standard_qft({n, false});
    auto subs = step1_reorder_and_partition(qft);
    Circuit joined;
    joined.add_register("data", RegisterRole::Data, n);
    std::size_t gates = 0;
    for (const auto& s : subs) {
      joined.append(s.circuit);
      gates += s.circuit.gates().size();
    }
    CHECK(gates == qft.gates().size());
    CHECK(spectral_distance(unitary_of(joined), unitary_of(qft), true) < 1e-10);
  }
}

TEST_CASE("step 2 preserves each subcircuit") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& s : step1_reorder_and_partition(build_standard_qft({n, false}))) {
      auto t = step2_transform_subcircuit(s);
      CHECK(count_kind(t.circuit, GateKind::CRk) == 0);
      CHECK(count_kind(t.circuit, GateKind::CCZ) == 0);
      CHECK(spectral_distance(data_operator(t.circuit), unitary_of(s.circuit), true) < 1e-9);
    }
}

TEST_CASE("steps 3 and 4 keep the QFT") {
  for (int n = 2; n <= 6; ++n) {
    auto s = staged(n, 4, AqftParams::unpruned(n));
    CHECK(spectral_distance(data_operator(s.circuit), unitary_of(build_standard_qft({n, false})), true) < 1e-9);
    for (const auto& g : s.circuit.gates())
      if (g.tag == "layer:first" || g.tag == "layer:last") CHECK(g.kind == GateKind::Rz);
  }
}

TEST_CASE("step 5 removes exactly the small rotations") {
  auto p = AqftParams::from_bits(8, 4);
  RemovedGateLedger ledger;
  auto before = staged(8, 4, p);
  auto after = staged(8, 5, p, &ledger);
  CHECK(before.circuit.gates().size() - after.circuit.gates().size() == ledger.entries.size());
  for (const auto& e : ledger.entries) CHECK(e.angle.abs_less_than_pi_over_pow2(4));
  for (const auto& g : after.circuit.gates())
    if (g.kind == GateKind::Rz) CHECK_FALSE(g.angle.abs_less_than_pi_over_pow2(4));
  // pi/16 itself stays
  bool boundary_kept = false;
  for (const auto& g : after.circuit.gates())
    boundary_kept = boundary_kept || (g.kind == GateKind::Rz && g.angle.is_neg_pi_over_pow2(4));
  CHECK(boundary_kept);

  RemovedGateLedger none;
  auto u = AqftParams::unpruned(5);
  CHECK(staged(5, 5, u, &none).circuit == staged(5, 4, u).circuit);
  CHECK(none.entries.empty());
}

TEST_CASE("step 6 completes layers without changing the operator") {
  for (int n = 3; n <= 6; ++n)
    for (bool prune : {false, true}) {
      auto p = prune ? AqftParams::from_bits(n, 3) : AqftParams::unpruned(n);
      p.figure_compat = true;
      auto s5 = staged(n, 5, p);
      auto s6 = staged(n, 6, p);
      CHECK(spectral_distance(data_operator(s5.circuit), data_operator(s6.circuit), true) < 1e-9);
      MESSAGE("n=" << n << " prune=" << prune << " T delta " << count_t(s6.circuit) - count_t(s5.circuit));
    }
}

TEST_CASE("unpruned artifact equals the DFT") {
  for (int n = 2; n <= 4; ++n) {
    auto a = build_aqft(AqftParams::unpruned(n));
    auto u = data_operator(a.circuit, catalyst_outputs(a));
    CHECK(spectral_distance(u, dft_matrix(n), true) < 1e-8);
    CHECK(count_kind(a.circuit, GateKind::CRk) == 0);
    CHECK(count_kind(a.circuit, GateKind::CCZ) == 0);
  }
}

TEST_CASE("inventory law") {
  for (int n = 5; n <= 16; ++n)
    for (int b = 4; b <= 6; ++b) {
      if (b > n) continue;
      auto a = build_aqft(AqftParams::from_bits(n, b));
      CHECK(a.inventory == expected_inventory(n, b));
    }
}

TEST_CASE("fan-out reordering keeps each subcircuit") {
  for (int n = 4; n <= 6; ++n)
    for (const auto& s : step1_reorder_and_partition(build_standard_qft({n, false}))) {
      if (s.kind != BlockKind::Pair) continue;
      for (FanoutShift f : {FanoutShift{1, -1, {}, false}, FanoutShift{-2, 2, {}, true}}) {
        auto t = step2_transform_subcircuit(s, 5, f);
        CHECK(spectral_distance(data_operator(t.circuit), unitary_of(s.circuit), true) < 1e-9);
      }
      std::vector<int> order;
      for (int c = s.wire + 2; c <= n; ++c) order.push_back(c);
      auto t = step2_transform_subcircuit(s, 5, {0, 0, order, false});
      CHECK(spectral_distance(data_operator(t.circuit), unitary_of(s.circuit), true) < 1e-9);
    }
}

TEST_CASE("paired adders share their T-layers") {
  auto misaligned = [](int n, int b) {
    auto a = build_aqft(AqftParams::from_bits(n, b));
    auto dag = layer_dag(a.circuit);
    auto layers_of = [&](const AdderRecord& r) {
      std::vector<std::size_t> idx;
      for (auto i = r.gate_begin; i < r.gate_end; ++i) idx.push_back(i);
      auto v = t_layers(a.circuit, dag, idx);
      return std::set<std::size_t>(v.begin(), v.end());
    };
    int bad = 0;
    for (auto [ra, rb] : a.pairs()) {
      auto sa = layers_of(*ra), sb = layers_of(*rb);
      auto u = sa;
      u.insert(sb.begin(), sb.end());
      bad += u.size() != std::max(sa.size(), sb.size());
    }
    return bad;
  };
  CHECK(misaligned(8, 4) == 0);
  int total = 0;
  for (int n = 5; n <= 16; ++n)
    for (int b = 4; b <= 6 && b <= n; ++b) total += misaligned(n, b);
  MESSAGE("misaligned pairs over n = 5..16, b = 4..6: " << total);
}
