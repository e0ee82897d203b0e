#include "doctest.h"

#include "aqft/adders.hpp"
#include "aqft/analysis.hpp"
#include "aqft/qft.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

using namespace aqft;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("census of a 5-bit adder") {
  auto r = census(build_adder({5, UncomputeStyle::MeasureBased}), 1e-3);
  CHECK(r.t_count == 16);
  CHECK(r.t_depth == 8);
  CHECK(r.t_gates == 16);
  CHECK(r.synth_leaves == 0);
}

TEST_CASE("Clifford-only census") {
  Circuit c;
  c.add_register("q", RegisterRole::Data, 3);
  c.z(0);
  c.s(1);
  c.cnot(0, 2);
  c.h(2);
  auto r = census(c, 0.1);
  CHECK(r.t_count == 0);
  CHECK(r.t_depth == 0);
  CHECK(r.by_kind["CNOT"] == 1);
}

TEST_CASE("psi prep leaves") {
  auto r = census(build_psi_prep(5), 1e-3);
  CHECK(r.synth_leaves == 2);
  CHECK(r.t_gates == 1);
  CHECK(r.t_count == doctest::Approx(1 + 2 * 1.15 * std::log2(1e3)));
}

TEST_CASE("closed-form T-count") {
  auto t = closed_form_tcount(5, 0.625, 3);
  CHECK(t.adders() == 4 * 3 * 5 + 2 * 4 * 1);
  auto big = closed_form_tcount(256, 1e-3, 18);
  CHECK(big.full_width == 17352);
  CHECK(big.tail == 2 * 19 * 16);
  CHECK(big.leading == doctest::Approx(4 * 256 * std::log2(256 / 1e-3)));
  CHECK(big.leading == doctest::Approx(18432).epsilon(0.01));

  double prev = 1e9;
  for (int k : {10, 14, 18}) {
    const int n = 1 << k;
    const int b = bits_for(n, 1e-3);
    auto x = closed_form_tcount(n, 1e-3, b);
    const double gap = std::abs(x.deterministic() / x.leading - 1);
    CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("closed-form T-depth") {
  auto d = closed_form_tdepth(5, 0.625, 3);
  CHECK(d.adders == 17);
  double prev = 1e9;
  for (int k : {10, 14, 18}) {
    const int n = 1 << k;
    auto x = closed_form_tdepth(n, 1e-3, bits_for(n, 1e-3));
    const double gap = std::abs(x.deterministic() / x.leading - 1);
    CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("baseline is twice the leading order") {
  for (int n : {3, 17, 200})
    for (double eps : {0.5, 1e-3}) {
      auto base = baseline_ref10(n, eps);
      const double lead = n * std::log2(n / eps);
      CHECK(base.t_count / (4 * lead) == doctest::Approx(2.0));
      CHECK(base.t_depth / lead == doctest::Approx(2.0));
    }
  CHECK(baseline_ref10(5, 0.625).t_count == doctest::Approx(120));
}

TEST_CASE("census matches the closed form") {
  for (int n = 8; n <= 24; n += 4)
    for (int b = 4; b <= 6; ++b) {
      if (n > (1 << b)) continue;
      auto a = build_aqft(AqftParams::from_bits(n, b));
      auto r = census(a);
      const auto& t = *r.closed_form_tcount;
      CHECK(std::abs(r.t_count - t.deterministic()) <= t.slack);
      int adder_t = 0;
      for (const auto& [tag, count] : r.by_tag)
        if (tag.rfind("adder:", 0) == 0) {
          for (const auto& g : a.circuit.gates()) adder_t += g.tag == tag && g.is_t_like();
        }
      CHECK(adder_t == t.adders());
      CHECK(r.inventory == expected_inventory(n, b));
    }
}

TEST_CASE("T-depth grows like the closed form in n") {
  // the offset depends on b and on the parity of n (even n adds the lone block)
  for (int b = 4; b <= 6; ++b)
    for (int parity = 0; parity <= 1; ++parity) {
      std::vector<double> offsets;
      for (int n = 10 + parity; n <= 17 && n <= (1 << b); n += 2) {
        auto r = census(build_aqft(AqftParams::from_bits(n, b)));
        offsets.push_back(r.t_depth - r.closed_form_tdepth->deterministic());
      }
      for (double o : offsets) CHECK(o == doctest::Approx(offsets.front()));
      MESSAGE("b=" << b << std::string(parity ? " odd" : " even") << " n: census minus closed-form T-depth "
                   << offsets.front());
    }
}

TEST_CASE("error budget bounds") {
  RemovedGateLedger one;
  one.entries.push_back({"x", 0, DyadicAngle::pi_over_pow2(2, true)});
  CHECK(one.bound() == doctest::Approx(std::abs(1.0 - std::polar(1.0, kPi / 4))));
  CHECK(one.bound() == doctest::Approx(0.7654).epsilon(1e-4));
  CHECK(one.bound() < kPi / 4);

  auto e = error_budget(build_aqft(AqftParams::from_bits(8, 4)));
  CHECK(e.pruning_bound == doctest::Approx(kPi * 7 / 16));
  CHECK(e.pruning_bound < kPi * 0.5);
  CHECK(e.ledger_bound <= e.ledger_angle_bound);
  CHECK(e.ledger_angle_bound <= e.pruning_bound);
  CHECK(e.total_bound <= e.epsilon_bound);
  CHECK_FALSE(e.exact_error.has_value());
}

TEST_CASE("simulated error of a small artifact") {
  ErrorBudgetOptions opts;
  opts.simulate = true;
  auto e = error_budget(build_aqft(AqftParams::from_bits(4, 4)), opts);
  REQUIRE(e.exact_error.has_value());
  CHECK(*e.exact_error <= e.ledger_bound + 1e-9);
  CHECK(*e.restoration >= 1 - 1e-10);

  opts.width_cap = 3;
  CHECK_THROWS_AS(error_budget(build_aqft(AqftParams::from_bits(4, 4)), opts), Error);
}

TEST_CASE("CSV rows are stable") {
  auto a = build_aqft(AqftParams::from_bits(8, 4));
  auto r = census(a);
  auto e = error_budget(a);
  const auto row = csv_row(a.params, r, e);
  CHECK(row == csv_row(a.params, census(build_aqft(AqftParams::from_bits(8, 4))), e));
  int commas_header = 0, commas_row = 0;
  for (char ch : csv_header()) commas_header += ch == ',';
  for (char ch : row) commas_row += ch == ',';
  CHECK(commas_header == commas_row);
}

TEST_CASE("artifact without final swaps is the bit-reversed DFT") {
  auto p = AqftParams::unpruned(3);
  p.final_swaps = false;
  auto a = build_aqft(p);
  for (const auto& g : a.circuit.gates()) CHECK(g.kind != GateKind::SWAP);
  auto op = artifact_operator(a, MeasurementPolicy::seeded(1));
  CHECK(spectral_distance(op.matrix, reference_operator(p), true) < 1e-8);
  CHECK(spectral_distance(op.matrix, dft_matrix(3), true) > 0.1);
}
