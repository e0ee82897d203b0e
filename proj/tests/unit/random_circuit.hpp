#pragma once

#include "aqft/circuit.hpp"

#include <random>

// Random coherent Clifford+T+Rz circuit on one register "data".
inline aqft::Circuit random_circuit(int n, int gates, std::uint64_t seed, bool with_crk = true) {
  using aqft::DyadicAngle;
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  aqft::Circuit c;
  c.add_register("data", aqft::RegisterRole::Data, n);
  for (int i = 0; i < gates; ++i) {
    int a = pick(0, n - 1);
    int b = (a + pick(1, std::max(1, n - 1))) % n;
    int kind = pick(0, n > 1 ? (with_crk ? 10 : 9) : 6);
    switch (kind) {
      case 0: c.h(a); break;
      case 1: c.x(a); break;
      case 2: c.s(a); break;
      case 3: c.t(a); break;
      case 4: c.tdg(a); break;
      case 5: c.rz(a, DyadicAngle(aqft::BigInt(pick(-31, 31)), static_cast<unsigned>(pick(0, 5)))); break;
      case 6: c.z(a); break;
      case 7: c.cnot(a, b); break;
      case 8: c.cz(a, b); break;
      case 9: c.swap(a, b); break;
      default: c.crk(pick(2, 5), a, b); break;
    }
  }
  return c;
}
