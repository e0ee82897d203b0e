#include "aqft/pipeline.hpp"

#include "aqft/layering.hpp"
#include "aqft/qft.hpp"
#include "aqft/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace aqft {

namespace {

constexpr int kPadWidth = 3;

std::string layer_tag(const std::string& id) { return "layer:" + id; }

DyadicAngle pi_over(int k, bool negative = false) {
  return DyadicAngle::pi_over_pow2(static_cast<unsigned>(k), negative);
}

// Fresh circuit with the registers of `layout`, plus optional extras.
Circuit same_layout(const Circuit& layout) {
  Circuit c;
  for (const auto& r : layout.registers())
    c.add_register(r.name, r.role, static_cast<int>(r.qubits.size()));
  for (int b = 0; b < layout.num_bits(); ++b) c.add_bit();
  return c;
}

Circuit data_circuit(int n) {
  Circuit c;
  c.add_register("data", RegisterRole::Data, n);
  if (n >= 3) c.add_register("copy", RegisterRole::ZeroAncilla, n - 1);
  return c;
}

// contiguous [begin, end) of the gates tagged `tag`; throws if scattered
std::pair<std::size_t, std::size_t> segment(const Circuit& c, const std::string& tag) {
  std::size_t begin = c.gates().size(), end = 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < c.gates().size(); ++i)
    if (c.gates()[i].tag == tag) {
      begin = std::min(begin, i);
      end = i + 1;
      ++count;
    }
  if (count == 0) return {0, 0};
  if (end - begin != count) throw Error("gates of " + tag + " are not contiguous");
  return {begin, end};
}

}  // namespace

int bits_for(int n, double epsilon) {
  if (n < 1 || !(epsilon > 0)) throw Error("bits_for: need n >= 1 and epsilon > 0");
  int b = static_cast<int>(std::ceil(std::log2(static_cast<double>(n) / epsilon)));
  // settle rounding in log2 with exact power-of-two scaling
  while (std::ldexp(epsilon, b - 1) >= n) --b;
  while (std::ldexp(epsilon, b) < n) ++b;
  return b;
}

AqftParams AqftParams::from_epsilon(int n, double epsilon) {
  AqftParams p;
  p.n = n;
  p.epsilon = epsilon;
  p.b = bits_for(n, epsilon);
  return p;
}

AqftParams AqftParams::from_bits(int n, int b) {
  AqftParams p;
  p.n = n;
  p.b = b;
  p.epsilon = std::ldexp(static_cast<double>(n), -b);
  return p;
}

AqftParams AqftParams::unpruned(int n) {
  AqftParams p = from_bits(n, n);
  p.prune = false;
  return p;
}

void AqftParams::validate() const {
  if (n < 2) throw Error("n must be >= 2");
  if (!(epsilon > 0) || !(epsilon <= 1)) throw Error("epsilon must lie in (0, 1]");
  if (!prune) return;
  if (b != bits_for(n, epsilon)) throw Error("b disagrees with ceil(log2(n/epsilon))");
  const int min_b = figure_compat ? 3 : 4;
  if (b < min_b)
    throw Error("b = " + std::to_string(b) + " is below " + std::to_string(min_b) +
                "; the error bound needs b >= 4");
}

double RemovedGateLedger::bound() const {
  double s = 0;
  for (const auto& e : entries) s += std::abs(Complex(1, 0) - std::polar(1.0, e.angle.to_radians()));
  return s;
}

const char* to_string(LayerKind k) {
  switch (k) {
    case LayerKind::First: return "first";
    case LayerKind::Last: return "last";
    case LayerKind::Lone: return "lone";
    case LayerKind::A: return "A";
    case LayerKind::B: return "B";
  }
  return "?";
}

std::vector<std::pair<const AdderRecord*, const AdderRecord*>> AqftArtifact::pairs() const {
  std::vector<std::pair<const AdderRecord*, const AdderRecord*>> out;
  for (const auto& a : adders) {
    if (a.kind != LayerKind::A) continue;
    for (const auto& b : adders)
      if (b.kind == LayerKind::B && b.block == a.block) out.emplace_back(&a, &b);
  }
  return out;
}

std::map<int, int> expected_inventory(int n, int b) {
  std::map<int, int> inv;
  inv[b + 1] = n - b + 3;
  for (int w = b; w >= 3; --w) inv[w] += 1;
  return inv;
}

// ---------------------------------------------------------------- step 1

std::vector<Subcircuit> step1_reorder_and_partition(const Circuit& qft) {
  const Register* data = qft.find_register("data");
  if (!data || qft.registers().size() != 1) throw Error("step 1: expected a lone data register");
  const int n = static_cast<int>(data->qubits.size());
  if (!(qft == build_standard_qft({n, false})) && !(qft == build_standard_qft({n, true})))
    throw Error("step 1: input is not a standard QFT circuit");

  auto w = [n](int i) { return qft_wire(n, i); };
  std::vector<Subcircuit> out;
  auto fresh = [&](BlockKind kind, int wire) {
    Subcircuit s;
    s.circuit.add_register("data", RegisterRole::Data, n);
    s.kind = kind;
    s.index = static_cast<int>(out.size());
    s.wire = wire;
    return s;
  };

  int i = 1;
  if (n % 2 == 0 || n == 1) {
    auto s = fresh(BlockKind::Lone, 1);
    s.circuit.h(w(1));
    for (int c = 2; c <= n; ++c) s.circuit.crk(c, w(c), w(1));
    out.push_back(std::move(s));
    i = 2;
  }
  for (; i + 1 <= n - 1; i += 2) {
    auto s = fresh(BlockKind::Pair, i);
    s.circuit.h(w(i));
    s.circuit.crk(2, w(i + 1), w(i));
    s.circuit.h(w(i + 1));  // moved left past the remaining CRk on wire i
    for (int c = i + 2; c <= n; ++c) s.circuit.crk(c - i + 1, w(c), w(i));
    for (int c = i + 2; c <= n; ++c) s.circuit.crk(c - i, w(c), w(i + 1));
    out.push_back(std::move(s));
  }
  if (n >= 2) {
    out.back().circuit.h(w(n));
    out.back().has_trailing_h = true;
  }
  return out;
}

// ---------------------------------------------------------------- step 2

Stage step2_transform_subcircuit(const Subcircuit& sub, int width_cap, FanoutShift shift) {
  const int n = sub.circuit.num_qubits();
  const int i = sub.wire;
  auto w = [n](int k) { return qft_wire(n, k); };
  Stage st;
  st.circuit = data_circuit(n);
  Circuit& c = st.circuit;
  auto m = [&](int ctl) { return c.reg("copy").qubits[ctl - 2]; };

  // CRk halves on controls gather before the block, halves on targets after.
  std::map<int, DyadicAngle> pre, post;
  if (sub.kind == BlockKind::Lone) {
    for (int k = 2; k <= n; ++k) {
      pre[k] = pre[k] + pi_over(k);
      post[1] = post[1] + pi_over(k);
    }
  } else {
    pre[i + 1] = pre[i + 1] + pi_over(2);
    post[i] = post[i] + pi_over(2);
    for (int k = i + 2; k <= n; ++k) {
      pre[k] = pre[k] + pi_over(k - i + 1) + pi_over(k - i);
      post[i] = post[i] + pi_over(k - i + 1);
      post[i + 1] = post[i + 1] + pi_over(k - i);
    }
  }
  for (auto& [wire, a] : pre)
    if (!a.is_zero()) c.rz(w(wire), a, "pre");

  if (sub.kind == BlockKind::Lone) {
    LayerInfo L{"lone", LayerKind::Lone, sub.index, {{1, w(1)}}, 0};
    c.h(w(1));
    for (int k = 2; k <= n; ++k) c.cnot(w(1), w(k));
    for (int k = 2; k <= n; ++k) {
      c.rz(w(k), pi_over(k, true), layer_tag(L.id));
      L.slots[k] = w(k);
    }
    for (int k = n; k >= 2; --k) c.cnot(w(1), w(k));
    if (n >= 2) st.layers.push_back(std::move(L));
  } else {
    const std::string idx = std::to_string(sub.index);
    LayerInfo A{"A" + idx, LayerKind::A, sub.index, {{2, w(i)}}, 0};
    LayerInfo B{"B" + idx, LayerKind::B, sub.index, {{1, w(i + 1)}}, 0};
    c.h(w(i));
    if (i + 2 <= n && !shift.parity_in_place) {
      // CR2 parity on a copy qubit, so w_i and w_{i+1} free up together
      const int p = m(i + 1);
      c.cnot(w(i + 1), p);
      c.cnot(w(i), p);
      c.tdg(p, "non-pgt-T");  // Rz(-pi/4) up to phase
      c.cnot(w(i + 1), p);
      c.h(w(i + 1));
      c.cnot(w(i), p);
    } else {
      c.cnot(w(i), w(i + 1));
      c.tdg(w(i + 1), "non-pgt-T");
      c.cnot(w(i), w(i + 1));
      c.h(w(i + 1));
    }
    for (int k = i + 2; k <= n; ++k) c.cnot(w(k), m(k));
    // Fan-outs run in descending order, except that the controls feeding the
    // two adders' top inputs sit at the same chain position, moved earlier by
    // the shift.
    std::vector<int> a_order, b_order;
    for (int k = n; k >= i + 2; --k) a_order.push_back(k);
    b_order = a_order;
    if (width_cap > 0) {
      const int wa = std::min(n - i + 1, width_cap - 1) + 1;
      const int wb = std::min(n - i, width_cap - 1) + 1;
      const int ca = i + wa - 2, cb = i + wb - 1;
      auto place = [&](std::vector<int>& order, int ctl, int pos) {
        auto it = std::find(order.begin(), order.end(), ctl);
        if (it == order.end()) return;
        order.erase(it);
        pos = std::clamp(pos, 0, static_cast<int>(order.size()));
        order.insert(order.begin() + pos, ctl);
      };
      place(a_order, ca, n - ca - shift.a);
      place(b_order, cb, n - ca - shift.b);
    }
    if (!shift.b_order.empty()) {
      if (!std::is_permutation(shift.b_order.begin(), shift.b_order.end(), b_order.begin(), b_order.end()))
        throw Error("step 2: b_order is not a permutation of the fan-out wires");
      b_order = shift.b_order;
    }
    for (std::size_t t = 0; t < a_order.size(); ++t) {
      c.cnot(w(i), w(a_order[t]));
      c.cnot(w(i + 1), m(b_order[t]));
    }
    for (int k = i + 2; k <= n; ++k) {
      c.rz(w(k), pi_over(k - i + 1, true), layer_tag(A.id));
      A.slots[k - i + 1] = w(k);
    }
    for (int k = i + 2; k <= n; ++k) {
      c.rz(m(k), pi_over(k - i, true), layer_tag(B.id));
      B.slots[k - i] = m(k);
    }
    for (std::size_t t = a_order.size(); t-- > 0;) {
      c.cnot(w(i + 1), m(b_order[t]));
      c.cnot(w(i), w(a_order[t]));
    }
    for (int k = n; k >= i + 2; --k) c.cnot(w(k), m(k));
    if (i + 2 <= n) {
      st.layers.push_back(std::move(A));
      st.layers.push_back(std::move(B));
    }
  }

  for (auto& [wire, a] : post)
    if (!a.is_zero()) c.rz(w(wire), a, "post");
  if (sub.has_trailing_h) c.h(w(n));
  return st;
}

// ---------------------------------------------------------------- steps 3 and 4

Stage step34_assemble_and_split(const std::vector<Stage>& subs) {
  if (subs.empty()) throw Error("step 3: nothing to assemble");
  const Circuit& layout = subs.front().circuit;
  const int n = static_cast<int>(layout.reg("data").qubits.size());
  std::map<int, DyadicAngle> first, last;  // by qubit
  for (const auto& s : subs)
    for (const auto& g : s.circuit.gates()) {
      if (g.tag == "pre") first[g.qubits[0]] = first[g.qubits[0]] + g.angle;
      if (g.tag == "post") last[g.qubits[0]] = last[g.qubits[0]] + g.angle;
    }

  Stage st;
  st.circuit = same_layout(layout);
  Circuit& c = st.circuit;
  LayerInfo F{"first", LayerKind::First, -1, {}, 0};
  LayerInfo L{"last", LayerKind::Last, -1, {}, 0};

  // Every angle must be (2^(k-1) - 1) pi / 2^k = pi/2 - pi/2^k; it splits into
  // S and Rz(-pi/2^k).
  auto split = [&](std::map<int, DyadicAngle>& angles, const std::vector<std::pair<int, int>>& wires,
                   LayerInfo& info) {
    std::vector<std::pair<int, int>> rot;
    for (auto [qubit, k] : wires) {
      DyadicAngle a = angles.count(qubit) ? angles[qubit] : DyadicAngle::zero();
      if (!(a == pi_over(1) - pi_over(k)))
        throw Error("step 3: angle " + a.to_string() + " on qubit " + std::to_string(qubit) +
                    " is not (2^(k-1)-1)pi/2^k with k = " + std::to_string(k));
      info.slots[k] = qubit;
      if (k > 1) rot.emplace_back(qubit, k);
    }
    for (auto [qubit, k] : rot) c.s(qubit, "split");
    for (auto [qubit, k] : rot) c.rz(qubit, pi_over(k, true), layer_tag(info.id));
  };
  std::vector<std::pair<int, int>> first_wires, last_wires;
  for (int j = 1; j <= n; ++j) {
    first_wires.emplace_back(qft_wire(n, j), j);
    last_wires.emplace_back(qft_wire(n, j), n - j + 1);
  }
  split(first, first_wires, F);
  for (const auto& s : subs) {
    for (const auto& g : s.circuit.gates())
      if (g.tag != "pre" && g.tag != "post") c.append(g);
    st.layers.insert(st.layers.end(), s.layers.begin(), s.layers.end());
  }
  split(last, last_wires, L);
  st.layers.insert(st.layers.begin(), std::move(F));
  st.layers.push_back(std::move(L));
  return st;
}

// ---------------------------------------------------------------- step 5

Stage step5_prune(const Stage& s, const AqftParams& p, RemovedGateLedger& ledger) {
  Stage st;
  st.circuit = same_layout(s.circuit);
  st.layers = s.layers;
  for (const auto& g : s.circuit.gates()) {
    if (p.prune && g.kind == GateKind::Rz &&
        g.angle.abs_less_than_pi_over_pow2(static_cast<unsigned>(p.b))) {
      std::string layer = g.tag.rfind("layer:", 0) == 0 ? g.tag.substr(6) : g.tag;
      ledger.entries.push_back({layer, g.qubits[0], g.angle});
      continue;
    }
    st.circuit.append(g);
  }
  return st;
}

// ---------------------------------------------------------------- step 6

Stage step6_complete_pgt(const Stage& s, const AqftParams& /*p*/) {
  Stage st;
  st.circuit = same_layout(s.circuit);
  const auto pad = st.circuit.add_register("pad", RegisterRole::ZeroAncilla, kPadWidth).qubits;
  st.layers = s.layers;

  struct Completion {
    std::vector<Gate> inserted;
    std::vector<Gate> nullifiers;
  };
  std::map<std::string, Completion> todo;  // by layer tag

  for (auto& L : st.layers) {
    const std::string tag = layer_tag(L.id);
    auto [begin, end] = segment(s.circuit, tag);
    if (begin == end) continue;
    std::set<int> present;
    for (std::size_t i = begin; i < end; ++i) {
      const Gate& g = s.circuit.gates()[i];
      int e = -1;
      for (auto& [slot, q] : L.slots)
        if (q == g.qubits[0] && g.angle.is_neg_pi_over_pow2(static_cast<unsigned>(slot))) e = slot;
      if (e < 0) throw Error("step 6: gate in " + L.id + " does not fit a gradient slot");
      present.insert(e);
    }
    L.width = *present.rbegin() + 1;
    int next_pad = L.kind == LayerKind::B ? 2 : 0;
    Completion& comp = todo[tag];
    for (int e = L.width - 1; e >= 0; --e) {
      if (present.count(e)) continue;
      if (e > 2) throw Error("step 6: layer " + L.id + " misses a non-Clifford+T slot");
      if (!L.slots.count(e) || e == 0) {
        if (next_pad >= kPadWidth) throw Error("step 6: pad register exhausted");
        L.slots[e] = pad[next_pad++];
      }
      const int q = L.slots[e];
      Gate rz;
      rz.kind = GateKind::Rz;
      rz.qubits = {q};
      rz.angle = pi_over(e, true);
      rz.tag = tag;
      comp.inserted.push_back(rz);
      Gate nul;
      nul.kind = e == 0 ? GateKind::Z : e == 1 ? GateKind::S : GateKind::T;
      nul.qubits = {q};
      nul.tag = "nullifier";
      comp.nullifiers.push_back(nul);
    }
    // slots beyond the completed width belong to pruned rotations
    for (auto it = L.slots.begin(); it != L.slots.end();)
      it = it->first >= L.width ? L.slots.erase(it) : std::next(it);
  }

  const auto& gates = s.circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    st.circuit.append(gates[i]);
    const bool closes = i + 1 == gates.size() || gates[i + 1].tag != gates[i].tag;
    auto it = todo.find(gates[i].tag);
    if (closes && it != todo.end()) {
      for (const auto& g : it->second.inserted) st.circuit.append(g);
      for (const auto& g : it->second.nullifiers) st.circuit.append(g);
    }
  }
  return st;
}

// ---------------------------------------------------------------- step 7

AqftArtifact step7_substitute_adders(const Stage& s, const AqftParams& p) {
  AqftArtifact art;
  art.params = p;
  Circuit& c = art.circuit;
  c = same_layout(s.circuit);
  const int n = static_cast<int>(c.reg("data").qubits.size());
  const int cat_width = p.b + 1;
  const auto cat_a = c.add_register("catalyst_a", RegisterRole::Catalyst, cat_width).qubits;
  const auto cat_b = c.add_register("catalyst_b", RegisterRole::Catalyst, cat_width).qubits;
  const auto carry_a = c.add_register("carry_a", RegisterRole::ZeroAncilla, p.b).qubits;
  const auto carry_b = c.add_register("carry_b", RegisterRole::ZeroAncilla, p.b).qubits;

  append_psi_prep(c, cat_a, "psi-prep");
  append_psi_prep(c, cat_b, "psi-prep");

  std::map<std::string, const LayerInfo*> by_tag;
  for (const auto& L : s.layers)
    if (L.width > 0) by_tag[layer_tag(L.id)] = &L;

  const auto& gates = s.circuit.gates();
  for (std::size_t i = 0; i < gates.size();) {
    auto it = by_tag.find(gates[i].tag);
    if (it == by_tag.end()) {
      if (gates[i].kind == GateKind::Rz) throw Error("step 7: rotation outside any PGT layer");
      c.append(gates[i++]);
      continue;
    }
    const LayerInfo& L = *it->second;
    while (i < gates.size() && gates[i].tag == it->first) ++i;

    const int W = L.width;
    if (W > cat_width) throw Error("step 7: catalyst narrower than layer " + L.id);
    const bool on_b = L.kind == LayerKind::B;
    const auto& cat = on_b ? cat_b : cat_a;
    const auto& pool = on_b ? carry_b : carry_a;
    std::vector<int> x(W), y(W), carries(pool.begin(), pool.begin() + (W - 1));
    for (int j = 0; j < W; ++j) {
      x[j] = L.slots.at(W - 1 - j);
      y[j] = cat[cat_width - W + j];
    }
    AdderRecord rec{L.id, L.kind, L.block, W, on_b ? "catalyst_b" : "catalyst_a", c.gates().size(), 0};
    append_adder(c, x, y, carries, p.style, "adder:" + L.id);
    rec.gate_end = c.gates().size();
    art.adders.push_back(rec);
    art.inventory[W] += 1;
  }

  if (p.final_swaps)
    for (int i = 1; i <= n / 2; ++i) c.swap(qft_wire(n, i), qft_wire(n, n + 1 - i), "swap");

  for (const auto& g : c.gates())
    if ((g.kind == GateKind::CCZ && p.style == UncomputeStyle::MeasureBased) || g.kind == GateKind::CRk ||
        g.kind == GateKind::Rz)
      throw Error("step 7: artifact still holds a " + std::string(to_string(g.kind)) + " gate");
  const int eff_b = std::min(p.b, n);
  if (eff_b >= 3 && art.inventory != expected_inventory(n, eff_b))
    throw Error("step 7: adder inventory differs from the expected census");
  return art;
}

// ---------------------------------------------------------------- driver

namespace {

AqftArtifact build_with_shifts(const AqftParams& p, const std::vector<Subcircuit>& subs,
                               const std::vector<FanoutShift>& shifts) {
  std::vector<Stage> transformed;
  for (std::size_t k = 0; k < subs.size(); ++k)
    transformed.push_back(step2_transform_subcircuit(subs[k], p.b + 1, shifts[k]));
  Stage s34 = step34_assemble_and_split(transformed);
  RemovedGateLedger ledger;
  Stage s5 = step5_prune(s34, p, ledger);
  Stage s6 = step6_complete_pgt(s5, p);
  AqftArtifact art = step7_substitute_adders(s6, p);
  art.ledger = std::move(ledger);
  if (p.keep_snapshots) {
    art.snapshots.emplace_back("step34", s34.circuit);
    art.snapshots.emplace_back("step5", s5.circuit);
    art.snapshots.emplace_back("step6", s6.circuit);
  }
  return art;
}

// first T-layer of an adder's gate range
std::size_t first_t_layer(const AqftArtifact& a, const LayeredDag& dag, const AdderRecord& r) {
  std::vector<std::size_t> idx;
  for (auto i = r.gate_begin; i < r.gate_end; ++i) idx.push_back(i);
  auto tl = t_layers(a.circuit, dag, idx);
  return tl.empty() ? 0 : tl.front();
}

}  // namespace

AqftArtifact build_aqft(const AqftParams& p) {
  p.validate();
  auto qft = build_standard_qft({p.n, false});
  auto subs = step1_reorder_and_partition(qft);
  std::vector<FanoutShift> shifts(subs.size());
  AqftArtifact art = build_with_shifts(p, subs, shifts);
  // Align each A/B pair in block order; a block only affects later ones.
  // first-T-layer offset (B minus A) of every pair, from one layering
  auto offsets = [](const AqftArtifact& a) {
    std::map<int, long> out;
    const auto dag = layer_dag(a.circuit);
    for (const auto& [ra, rb] : a.pairs())
      out[ra->block] = static_cast<long>(first_t_layer(a, dag, *rb)) - static_cast<long>(first_t_layer(a, dag, *ra));
    return out;
  };
  auto current = offsets(art);
  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (subs[k].kind != BlockKind::Pair || current[subs[k].index] == 0) continue;
    const int span = p.n - subs[k].wire;
    const int reach = std::min(span, 4);
    std::vector<FanoutShift> candidates;
    for (int r = 1; r <= 2 * reach; ++r)
      for (int sa = -reach; sa <= reach; ++sa)
        for (int sb = -reach; sb <= reach; ++sb)
          if (std::abs(sa) + std::abs(sb) == r) candidates.push_back({sa, sb, {}});
    // short chains: fall back to every order of the B fan-out
    if (span <= 6) {
      std::vector<int> order;
      for (int c = p.n; c >= subs[k].wire + 2; --c) order.push_back(c);
      std::sort(order.begin(), order.end());
      for (bool in_place : {false, true})
        for (int sa = 0; sa <= (span <= 4 ? span : 0); sa = sa > 0 ? -sa : 1 - sa) {
          do candidates.push_back({sa, 0, order, in_place});
          while (std::next_permutation(order.begin(), order.end()));
          if (sa == -span) break;
        }
    }
    for (const auto& cand : candidates) {
      auto trial_shifts = shifts;
      trial_shifts[k] = cand;
      auto trial = build_with_shifts(p, subs, trial_shifts);
      auto trial_offsets = offsets(trial);
      if (trial_offsets[subs[k].index] == 0) {
        shifts = std::move(trial_shifts);
        art = std::move(trial);
        current = std::move(trial_offsets);
        break;
      }
    }
  }
  return art;
}

nlohmann::json sidecar_json(const AqftArtifact& a) {
  using nlohmann::json;
  json j;
  const auto& p = a.params;
  j["params"] = {{"n", p.n},
                 {"epsilon", p.epsilon},
                 {"b", p.b},
                 {"prune", p.prune},
                 {"figure_compat", p.figure_compat},
                 {"final_swaps", p.final_swaps},
                 {"uncompute", p.style == UncomputeStyle::MeasureBased ? "measure" : "coherent"}};
  j["ledger"] = {{"bound", a.ledger.bound()}, {"removed", json::array()}};
  for (const auto& e : a.ledger.entries)
    j["ledger"]["removed"].push_back({{"layer", e.layer}, {"qubit", e.qubit}, {"angle", to_json(e.angle)}});
  j["registers"] = json::array();
  for (const auto& r : a.circuit.registers())
    j["registers"].push_back({{"name", r.name}, {"role", to_string(r.role)}, {"qubits", r.qubits}});
  j["inventory"] = json::object();
  for (auto [w, count] : a.inventory) j["inventory"][std::to_string(w)] = count;
  j["adders"] = json::array();
  for (const auto& r : a.adders)
    j["adders"].push_back({{"layer", r.layer},
                           {"kind", to_string(r.kind)},
                           {"block", r.block},
                           {"width", r.width},
                           {"catalyst", r.catalyst},
                           {"gates", {r.gate_begin, r.gate_end}}});
  return j;
}

}  // namespace aqft
