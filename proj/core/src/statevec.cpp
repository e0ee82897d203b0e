#include "aqft/statevec.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace aqft {

namespace {

constexpr double kDropTolerance = 1e-30;  // squared magnitude
constexpr std::uint64_t kNoKey = ~std::uint64_t{0};

std::uint64_t bit(int q) { return std::uint64_t{1} << q; }

Complex expi(double phi) { return std::polar(1.0, phi); }

}  // namespace

// ---------------------------------------------------------------- StateVector

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0 || num_qubits > kDefaultStateCap)
    throw Error("dense state width " + std::to_string(num_qubits) + " outside [0, " +
                std::to_string(kDefaultStateCap) + "]");
  amps_.assign(std::size_t{1} << num_qubits, Complex{});
  amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != (std::size_t{1} << num_qubits)) throw Error("amplitude count is not 2^n");
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  StateVector s(num_qubits);
  s.amps_[0] = 0.0;
  s.amps_.at(index) = 1.0;
  return s;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (auto a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

std::string StateVector::dump_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  bool first = true;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (std::norm(amps_[i]) < kDropTolerance) continue;
    os << (first ? "" : ",") << "{\"index\":" << i << ",\"re\":" << amps_[i].real()
       << ",\"im\":" << amps_[i].imag() << "}";
    first = false;
  }
  os << "]";
  return os.str();
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw Error("fidelity: width mismatch");
  Complex acc{};
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) acc += std::conj(a[i]) * b[i];
  return std::norm(acc);
}

MeasurementPolicy MeasurementPolicy::forced_all(const Circuit& c, int value) {
  auto n = std::count_if(c.gates().begin(), c.gates().end(),
                         [](const Gate& g) { return is_measurement(g.kind); });
  return forced(std::vector<int>(static_cast<std::size_t>(n), value));
}

// ---------------------------------------------------------------- SparseState

SparseState::SparseState(int num_qubits) : num_qubits_(num_qubits), keys_{0}, amps_{1.0} {
  if (num_qubits < 0 || num_qubits > 63) throw Error("sparse state supports at most 63 qubits");
}

SparseState SparseState::from_dense(const StateVector& s) {
  SparseState out(s.num_qubits());
  out.keys_.clear();
  out.amps_.clear();
  for (std::size_t i = 0; i < s.amplitudes().size(); ++i)
    if (std::norm(s[i]) > kDropTolerance) {
      out.keys_.push_back(i);
      out.amps_.push_back(s[i]);
    }
  return out;
}

void SparseState::embed(const StateVector& part, const std::vector<int>& qubits) {
  if (static_cast<int>(qubits.size()) != part.num_qubits()) throw Error("embed: width mismatch");
  std::uint64_t mask = 0;
  for (int q : qubits) mask |= bit(q);
  std::vector<std::pair<std::uint64_t, Complex>> out;
  for (std::size_t e = 0; e < keys_.size(); ++e) {
    if (keys_[e] & mask) throw Error("embed: target qubits are not |0>");
    for (std::size_t i = 0; i < part.amplitudes().size(); ++i) {
      if (std::norm(part[i]) <= kDropTolerance) continue;
      std::uint64_t k = keys_[e];
      for (std::size_t b = 0; b < qubits.size(); ++b)
        if ((i >> b) & 1) k |= bit(qubits[b]);
      out.emplace_back(k, amps_[e] * part[i]);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  keys_.resize(out.size());
  amps_.resize(out.size());
  for (std::size_t e = 0; e < out.size(); ++e) {
    keys_[e] = out[e].first;
    amps_[e] = out[e].second;
  }
}

double SparseState::norm() const {
  double acc = 0.0;
  for (auto a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

StateVector SparseState::to_dense() const {
  StateVector s(num_qubits_);
  s.amplitudes()[0] = 0.0;
  for (std::size_t e = 0; e < keys_.size(); ++e) s.amplitudes()[keys_[e]] += amps_[e];
  return s;
}

void SparseState::apply_diag(int q, Complex d0, Complex d1) {
  const auto m = bit(q);
  for (std::size_t e = 0; e < keys_.size(); ++e) amps_[e] *= (keys_[e] & m) ? d1 : d0;
}

// Keys stay sorted. A basis permutation that adds a constant offset to each
// class of keys keeps every class sorted, so the result is a merge of runs.
template <class Classify>
void SparseState::shift_classes(Classify cls, const std::array<std::uint64_t, 3>& delta) {
  const std::size_t n = keys_.size();
  std::array<std::size_t, 4> start{};
  for (std::size_t e = 0; e < n; ++e) ++start[cls(keys_[e]) + 1];
  int nonempty = 0, only = 0;
  for (int c = 0; c < 3; ++c)
    if (start[c + 1]) ++nonempty, only = c;
  if (nonempty <= 1) {
    if (delta[only]) for (auto& k : keys_) k += delta[only];
    return;
  }
  for (int c = 0; c < 3; ++c) start[c + 1] += start[c];
  scratch_keys_.resize(n);
  scratch_amps_.resize(n);
  std::array<std::size_t, 3> pos{start[0], start[1], start[2]};
  for (std::size_t e = 0; e < n; ++e) {
    const int c = cls(keys_[e]);
    scratch_keys_[pos[c]] = keys_[e] + delta[c];
    scratch_amps_[pos[c]] = amps_[e];
    ++pos[c];
  }
  std::array<std::size_t, 3> head{start[0], start[1], start[2]};
  for (std::size_t e = 0; e < n; ++e) {
    int best = -1;
    for (int c = 0; c < 3; ++c)
      if (head[c] < start[c + 1] && (best < 0 || scratch_keys_[head[c]] < scratch_keys_[head[best]])) best = c;
    keys_[e] = scratch_keys_[head[best]];
    amps_[e] = scratch_amps_[head[best]];
    ++head[best];
  }
}

void SparseState::apply_x(int q) {
  const auto m = bit(q);
  shift_classes([m](std::uint64_t k) { return (k & m) ? 1 : 0; }, {m, -m, 0});
}

void SparseState::apply_cnot(int c, int t) {
  const auto mc = bit(c), mt = bit(t);
  shift_classes([mc, mt](std::uint64_t k) { return !(k & mc) ? 0 : (k & mt) ? 2 : 1; }, {0, mt, -mt});
}

void SparseState::apply_swap(int a, int b) {
  const auto ma = bit(a), mb = bit(b);
  shift_classes(
      [ma, mb](std::uint64_t k) {
        const bool x = k & ma, y = k & mb;
        return x == y ? 0 : x ? 1 : 2;
      },
      {0, mb - ma, ma - mb});
}

void SparseState::apply_phase_if_all(std::uint64_t mask, Complex phase) {
  for (std::size_t e = 0; e < keys_.size(); ++e)
    if ((keys_[e] & mask) == mask) amps_[e] *= phase;
}

void SparseState::apply_h(int q) {
  const auto m = bit(q);
  const double r = std::numbers::sqrt2 / 2.0;
  const std::size_t n = keys_.size();

  // Bit-0 keys and bit-1 keys with the bit cleared are both sorted, so partners
  // meet in one merge. The two output halves are then merged back in order.
  scratch_keys_.resize(2 * n);
  scratch_amps_.resize(2 * n);
  std::size_t n0 = 0, n1 = n;
  auto emit = [&](std::uint64_t base, Complex a0, Complex a1) {
    const Complex p = r * (a0 + a1), d = r * (a0 - a1);
    if (std::norm(p) > kDropTolerance) {
      scratch_keys_[n0] = base;
      scratch_amps_[n0++] = p;
    }
    if (std::norm(d) > kDropTolerance) {
      scratch_keys_[n1] = base | m;
      scratch_amps_[n1++] = d;
    }
  };
  std::size_t i = 0, j = 0;
  auto next0 = [&] { while (i < n && (keys_[i] & m)) ++i; };
  auto next1 = [&] { while (j < n && !(keys_[j] & m)) ++j; };
  next0();
  next1();
  while (i < n || j < n) {
    const std::uint64_t k0 = i < n ? keys_[i] : kNoKey;
    const std::uint64_t k1 = j < n ? keys_[j] & ~m : kNoKey;
    if (k0 == k1) {
      emit(k0, amps_[i++], amps_[j++]);
    } else if (k0 < k1) {
      emit(k0, amps_[i++], 0.0);
    } else {
      emit(k1, 0.0, amps_[j++]);
    }
    next0();
    next1();
  }

  keys_.resize(n0 + (n1 - n));
  amps_.resize(keys_.size());
  std::size_t a = 0, b = n, w = 0;
  while (a < n0 || b < n1) {
    const bool take_a = b >= n1 || (a < n0 && scratch_keys_[a] < scratch_keys_[b]);
    const std::size_t src = take_a ? a++ : b++;
    keys_[w] = scratch_keys_[src];
    amps_[w++] = scratch_amps_[src];
  }
}

double SparseState::probability_one(int q) const {
  const auto m = bit(q);
  double p = 0.0;
  for (std::size_t e = 0; e < keys_.size(); ++e)
    if (keys_[e] & m) p += std::norm(amps_[e]);
  return p;
}

double SparseState::project_z(int q, int outcome) {
  const auto m = bit(q);
  const std::uint64_t want = outcome ? m : 0;
  std::size_t w = 0;
  double p = 0.0;
  for (std::size_t e = 0; e < keys_.size(); ++e)
    if ((keys_[e] & m) == want) {
      p += std::norm(amps_[e]);
      keys_[w] = keys_[e];
      amps_[w] = amps_[e];
      ++w;
    }
  keys_.resize(w);
  amps_.resize(w);
  if (p > 0.0) {
    const double s = 1.0 / std::sqrt(p);
    for (auto& a : amps_) a *= s;
  }
  return p;
}

// ---------------------------------------------------------------- simulate

namespace {

constexpr double kMinForcedProbability = 1e-12;

class Runner {
public:
  Runner(const Circuit& c, const MeasurementPolicy& policy)
      : c_(c), policy_(policy), rng_(policy.seed), bits_(c.num_bits(), 0) {}

  SimResult run(SparseState st, const GateHook& hook) {
    if (st.num_qubits() != c_.num_qubits()) throw Error("simulate: state width != circuit width");
    const auto& gates = c_.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
      const Gate& g = gates[i];
      if (!g.condition || bits_[*g.condition] == 1) apply(st, g);
      if (hook) hook(i, st);
    }
    return {std::move(st), std::move(outcomes_), std::move(bits_)};
  }

private:
  int choose(double p1) {
    std::size_t idx = outcomes_.size();
    if (policy_.mode == MeasurementPolicy::Mode::Forced) {
      if (idx >= policy_.outcomes.size()) throw Error("forced measurement outcomes exhausted");
      int o = policy_.outcomes[idx];
      double p = o ? p1 : 1.0 - p1;
      if (p < kMinForcedProbability)
        throw Error("forced outcome " + std::to_string(o) + " has probability " + std::to_string(p));
      return o;
    }
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(rng_) < p1 ? 1 : 0;
  }

  void measure(SparseState& st, const Gate& g, bool x_basis) {
    int q = g.qubits[0];
    if (x_basis) st.apply_h(q);
    int o = choose(st.probability_one(q));
    st.project_z(q, o);
    if (x_basis) st.apply_h(q);
    outcomes_.push_back(o);
    bits_[g.bit] = o;
  }

  void apply(SparseState& st, const Gate& g) {
    const auto& q = g.qubits;
    using std::numbers::pi;
    switch (g.kind) {
      case GateKind::H: st.apply_h(q[0]); break;
      case GateKind::X: st.apply_x(q[0]); break;
      case GateKind::Z: st.apply_diag(q[0], 1.0, -1.0); break;
      case GateKind::S: st.apply_diag(q[0], 1.0, Complex(0, 1)); break;
      case GateKind::Sdg: st.apply_diag(q[0], 1.0, Complex(0, -1)); break;
      case GateKind::T: st.apply_diag(q[0], 1.0, expi(pi / 4)); break;
      case GateKind::Tdg: st.apply_diag(q[0], 1.0, expi(-pi / 4)); break;
      case GateKind::Rz:
      case GateKind::SynthRz: {
        double th = g.angle.to_radians();
        st.apply_diag(q[0], expi(-th / 2), expi(th / 2));
        break;
      }
      case GateKind::CNOT: st.apply_cnot(q[0], q[1]); break;
      case GateKind::CZ: st.apply_phase_if_all(bit(q[0]) | bit(q[1]), -1.0); break;
      case GateKind::CCZ: st.apply_phase_if_all(bit(q[0]) | bit(q[1]) | bit(q[2]), -1.0); break;
      case GateKind::SWAP: st.apply_swap(q[0], q[1]); break;
      case GateKind::CRk:
        st.apply_phase_if_all(bit(q[0]) | bit(q[1]), expi(DyadicAngle::pi_over_pow2(g.k - 1).to_radians()));
        break;
      case GateKind::MeasureX: measure(st, g, true); break;
      case GateKind::MeasureZ: measure(st, g, false); break;
    }
  }

  const Circuit& c_;
  const MeasurementPolicy& policy_;
  std::mt19937_64 rng_;
  std::vector<int> bits_;
  std::vector<int> outcomes_;
};

}  // namespace

SimResult simulate(const Circuit& c, SparseState input, const MeasurementPolicy& policy,
                   const GateHook& hook) {
  return Runner(c, policy).run(std::move(input), hook);
}

DenseSimResult simulate(const Circuit& c, const StateVector& input, const MeasurementPolicy& policy) {
  auto r = simulate(c, SparseState::from_dense(input), policy);
  return {r.state.to_dense(), std::move(r.outcomes), std::move(r.bits)};
}

OperatorMatrix unitary_of(const Circuit& c, int width_cap) {
  if (!c.is_coherent()) throw Error("unitary_of: circuit has measurements or classical control");
  if (c.num_qubits() > width_cap)
    throw Error("unitary_of: width " + std::to_string(c.num_qubits()) + " above cap " +
                std::to_string(width_cap));
  const std::size_t dim = std::size_t{1} << c.num_qubits();
  OperatorMatrix u = OperatorMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    SparseState in(c.num_qubits());
    for (int q = 0; q < c.num_qubits(); ++q)
      if ((j >> q) & 1) in.apply_x(q);
    auto out = simulate(c, std::move(in), MeasurementPolicy::seeded(0)).state;
    for (std::size_t e = 0; e < out.keys().size(); ++e) u(out.keys()[e], j) += out.amps()[e];
  }
  return u;
}

// ---------------------------------------------------------------- effective operator

double EffectiveOperator::min_restoration() const {
  return restoration.empty() ? 1.0 : *std::min_element(restoration.begin(), restoration.end());
}

std::map<std::string, StateVector> zero_inputs(const Circuit& c, const std::string& data_register) {
  std::map<std::string, StateVector> m;
  for (const auto& r : c.registers())
    if (r.name != data_register) m.emplace(r.name, StateVector(static_cast<int>(r.qubits.size())));
  return m;
}

EffectiveOperator effective_operator(const Circuit& c, const std::string& data_register,
                                     const std::map<std::string, StateVector>& ancilla_inputs,
                                     const EffectiveOperatorOptions& opts) {
  const Register& data = c.reg(data_register);
  const int width = static_cast<int>(data.qubits.size());
  if (width > opts.width_cap)
    throw Error("effective_operator: data width " + std::to_string(width) + " above cap " +
                std::to_string(opts.width_cap));

  struct Placed {
    const Register* reg;
    const StateVector* input;
    const StateVector* expected;
  };
  std::vector<Placed> others;
  for (const auto& r : c.registers()) {
    if (r.name == data_register) continue;
    auto in = ancilla_inputs.find(r.name);
    if (in == ancilla_inputs.end()) throw Error("no input state supplied for register '" + r.name + "'");
    if (in->second.num_qubits() != static_cast<int>(r.qubits.size()))
      throw Error("input state width mismatch for register '" + r.name + "'");
    auto ex = opts.expected_outputs.find(r.name);
    const StateVector* expected = ex == opts.expected_outputs.end() ? &in->second : &ex->second;
    if (expected->num_qubits() != in->second.num_qubits())
      throw Error("expected state width mismatch for register '" + r.name + "'");
    others.push_back({&r, &in->second, expected});
  }

  // Base state with every ancilla register in its input state.
  SparseState base(c.num_qubits());
  for (const auto& p : others) base.embed(*p.input, p.reg->qubits);

  const std::size_t dim = std::size_t{1} << width;
  EffectiveOperator eff;
  eff.matrix = OperatorMatrix::Zero(dim, dim);
  eff.restoration.resize(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    SparseState in = base;
    for (int b = 0; b < width; ++b)
      if ((j >> b) & 1) in.apply_x(data.qubits[b]);
    auto out = simulate(c, std::move(in), opts.policy).state;
    for (std::size_t e = 0; e < out.keys().size(); ++e) {
      const std::uint64_t key = out.keys()[e];
      Complex w = 1.0;
      for (const auto& p : others) {
        std::uint64_t idx = 0;
        for (std::size_t b = 0; b < p.reg->qubits.size(); ++b)
          if (key & bit(p.reg->qubits[b])) idx |= std::uint64_t{1} << b;
        w *= std::conj((*p.expected)[idx]);
        if (w == Complex{}) break;
      }
      if (w == Complex{}) continue;
      std::uint64_t i = 0;
      for (int b = 0; b < width; ++b)
        if (key & bit(data.qubits[b])) i |= std::uint64_t{1} << b;
      eff.matrix(i, j) += w * out.amps()[e];
    }
    eff.restoration[j] = eff.matrix.col(j).squaredNorm();
    if (eff.restoration[j] < 1.0 - opts.restoration_tolerance)
      throw Error("ancilla restoration failed for data input " + std::to_string(j) +
                  ": fidelity " + std::to_string(eff.restoration[j]));
  }
  return eff;
}

// ---------------------------------------------------------------- distances

double unitarity_defect(const OperatorMatrix& u) {
  OperatorMatrix d = u.adjoint() * u - OperatorMatrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

double spectral_distance(const OperatorMatrix& u, const OperatorMatrix& v, bool up_to_global_phase,
                         double unitarity_tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols())
    throw Error("spectral_distance: dimension mismatch");
  if (unitarity_defect(u) > unitarity_tol || unitarity_defect(v) > unitarity_tol)
    throw Error("spectral_distance: operand is not unitary within tolerance");
  Complex phase = 1.0;
  if (up_to_global_phase) {
    // Eigenphases of U^dagger V lie on the unit circle; the optimal common
    // phase centers the shortest arc that covers all of them.
    Eigen::ComplexEigenSolver<OperatorMatrix> es(u.adjoint() * v, false);
    std::vector<double> th;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) th.push_back(std::arg(es.eigenvalues()[i]));
    std::sort(th.begin(), th.end());
    double best_gap = -1.0, arc_start = th.front();
    for (std::size_t i = 0; i < th.size(); ++i) {
      double next = i + 1 < th.size() ? th[i + 1] : th.front() + 2 * std::numbers::pi;
      if (next - th[i] > best_gap) {
        best_gap = next - th[i];
        arc_start = next;  // arc runs from `next` around to th[i]
      }
    }
    double arc = 2 * std::numbers::pi - best_gap;
    phase = std::polar(1.0, -(arc_start + arc / 2));
  }
  OperatorMatrix diff = u - phase * v;
  Eigen::BDCSVD<OperatorMatrix> svd(diff);
  return svd.singularValues()(0);
}

}  // namespace aqft
