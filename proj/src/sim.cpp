// Copyright 2026 The dqcbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dqcbench/sim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "dqcbench/analytic.hpp"
#include "dqcbench/error.hpp"

namespace dqcbench::sim {

using circuits::BlockKind;
using circuits::Gate;
using circuits::GateKind;
using circuits::PhysicalCircuit;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t h = mix64(master + golden);
  h = mix64(h ^ (a + 1) * golden);
  h = mix64(h ^ (b + 2) * golden);
  return mix64(h ^ (c + 3) * golden);
}

SplitMix64::result_type SplitMix64::operator()() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

std::string to_string(NoiseMode m) { return m == NoiseMode::PerSU4 ? "per-su4" : "per-basis-gate"; }

NoiseMode parse_noise_mode(const std::string& s) {
  if (s == "per-su4") return NoiseMode::PerSU4;
  if (s == "per-basis-gate") return NoiseMode::PerBasisGate;
  throw Error("unknown noise mode '" + s + "' (expected per-su4 or per-basis-gate)");
}

NoiseAttachment NoiseAttachment::from_spec(const noisemodel::NoiseSpec& spec, NoiseMode mode) {
  NoiseAttachment a;
  a.mode = mode;
  a.qubit_error = spec.per_qubit_error;
  a.entanglement_error = spec.entanglement_error;
  return a;
}

void NoiseAttachment::validate(int n_qubits) const {
  if (static_cast<int>(qubit_error.size()) != n_qubits) throw Error("noise: one error rate per qubit required");
  auto rate_ok = [](double r) { return r >= 0.0 && r <= 1.0; };
  for (double e : qubit_error)
    if (!rate_ok(e)) throw Error("noise: qubit error rate outside [0, 1]");
  if (!rate_ok(entanglement_error) || !rate_ok(single_qubit_error)) throw Error("noise: rate outside [0, 1]");
  if (!(cnot_scale >= 0.0) || cnot_scale > 1.0) throw Error("noise: cnot_scale outside [0, 1]");
}

std::vector<NoiseSlot> noise_slots(const PhysicalCircuit& pc, const NoiseAttachment& noise) {
  noise.validate(pc.n_qubits);
  std::vector<NoiseSlot> slots;
  auto one = [&](int pos, int q, double eps) {
    if (eps > 0.0) slots.push_back({pos, q, -1, 0.75 * eps});
  };
  const bool basis = noise.mode == NoiseMode::PerBasisGate;
  for (int g = 0; g < static_cast<int>(pc.gates.size()); ++g) {
    const Gate& gate = pc.gates[g];
    switch (gate.kind) {
      case GateKind::SingleQubit:
      case GateKind::ClassicallyControlled:
        if (basis) one(4 * g, gate.q0, noise.single_qubit_error);
        break;
      case GateKind::CNOT:
        if (basis) {
          one(4 * g, gate.q0, noise.cnot_scale * noise.qubit_error[gate.q0]);
          one(4 * g, gate.q1, noise.cnot_scale * noise.qubit_error[gate.q1]);
        }
        break;
      case GateKind::Swap:
        if (basis) {
          for (int s = 0; s < 3; ++s) {
            one(4 * g + s, gate.q0, noise.cnot_scale * noise.qubit_error[gate.q0]);
            one(4 * g + s, gate.q1, noise.cnot_scale * noise.qubit_error[gate.q1]);
          }
        }
        break;
      case GateKind::BellPrep:
        if (noise.entanglement_error > 0.0) {
          slots.push_back({4 * g, gate.q0, gate.q1, 15.0 / 16.0 * noise.entanglement_error});
        }
        break;
      case GateKind::MeasureZ:
      case GateKind::MeasureX:
        break;
    }
  }
  if (!basis) {
    for (const auto& block : pc.blocks) {
      const int pos = 4 * (block.end - 1) + 3;
      one(pos, block.a, noise.qubit_error[block.a]);
      one(pos, block.b, noise.qubit_error[block.b]);
      if (block.kind == BlockKind::TelegateSu4) {
        const double shifted = 1.0 - std::cbrt((1.0 - noise.qubit_error[block.memory[0]]) *
                                               (1.0 - noise.qubit_error[block.memory[1]]));
        one(pos, block.a, shifted);
        one(pos, block.b, shifted);
      }
    }
  }
  std::stable_sort(slots.begin(), slots.end(), [](const NoiseSlot& x, const NoiseSlot& y) { return x.pos < y.pos; });
  return slots;
}

std::vector<double> ideal_distribution(const circuits::Circuit& circuit) {
  if (circuit.n_qubits < 1 || circuit.n_qubits > kMaxIdealQubits) {
    throw Error("ideal_distribution supports 1 to 14 qubits");
  }
  StateVector psi(circuit.n_qubits);
  for (const auto& layer : circuit.layers)
    for (const auto& g : layer.gates) psi.apply_2q(g.a, g.b, g.unitary);
  std::vector<int> all(circuit.n_qubits);
  std::iota(all.begin(), all.end(), 0);
  return psi.marginal(all);
}

std::vector<std::uint8_t> heavy_mask(const std::vector<double>& q) {
  const std::size_t n = q.size();
  if (n < 2 || (n & (n - 1)) != 0) throw Error("heavy set needs a full table over N >= 1 bits");
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return q[a] > q[b]; });
  std::vector<std::uint8_t> mask(n, 0);
  for (std::size_t i = 0; i < n / 2; ++i) mask[order[i]] = 1;
  return mask;
}

std::vector<std::uint64_t> heavy_set(const std::vector<double>& q) {
  const auto mask = heavy_mask(q);
  std::vector<std::uint64_t> out;
  for (std::size_t x = 0; x < mask.size(); ++x)
    if (mask[x]) out.push_back(x);
  return out;
}

double hop(const std::vector<std::uint32_t>& samples, const std::vector<std::uint8_t>& heavy) {
  if (samples.empty()) throw Error("hop: no samples");
  std::size_t hits = 0;
  for (auto s : samples) hits += heavy.at(s);
  return static_cast<double>(hits) / static_cast<double>(samples.size());
}

double lxe(const std::vector<std::uint32_t>& samples, const std::vector<double>& q) {
  if (samples.empty()) throw Error("lxe: no samples");
  double s = 0.0;
  for (auto x : samples) s += q.at(x);
  return static_cast<double>(q.size()) * s / static_cast<double>(samples.size()) - 1.0;
}

double ideal_lxe(const std::vector<double>& q) {
  double s = 0.0;
  for (double p : q) s += p * p;
  return static_cast<double>(q.size()) * s - 1.0;
}

double ideal_hop(const std::vector<double>& q, const std::vector<std::uint8_t>& heavy) {
  double s = 0.0;
  for (std::size_t x = 0; x < q.size(); ++x)
    if (heavy[x]) s += q[x];
  return s;
}

double estimate_agf(double lxe_measured, double lxe_ideal, int n) {
  return analytic::agf_from_lxe(lxe_measured, lxe_ideal, n);
}

namespace {

constexpr std::uint64_t kErrorStream = 0;
constexpr std::uint64_t kSampleStream = 1;
constexpr std::uint64_t kMeasureStream = 2;

struct Event {
  int slot;
  int code;  // 1..3 single-qubit Pauli, 1..15 two-qubit (4 * p0 + p1)
};

class Executor {
 public:
  Executor(const PhysicalCircuit& pc, StateVector& psi, SplitMix64& rng) : pc_(pc), psi_(psi), rng_(rng) {
    cbits_.assign(pc.n_cbits, 0);
  }

  void fast_block(const circuits::Block& b) {
    if (b.kind == BlockKind::Swap) {
      psi_.apply_swap(b.a, b.b);
    } else {
      psi_.apply_2q(b.a, b.b, b.unitary);
    }
  }

  // Gate-by-gate; `events` lists (pos, slot) pairs inside the block, sorted.
  void gate_block(const circuits::Block& b, const std::vector<NoiseSlot>& slots, const Event* ev, const Event* ev_end) {
    for (int g = b.begin; g < b.end; ++g) {
      const Gate& gate = pc_.gates[g];
      if (gate.kind == GateKind::Swap) {
        psi_.apply_cnot(gate.q0, gate.q1);
        ev = apply_events(slots, ev, ev_end, 4 * g + 0);
        psi_.apply_cnot(gate.q1, gate.q0);
        ev = apply_events(slots, ev, ev_end, 4 * g + 1);
        psi_.apply_cnot(gate.q0, gate.q1);
        ev = apply_events(slots, ev, ev_end, 4 * g + 2);
      } else {
        apply_gate(gate);
      }
      ev = apply_events(slots, ev, ev_end, 4 * g + 3);
    }
  }

  void apply_gate(const Gate& gate) {
    switch (gate.kind) {
      case GateKind::SingleQubit:
        psi_.apply_1q(gate.q0, gate.unitary);
        break;
      case GateKind::CNOT:
        psi_.apply_cnot(gate.q0, gate.q1);
        break;
      case GateKind::Swap:
        psi_.apply_swap(gate.q0, gate.q1);
        break;
      case GateKind::BellPrep:
        reset(gate.q0);
        reset(gate.q1);
        psi_.apply_1q(gate.q0, circuits::gates::h());
        psi_.apply_cnot(gate.q0, gate.q1);
        break;
      case GateKind::MeasureZ:
        cbits_.at(gate.cbit) = measure(gate.q0);
        break;
      case GateKind::MeasureX:
        psi_.apply_1q(gate.q0, circuits::gates::h());
        cbits_.at(gate.cbit) = measure(gate.q0);
        psi_.apply_1q(gate.q0, circuits::gates::h());
        break;
      case GateKind::ClassicallyControlled:
        if (cbits_.at(gate.cbit)) psi_.apply_1q(gate.q0, gate.unitary);
        break;
    }
  }

 private:
  const Event* apply_events(const std::vector<NoiseSlot>& slots, const Event* ev, const Event* ev_end, int upto) {
    while (ev != ev_end && slots[ev->slot].pos <= upto) {
      const NoiseSlot& s = slots[ev->slot];
      if (s.q1 < 0) {
        psi_.apply_pauli(s.q0, ev->code);
      } else {
        psi_.apply_pauli(s.q0, ev->code >> 2);
        psi_.apply_pauli(s.q1, ev->code & 3);
      }
      ++ev;
    }
    return ev;
  }

  int measure(int q) {
    const double p1 = psi_.probability_one(q);
    int bit;
    if (p1 < 1e-14) {
      bit = 0;
    } else if (p1 > 1.0 - 1e-14) {
      bit = 1;
    } else {
      bit = rng_.uniform() < p1 ? 1 : 0;
    }
    psi_.collapse(q, bit);
    return bit;
  }

  void reset(int q) {
    if (measure(q)) psi_.apply_x(q);
  }

  const PhysicalCircuit& pc_;
  StateVector& psi_;
  SplitMix64& rng_;
  std::vector<int> cbits_;
};

std::vector<Event> draw_events(const std::vector<NoiseSlot>& slots, double p_max, SplitMix64& rng) {
  std::vector<Event> events;
  if (p_max <= 0.0) return events;
  const double log_q = p_max < 1.0 ? std::log1p(-p_max) : 0.0;
  const long long n = static_cast<long long>(slots.size());
  long long i = -1;
  while (true) {
    long long gap = 0;
    if (p_max < 1.0) {
      const double u = 1.0 - rng.uniform();  // (0, 1]
      const double g = std::floor(std::log(u) / log_q);
      if (g >= static_cast<double>(n)) break;
      gap = static_cast<long long>(g);
    }
    i += 1 + gap;
    if (i >= n) break;
    const NoiseSlot& s = slots[i];
    if (s.p_error < p_max && rng.uniform() * p_max >= s.p_error) continue;
    const int choices = s.q1 < 0 ? 3 : 15;
    const int code = 1 + std::min(choices - 1, static_cast<int>(rng.uniform() * choices));
    events.push_back({static_cast<int>(i), code});
  }
  return events;
}

std::vector<double> cumulative(std::vector<double> p) {
  double s = 0.0;
  for (auto& v : p) {
    s += v;
    v = s;
  }
  for (auto& v : p) v /= s;
  p.back() = 1.0;
  return p;
}

std::uint32_t draw(const std::vector<double>& cdf, SplitMix64& rng) {
  const double u = rng.uniform();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return static_cast<std::uint32_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), cdf.size() - 1));
}

std::vector<std::uint32_t> run_noisy_impl(const PhysicalCircuit& pc, const NoiseAttachment& noise, int shots,
                                          std::uint64_t seed, std::uint64_t stream, bool parallel) {
  if (shots < 1) throw Error("run_noisy: shots must be positive");
  if (pc.output_qubits.size() > 31) throw Error("run_noisy: too many output qubits");
  const auto slots = noise_slots(pc, noise);
  double p_max = 0.0;
  for (const auto& s : slots) p_max = std::max(p_max, s.p_error);

  // Group shots by their error realization.
  std::map<std::vector<std::uint32_t>, std::vector<int>> groups;
  for (int shot = 0; shot < shots; ++shot) {
    SplitMix64 rng(derive_seed(seed, stream, static_cast<std::uint64_t>(shot), kErrorStream));
    const auto events = draw_events(slots, p_max, rng);
    std::vector<std::uint32_t> key;
    key.reserve(events.size());
    for (const auto& e : events) key.push_back(static_cast<std::uint32_t>(e.slot) << 4 | e.code);
    groups[std::move(key)].push_back(shot);
  }

  // Ideal state before each block; trajectories restart from the block of
  // their first error.
  const int n_blocks = static_cast<int>(pc.blocks.size());
  std::vector<StateVector> checkpoints;
  checkpoints.reserve(n_blocks + 1);
  {
    StateVector psi(pc.n_qubits);
    SplitMix64 unused(0);
    Executor ex(pc, psi, unused);
    for (const auto& b : pc.blocks) {
      checkpoints.push_back(psi);
      ex.fast_block(b);
    }
    checkpoints.push_back(psi);
  }
  std::vector<int> block_of_pos(4 * pc.gates.size() + 4, n_blocks);
  for (int bi = 0; bi < n_blocks; ++bi)
    for (int p = 4 * pc.blocks[bi].begin; p < 4 * pc.blocks[bi].end; ++p) block_of_pos[p] = bi;

  std::vector<const std::pair<const std::vector<std::uint32_t>, std::vector<int>>*> work;
  for (const auto& g : groups) work.push_back(&g);

  std::vector<std::uint32_t> samples(shots);
  const long long n_work = static_cast<long long>(work.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long w = 0; w < n_work; ++w) {
    const auto& [key, members] = *work[w];
    std::vector<Event> events;
    for (auto k : key) events.push_back({static_cast<int>(k >> 4), static_cast<int>(k & 15)});

    const StateVector* final_state = &checkpoints.back();
    StateVector psi(0);
    if (!events.empty()) {
      SplitMix64 measure_rng(derive_seed(seed, stream, static_cast<std::uint64_t>(members.front()), kMeasureStream));
      const int first = block_of_pos[slots[events.front().slot].pos];
      psi = checkpoints[first];
      Executor ex(pc, psi, measure_rng);
      const Event* ev = events.data();
      const Event* ev_end = ev + events.size();
      for (int bi = first; bi < n_blocks; ++bi) {
        const auto& b = pc.blocks[bi];
        const Event* stop = ev;
        while (stop != ev_end && slots[stop->slot].pos < 4 * b.end) ++stop;
        if (stop == ev) {
          ex.fast_block(b);
        } else {
          ex.gate_block(b, slots, ev, stop);
          ev = stop;
        }
      }
      final_state = &psi;
    }
    const auto cdf = cumulative(final_state->marginal(pc.output_qubits));
    for (int shot : members) {
      SplitMix64 rng(derive_seed(seed, stream, static_cast<std::uint64_t>(shot), kSampleStream));
      samples[shot] = draw(cdf, rng);
    }
  }
  return samples;
}

MetricsResult run_benchmark_impl(const topology::ExtendedGraph& graph, const NoiseAttachment& noise,
                                 const BenchmarkParams& params, bool parallel) {
  if (params.n_circuits < 1 || params.shots < 1) throw Error("benchmark: circuits and shots must be positive");
  noise.validate(graph.size());
  const int n = graph.n_working();
  if (n > kMaxIdealQubits) throw Error("benchmark: too many working qubits for the ideal simulator");

  MetricsResult r;
  r.n_working = n;
  r.n_circuits = params.n_circuits;
  r.shots = params.shots;
  r.seed = params.seed;
  r.heavy_set_size = std::size_t{1} << (n - 1);
  r.per_circuit.resize(params.n_circuits);
  std::vector<int> pairs(params.n_circuits, 0);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < params.n_circuits; ++i) {
    const auto circuit = benchmark_circuit(n, params.seed, i);
    const auto q = ideal_distribution(circuit);
    const auto heavy = heavy_mask(q);
    const auto pc = circuits::compile(circuit, graph);
    const auto samples = run_noisy_impl(pc, noise, params.shots, params.seed, static_cast<std::uint64_t>(i), false);
    auto& m = r.per_circuit[i];
    m.hop = hop(samples, heavy);
    m.lxe = lxe(samples, q);
    m.hop_ideal = ideal_hop(q, heavy);
    m.lxe_ideal = ideal_lxe(q);
    pairs[i] = pc.entanglement_pairs_consumed;
  }

  for (const auto& m : r.per_circuit) {
    r.hop += m.hop;
    r.lxe += m.lxe;
    r.hop_ideal += m.hop_ideal;
    r.lxe_ideal += m.lxe_ideal;
  }
  const double nc = params.n_circuits;
  r.hop /= nc;
  r.lxe /= nc;
  r.hop_ideal /= nc;
  r.lxe_ideal /= nc;
  r.entanglement_pairs_per_circuit = std::accumulate(pairs.begin(), pairs.end(), 0.0) / nc;
  r.agf_via_lxe = estimate_agf(r.lxe, r.lxe_ideal, n);
  if (params.n_circuits > 1) {
    double mean = 0.0;
    for (std::size_t i = 0; i < r.per_circuit.size(); ++i) mean += r.circuit_agf(i);
    mean /= nc;
    double var = 0.0;
    for (std::size_t i = 0; i < r.per_circuit.size(); ++i) var += std::pow(r.circuit_agf(i) - mean, 2);
    r.agf_stderr = std::sqrt(var / (nc - 1) / nc);
  }
  return r;
}

}  // namespace

void execute(const PhysicalCircuit& pc, StateVector& psi, std::uint64_t seed) {
  if (psi.n_qubits() != pc.n_qubits) throw Error("execute: state and circuit sizes differ");
  SplitMix64 rng(seed);
  Executor ex(pc, psi, rng);
  for (const auto& g : pc.gates) ex.apply_gate(g);
}

std::vector<double> compiled_distribution(const PhysicalCircuit& pc, std::uint64_t seed) {
  StateVector psi(pc.n_qubits);
  execute(pc, psi, seed);
  return psi.marginal(pc.output_qubits);
}

std::vector<std::uint32_t> run_noisy(const PhysicalCircuit& pc, const NoiseAttachment& noise, int shots,
                                     std::uint64_t seed, std::uint64_t stream) {
  return run_noisy_impl(pc, noise, shots, seed, stream, true);
}

std::vector<std::uint32_t> run_noisy_serial(const PhysicalCircuit& pc, const NoiseAttachment& noise, int shots,
                                            std::uint64_t seed, std::uint64_t stream) {
  return run_noisy_impl(pc, noise, shots, seed, stream, false);
}

double MetricsResult::circuit_agf(std::size_t i) const {
  const auto& m = per_circuit.at(i);
  return estimate_agf(m.lxe, m.lxe_ideal, n_working);
}

circuits::Circuit benchmark_circuit(int n, std::uint64_t seed, int index) {
  circuits::Rng rng(derive_seed(seed, static_cast<std::uint64_t>(index), 0, 7));
  return circuits::sample_qv_circuit(n, rng);
}

MetricsResult run_benchmark(const topology::ExtendedGraph& graph, const NoiseAttachment& noise,
                            const BenchmarkParams& params) {
  return run_benchmark_impl(graph, noise, params, true);
}

MetricsResult run_benchmark_serial(const topology::ExtendedGraph& graph, const NoiseAttachment& noise,
                                   const BenchmarkParams& params) {
  return run_benchmark_impl(graph, noise, params, false);
}

}  // namespace dqcbench::sim
