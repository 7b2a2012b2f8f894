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

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "dqcbench/circuits.hpp"
#include "dqcbench/noisemodel.hpp"
#include "dqcbench/statevector.hpp"
#include "dqcbench/topology.hpp"

namespace dqcbench::sim {

/// splitmix64 output function.
std::uint64_t mix64(std::uint64_t x);
/// Stream seed for (master, a, b, c); used for every per-circuit and
/// per-shot generator so results do not depend on scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

/// Small counter-based generator for per-shot streams.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class NoiseMode { PerSU4, PerBasisGate };
std::string to_string(NoiseMode m);
NoiseMode parse_noise_mode(const std::string& s);

/// Where depolarizing channels are attached in a compiled circuit.
///
/// PerSU4: one channel on each site after every SU(4) block and every swap;
/// telegate blocks add the memory error shifted onto both endpoints.
/// PerBasisGate: one channel on each operand after every CNOT (swaps count
/// as three) at cnot_scale * rate, and single_qubit_error after 1q gates.
/// Every Bell pair gets a two-qubit depolarizing channel at
/// entanglement_error in both modes.
struct NoiseAttachment {
  NoiseMode mode = NoiseMode::PerSU4;
  std::vector<double> qubit_error;
  double entanglement_error = 0.0;
  double single_qubit_error = 0.0;
  double cnot_scale = 1.0;

  static NoiseAttachment from_spec(const noisemodel::NoiseSpec& spec, NoiseMode mode = NoiseMode::PerSU4);
  void validate(int n_qubits) const;
};

/// A depolarizing channel location. pos = 4 * gate + sub, where sub 0..2
/// follow the CNOTs of an expanded swap and 3 marks the end of the gate.
struct NoiseSlot {
  int pos = 0;
  int q0 = -1;
  int q1 = -1;  // >= 0 for the two-qubit Bell-pair channel
  double p_error = 0.0;  // probability of a non-identity Pauli
};

std::vector<NoiseSlot> noise_slots(const circuits::PhysicalCircuit& pc, const NoiseAttachment& noise);

constexpr int kMaxIdealQubits = 14;

/// Output distribution of the abstract circuit; bit i is logical qubit i.
std::vector<double> ideal_distribution(const circuits::Circuit& circuit);

/// Membership mask of the 2^(N-1) most probable outcomes; ties broken
/// toward smaller bitstrings.
std::vector<std::uint8_t> heavy_mask(const std::vector<double>& q);
/// Same set as ascending bitstrings.
std::vector<std::uint64_t> heavy_set(const std::vector<double>& q);

double hop(const std::vector<std::uint32_t>& samples, const std::vector<std::uint8_t>& heavy);
double lxe(const std::vector<std::uint32_t>& samples, const std::vector<double>& q);
/// 2^N sum q^2 - 1.
double ideal_lxe(const std::vector<double>& q);
double ideal_hop(const std::vector<double>& q, const std::vector<std::uint8_t>& heavy);
double estimate_agf(double lxe_measured, double lxe_ideal, int n);

/// Noiseless gate-by-gate execution of `pc` on `psi`; measurement outcomes
/// are drawn from a generator seeded with `seed`.
void execute(const circuits::PhysicalCircuit& pc, StateVector& psi, std::uint64_t seed = 0);

/// Noiseless gate-by-gate execution of a compiled circuit, including the
/// mid-circuit measurements of telegates. Returns the output distribution
/// over the working qubits.
std::vector<double> compiled_distribution(const circuits::PhysicalCircuit& pc, std::uint64_t seed = 0);

/// Monte Carlo trajectories: each shot draws a Pauli realization of every
/// channel. Shots sharing a realization share one simulated trajectory.
/// Samples are output bitstrings over the working qubits.
std::vector<std::uint32_t> run_noisy(const circuits::PhysicalCircuit& pc, const NoiseAttachment& noise, int shots,
                                     std::uint64_t seed, std::uint64_t stream = 0);
std::vector<std::uint32_t> run_noisy_serial(const circuits::PhysicalCircuit& pc, const NoiseAttachment& noise,
                                            int shots, std::uint64_t seed, std::uint64_t stream = 0);

struct CircuitMetrics {
  double hop = 0.0;
  double lxe = 0.0;
  double hop_ideal = 0.0;
  double lxe_ideal = 0.0;
};

struct MetricsResult {
  int n_working = 0;
  int n_circuits = 0;
  int shots = 0;
  std::uint64_t seed = 0;
  std::size_t heavy_set_size = 0;
  double hop = 0.0;
  double lxe = 0.0;
  double hop_ideal = 0.0;
  double lxe_ideal = 0.0;
  double agf_via_lxe = 0.0;
  /// Standard error of the mean of per-circuit AGF estimates.
  double agf_stderr = 0.0;
  double entanglement_pairs_per_circuit = 0.0;
  std::vector<CircuitMetrics> per_circuit;

  /// AGF estimated from circuit i alone.
  double circuit_agf(std::size_t i) const;
};

struct BenchmarkParams {
  int n_circuits = 200;
  int shots = 2000;
  std::uint64_t seed = 1;
};

/// Samples QV circuits (circuit i from derive_seed(seed, i)), compiles them
/// onto `graph`, runs them under `noise` and aggregates the metrics. The
/// same seed gives the same abstract circuits on every device of equal
/// width.
MetricsResult run_benchmark(const topology::ExtendedGraph& graph, const NoiseAttachment& noise,
                            const BenchmarkParams& params);
MetricsResult run_benchmark_serial(const topology::ExtendedGraph& graph, const NoiseAttachment& noise,
                                   const BenchmarkParams& params);

/// Sampled abstract circuit i of a benchmark.
circuits::Circuit benchmark_circuit(int n, std::uint64_t seed, int index);

}  // namespace dqcbench::sim
