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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dqcbench/rational.hpp"
#include "dqcbench/sim.hpp"
#include "dqcbench/topology.hpp"

namespace dqcbench::experiments {

/// One device family of an experiment; instantiated once per size unless a
/// graph file fixes the device.
struct DeviceSpec {
  topology::TopologyKind kind = topology::TopologyKind::Line1D;
  bool dqc = false;
  topology::MemoryPlacement placement = topology::MemoryPlacement::hub();
  std::string graph_file;

  std::string label() const;
  /// The device at `n` working qubits.
  topology::ExtendedGraph build(int n) const;
};

struct ExperimentConfig {
  std::vector<DeviceSpec> devices;
  std::vector<int> sizes;
  std::vector<double> errors;
  std::vector<double> entanglement_errors{0.0};
  int circuits = 200;
  int shots = 2000;
  std::uint64_t seed = 1;
  sim::NoiseMode noise_mode = sim::NoiseMode::PerSU4;
  double cnot_scale = 1.0;
  double single_qubit_error = 0.0;
  std::string output;

  void validate() const;
  /// Parses the JSON config text. Unknown keys are rejected.
  static ExperimentConfig parse(const std::string& json_text);
  static ExperimentConfig load(const std::string& path);
  std::string to_json() const;
};

struct BenchmarkRecord {
  std::string device;
  int n = 0;
  double eps = 0.0;
  double eps_ent = 0.0;
  int circuits = 0;
  int shots = 0;
  std::uint64_t seed = 0;
  std::string noise_mode;
  double characteristic_cost = 0.0;
  double pairs_per_circuit = 0.0;
  // measured
  double hop = 0.0;
  double lxe = 0.0;
  double hop_ideal = 0.0;
  double lxe_ideal = 0.0;
  double agf_sim = 0.0;
  double agf_sim_stderr = 0.0;
  // predicted at r = 1
  double agf_pred = 0.0;
  double agf_approx = 0.0;
  double hop_pred = 0.0;
  double lxe_ratio_pred = 0.0;
  // calibration, per (device, n)
  double eps_eff = 0.0;
  double r_fit = 1.0;
  double agf_pred_fit = 0.0;
  double runtime_s = 0.0;
  /// Per-circuit AGF estimates, for paired comparisons; not written to CSV.
  std::vector<double> circuit_agf;
};

sim::NoiseAttachment make_noise(const ExperimentConfig& cfg, const topology::ExtendedGraph& g, double eps,
                                double eps_ent);

/// One simulated grid point with predictions at r = 1.
BenchmarkRecord run_point(const ExperimentConfig& cfg, const DeviceSpec& device, int n, double eps, double eps_ent,
                          bool parallel = true);

/// Devices x sizes x errors at the first entanglement error; r fitted per
/// (device, n).
std::vector<BenchmarkRecord> run_error_sweep(const ExperimentConfig& cfg);
/// Devices x sizes at the first error rate.
std::vector<BenchmarkRecord> run_size_sweep(const ExperimentConfig& cfg);
/// Devices x sizes x entanglement errors at the first error rate.
std::vector<BenchmarkRecord> run_entanglement_sweep(const ExperimentConfig& cfg);
/// Fits r_fit per (device, n) from the eps_eff already stored in the records.
void fit_calibration(std::vector<BenchmarkRecord>& records);

void write_records(std::ostream& os, const std::string& kind, const std::vector<BenchmarkRecord>& records);

struct PlacementRow {
  int site_a = 0;
  int site_b = 0;
  Rational cost;
  double agf_pred = 0.0;
  bool best = false;
};

/// Every memory attachment of an n/2 + n/2 device of `kind`, scored by
/// characteristic cost and predicted AGF at `eps`.
std::vector<PlacementRow> run_placement_search(topology::TopologyKind kind, int n, double eps);
void write_placement(std::ostream& os, const std::vector<PlacementRow>& rows);

struct PredictionRow {
  std::string device;
  int n = 0;
  double eps = 0.0;
  double eps_ent = 0.0;
  double characteristic_cost = 0.0;
  double entanglement_cost = 0.0;
  double agf_pred = 0.0;
  double agf_approx = 0.0;
  double hop_pred = 0.0;
  double lxe_ratio_pred = 0.0;
  double hop_ideal = 0.0;
};

/// Analytic predictions over the config grid. The ideal heavy output
/// probability is averaged over `cfg.circuits` noiseless circuits.
std::vector<PredictionRow> predict(const ExperimentConfig& cfg);
void write_predictions(std::ostream& os, const std::vector<PredictionRow>& rows);

/// Mean ideal heavy output probability over sampled circuits.
double mean_ideal_hop(int n, int circuits, std::uint64_t seed);

}  // namespace dqcbench::experiments
