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

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "dqcbench/noisemodel.hpp"
#include "dqcbench/topology.hpp"

namespace dqcbench::analytic {

using noisemodel::AllocationMatrix;
using noisemodel::NoiseSpec;
using topology::ExtendedGraph;

/// 2^n as a double.
double dim(int n);

// Global depolarizing channel with preserving factor `wp` on n qubits.
double global_agf(double wp, int n);
double global_hop(double wp, double hop_ideal);
double global_lxe(double wp, double lxe_ideal);
/// Preserving factor of the global channel with the given average gate
/// fidelity: (2^n F - 1) / (2^n - 1).
double global_from_agf(double agf, int n);

struct FidelityPrediction {
  double agf = 1.0;
  /// Effective preserving factor per working qubit (graph.working_qubits() order).
  std::vector<double> per_qubit;
  /// Channels per qubit per circuit in the fully connected limit: 2 floor(n/2).
  int layers_exponent = 0;
};

/// prod_q (1 + P_q^(2 floor(n/2))) / 2 over the working qubits.
double agf_from_effective(const std::vector<double>& effective, int n);

FidelityPrediction predicted_agf(const ExtendedGraph& graph, const NoiseSpec& noise);
/// Same, reusing a precomputed allocation matrix. The entanglement column is
/// honoured when present.
FidelityPrediction predicted_agf(const AllocationMatrix& alloc, const NoiseSpec& noise, int n_working);

/// exp(-n * cost * eps / 2).
double approx_agf(double characteristic_cost, int n, double eps);

// Finite-n correspondences between AGF, heavy output probability and linear
// cross entropy under permutation-averaged depolarizing noise.
double hop_from_agf(double agf, double hop_ideal, int n);
double lxe_from_agf(double agf, double lxe_ideal, int n);
double agf_from_lxe(double lxe, double lxe_ideal, int n);
double hop_from_lxe(double lxe, double lxe_ideal);

// 2^n >> 1 limits; only for comparison with the exact forms above.
double hop_from_agf_large_n(double agf);
double lxe_from_agf_large_n(double agf, double lxe_ideal);

/// Markov matrix of outcome transfer under product depolarizing noise:
/// kron_q (P_q I + (1 - P_q)/2 J). Qubit 0 is the least significant bit.
Eigen::MatrixXd product_markov(const std::vector<double>& preserving);

/// Two-parameter outcome transfer matrix left after averaging the product
/// form over all outcome relabelings.
struct MarkovTransfer {
  int n_qubits = 0;
  double diagonal = 1.0;
  double off_diagonal = 0.0;

  Eigen::MatrixXd dense() const;
};

MarkovTransfer permutation_averaged_markov(const std::vector<double>& preserving);

/// One scored memory attachment: local sites on QPU A and QPU B.
struct PlacementScore {
  int site_a = 0;
  int site_b = 0;
  Rational cost;
};

struct PlacementSearch {
  std::vector<PlacementScore> scores;  // every pair, site_a-major order
  PlacementScore best;
};

/// Scores every memory attachment by characteristic cost and returns the
/// minimiser (lowest index pair on ties).
PlacementSearch optimize_memory_placement(const topology::LocalQpu& a, const topology::LocalQpu& b);

/// Least-squares slope through the origin of eps_eff against eps_in.
double calibration_fit(const std::vector<std::pair<double, double>>& points);

/// Uniform error rate at which predicted_agf (r = 1, no entanglement noise)
/// equals `agf`. Bisection; `agf` is clamped to the attainable range.
double infer_uniform_error(const AllocationMatrix& alloc, int n_working, double agf);

/// Entanglement error at which the two-QPU device's predicted AGF falls to
/// the single-QPU device's. Requires `dqc_alloc` with the entanglement
/// column. Returns a negative value when the two-QPU device is already worse
/// at zero entanglement noise.
double entanglement_crossover(const AllocationMatrix& dqc_alloc, const AllocationMatrix& single_alloc,
                              int n_working, double eps, double calibration_ratio = 1.0);

}  // namespace dqcbench::analytic
