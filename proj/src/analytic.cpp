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

#include "dqcbench/analytic.hpp"

#include <cmath>
#include <numbers>

#include "dqcbench/error.hpp"

namespace dqcbench::analytic {

double dim(int n) { return std::ldexp(1.0, n); }

double global_agf(double wp, int n) { return wp + (1.0 - wp) / dim(n); }

double global_hop(double wp, double hop_ideal) { return hop_ideal * wp + 0.5 * (1.0 - wp); }

double global_lxe(double wp, double lxe_ideal) { return lxe_ideal * wp; }

double global_from_agf(double agf, int n) { return (dim(n) * agf - 1.0) / (dim(n) - 1.0); }

double agf_from_effective(const std::vector<double>& effective, int n) {
  const int exponent = 2 * (n / 2);
  double f = 1.0;
  for (double p : effective) f *= (1.0 + std::pow(p, exponent)) / 2.0;
  return f;
}

FidelityPrediction predicted_agf(const AllocationMatrix& alloc, const NoiseSpec& noise, int n_working) {
  FidelityPrediction out;
  out.per_qubit = noisemodel::effective_preserving(alloc, noise);
  out.layers_exponent = 2 * (n_working / 2);
  out.agf = agf_from_effective(out.per_qubit, n_working);
  return out;
}

FidelityPrediction predicted_agf(const ExtendedGraph& graph, const NoiseSpec& noise) {
  const bool with_ent = graph.is_dqc();
  return predicted_agf(noisemodel::allocation_matrix(graph, with_ent), noise, graph.n_working());
}

double approx_agf(double characteristic_cost, int n, double eps) {
  return std::exp(-n * characteristic_cost * eps / 2.0);
}

double hop_from_agf(double agf, double hop_ideal, int n) {
  const double d = dim(n);
  return hop_ideal * (d * agf - 1.0) / (d - 1.0) + (1.0 - agf) * (d / 2.0) / (d - 1.0);
}

double lxe_from_agf(double agf, double lxe_ideal, int n) {
  const double d = dim(n);
  return (d * agf - 1.0) / (d - 1.0) * lxe_ideal;
}

double agf_from_lxe(double lxe, double lxe_ideal, int n) {
  if (lxe_ideal == 0.0) throw Error("ideal cross entropy is zero; cannot invert");
  const double d = dim(n);
  return ((d - 1.0) * lxe / lxe_ideal + 1.0) / d;
}

double hop_from_lxe(double lxe, double lxe_ideal) {
  if (lxe_ideal == 0.0) throw Error("ideal cross entropy is zero; cannot invert");
  return 0.5 + 0.5 * std::numbers::ln2 * lxe / lxe_ideal;
}

double hop_from_agf_large_n(double agf) { return (1.0 + agf * std::numbers::ln2) / 2.0; }

double lxe_from_agf_large_n(double agf, double lxe_ideal) { return agf * lxe_ideal; }

Eigen::MatrixXd product_markov(const std::vector<double>& preserving) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Ones(1, 1);
  // Qubit 0 is the least significant bit, so it is the rightmost factor.
  for (double p : preserving) {
    Eigen::Matrix2d local;
    local << p + (1 - p) / 2, (1 - p) / 2, (1 - p) / 2, p + (1 - p) / 2;
    Eigen::MatrixXd next(m.rows() * 2, m.cols() * 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) = local(i, j) * m;
    m = std::move(next);
  }
  return m;
}

Eigen::MatrixXd MarkovTransfer::dense() const {
  const int d = 1 << n_qubits;
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(d, d, off_diagonal);
  m.diagonal().setConstant(diagonal);
  return m;
}

MarkovTransfer permutation_averaged_markov(const std::vector<double>& preserving) {
  MarkovTransfer t;
  t.n_qubits = static_cast<int>(preserving.size());
  if (t.n_qubits > 30) throw Error("too many qubits for an outcome transfer matrix");
  // Every diagonal entry of the product form equals prod (1 + P)/2, so the
  // average keeps it; rows sum to one, which fixes the off-diagonal value.
  double f = 1.0;
  for (double p : preserving) f *= (1.0 + p) / 2.0;
  t.diagonal = f;
  t.off_diagonal = t.n_qubits == 0 ? 0.0 : (1.0 - f) / (dim(t.n_qubits) - 1.0);
  return t;
}

PlacementSearch optimize_memory_placement(const topology::LocalQpu& a, const topology::LocalQpu& b) {
  PlacementSearch out;
  bool first = true;
  for (int sa = 0; sa < a.size; ++sa) {
    for (int sb = 0; sb < b.size; ++sb) {
      const auto graph = topology::join_qpus(a, b, sa, sb);
      PlacementScore s{sa, sb, noisemodel::allocation_matrix(graph).characteristic_cost()};
      if (first || s.cost < out.best.cost) out.best = s;
      first = false;
      out.scores.push_back(s);
    }
  }
  if (first) throw Error("placement search needs non-empty QPUs");
  return out;
}

double calibration_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.empty()) throw Error("calibration fit needs at least one point");
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& [x, y] : points) {
    sxy += x * y;
    sxx += x * x;
  }
  if (sxx == 0.0) throw Error("calibration fit is degenerate: all input error rates are zero");
  return sxy / sxx;
}

namespace {

template <class F>
double bisect(F&& f, double lo, double hi) {
  // f(lo) and f(hi) bracket a sign change; 200 halvings reach double precision.
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

NoiseSpec uniform_spec(int n_qubits, double eps, double eps_e, double r) {
  NoiseSpec spec;
  spec.per_qubit_error.assign(n_qubits, eps);
  spec.entanglement_error = eps_e;
  spec.calibration_ratio = r;
  return spec;
}

int qubit_columns(const AllocationMatrix& alloc) {
  return alloc.entries.cols() - (alloc.has_entanglement_column ? 1 : 0);
}

}  // namespace

double infer_uniform_error(const AllocationMatrix& alloc, int n_working, double agf) {
  const int cols = qubit_columns(alloc);
  auto f = [&](double eps) { return predicted_agf(alloc, uniform_spec(cols, eps, 0.0, 1.0), n_working).agf - agf; };
  if (f(0.0) <= 0.0) return 0.0;
  if (f(1.0) >= 0.0) return 1.0;
  return bisect(f, 0.0, 1.0);
}

double entanglement_crossover(const AllocationMatrix& dqc_alloc, const AllocationMatrix& single_alloc,
                              int n_working, double eps, double calibration_ratio) {
  if (!dqc_alloc.has_entanglement_column) throw Error("crossover needs the entanglement column");
  const double target =
      predicted_agf(single_alloc, uniform_spec(qubit_columns(single_alloc), eps, 0.0, calibration_ratio), n_working).agf;
  const int cols = qubit_columns(dqc_alloc);
  auto f = [&](double eps_e) {
    return predicted_agf(dqc_alloc, uniform_spec(cols, eps, eps_e, calibration_ratio), n_working).agf - target;
  };
  if (f(0.0) <= 0.0) return -1.0;
  if (f(1.0) >= 0.0) return 1.0;
  return bisect(f, 0.0, 1.0);
}

}  // namespace dqcbench::analytic
