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

#include "dqcbench/noisemodel.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "dqcbench/error.hpp"

namespace dqcbench::noisemodel {

NoiseSpec NoiseSpec::uniform(const ExtendedGraph& graph, double error, double entanglement_error,
                             double calibration_ratio) {
  NoiseSpec spec;
  spec.per_qubit_error.assign(graph.size(), error);
  spec.entanglement_error = entanglement_error;
  spec.calibration_ratio = calibration_ratio;
  spec.validate(graph.size());
  return spec;
}

void NoiseSpec::validate(int n_qubits) const {
  if (static_cast<int>(per_qubit_error.size()) != n_qubits) throw Error("noise spec does not match the device size");
  for (double e : per_qubit_error) {
    if (!(e >= 0.0 && e <= 1.0)) throw Error("error rates must lie in [0, 1]");
  }
  if (!(entanglement_error >= 0.0 && entanglement_error <= 1.0)) throw Error("entanglement error must lie in [0, 1]");
  // A fitted ratio can land slightly above 1; only r * eps <= 1 is required.
  if (!(calibration_ratio > 0.0)) throw Error("calibration ratio must be positive");
  for (double e : per_qubit_error) {
    if (calibration_ratio * e > 1.0) throw Error("calibrated error rate exceeds 1");
  }
}

Rational RationalMatrix::sum() const {
  Rational s;
  for (const auto& e : entries_) s += e;
  return s;
}

Rational RationalMatrix::column_sum(int c) const {
  Rational s;
  for (int r = 0; r < rows_; ++r) s += at(r, c);
  return s;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator/=(const Rational& d) {
  for (auto& e : entries_) e /= d;
  return *this;
}

void RationalMatrix::add_column() {
  std::vector<Rational> grown(static_cast<size_t>(rows_) * (cols_ + 1));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) grown[static_cast<size_t>(r) * (cols_ + 1) + c] = at(r, c);
  ++cols_;
  entries_ = std::move(grown);
}

Rational AllocationMatrix::characteristic_cost() const {
  const int qubit_cols = entries.cols() - (has_entanglement_column ? 1 : 0);
  Rational s;
  for (int r = 0; r < entries.rows(); ++r)
    for (int c = 0; c < qubit_cols; ++c) s += entries.at(r, c);
  return s;
}

Rational AllocationMatrix::entanglement_cost() const {
  return has_entanglement_column ? entries.column_sum(entries.cols() - 1) : Rational(0);
}

double ejpp_shift_exponent(double p_a, double p_b) { return std::cbrt(p_a * p_b); }

namespace {

// Tracks which qubit's state sits on each physical site while the swap
// chain runs. A channel applied on site s after a gate acts on whatever
// state currently occupies s and carries the preserving factor of s.
class ChannelLedger {
 public:
  ChannelLedger(const ExtendedGraph& graph, RationalMatrix& out) : graph_(graph), out_(out) {
    occupant_.resize(graph.size());
    for (QubitId q = 0; q < graph.size(); ++q) occupant_[q] = q;
  }

  void swap(QubitId a, QubitId b) {
    std::swap(occupant_[a], occupant_[b]);
    deposit(a, a, 1);
    deposit(b, b, 1);
  }

  // Channel of origin `col` on the state now held by `site`.
  void deposit(QubitId site, int col, Rational weight) {
    const int row = graph_.logical_index(occupant_[site]);
    if (row < 0) return;  // lands on a memory qubit's idle state
    out_.at(row, col) += weight;
  }

 private:
  const ExtendedGraph& graph_;
  RationalMatrix& out_;
  std::vector<QubitId> occupant_;
};

}  // namespace

CostMatrix gate_cost_matrix(const ExtendedGraph& graph, QubitId q, QubitId q2) {
  CostMatrix cost;
  cost.entries = RationalMatrix(graph.n_working(), graph.size());
  cost.gate_pair = {q, q2};
  if (q < 0 || q2 < 0 || q >= graph.size() || q2 >= graph.size()) throw Error("qubit out of range");
  if (!graph.is_working(q) || !graph.is_working(q2)) throw Error("cost matrices are defined for working qubits");
  if (q == q2) return cost;

  // The lower id walks toward the higher one; the pair's matrix does not
  // depend on argument order.
  const auto path = topology::swap_path(graph, std::min(q, q2), std::max(q, q2));
  const auto& nodes = path.nodes;
  const int last = static_cast<int>(nodes.size()) - 1;
  ChannelLedger ledger(graph, cost.entries);

  std::vector<std::pair<QubitId, QubitId>> swaps;
  QubitId site_lo = 0;
  QubitId site_hi = 0;
  if (!path.crossing) {
    for (int i = 0; i + 1 < last; ++i) swaps.emplace_back(nodes[i], nodes[i + 1]);
    site_lo = nodes[last - 1];
    site_hi = nodes[last];
  } else {
    const auto cross_at = std::find(nodes.begin(), nodes.end(), path.crossing->first) - nodes.begin();
    const int ia = static_cast<int>(cross_at);  // nodes[ia] ~ nodes[ia+1] is the channel
    for (int i = 0; i + 1 < ia; ++i) swaps.emplace_back(nodes[i], nodes[i + 1]);
    for (int j = last; j > ia + 2; --j) swaps.emplace_back(nodes[j], nodes[j - 1]);
    site_lo = nodes[ia - 1];
    site_hi = nodes[ia + 2];
  }

  for (const auto& [a, b] : swaps) ledger.swap(a, b);
  ledger.deposit(site_lo, site_lo, 1);
  ledger.deposit(site_hi, site_hi, 1);
  if (path.crossing) {
    const Rational third(1, 3);
    for (QubitId site : {site_lo, site_hi}) {
      ledger.deposit(site, path.crossing->first, third);
      ledger.deposit(site, path.crossing->second, third);
    }
  }
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) ledger.swap(it->first, it->second);
  return cost;
}

CostMatrix extend_entanglement_column(const CostMatrix& cost, const ExtendedGraph& graph) {
  if (cost.has_entanglement_column) throw Error("cost matrix already has an entanglement column");
  if (cost.entries.rows() != graph.n_working() || cost.entries.cols() != graph.size()) {
    throw Error("cost matrix does not belong to this graph");
  }
  CostMatrix out = cost;
  out.entries.add_column();
  out.has_entanglement_column = true;
  const auto [q, q2] = cost.gate_pair;
  if (q == q2) return out;
  const auto path = topology::swap_path(graph, std::min(q, q2), std::max(q, q2));
  if (path.crossing) {
    const int col = out.entries.cols() - 1;
    out.entries.at(graph.logical_index(q), col) += Rational(1, 3);
    out.entries.at(graph.logical_index(q2), col) += Rational(1, 3);
  }
  return out;
}

namespace {

RationalMatrix pair_cost(const ExtendedGraph& graph, QubitId q, QubitId q2, bool with_ent) {
  CostMatrix c = gate_cost_matrix(graph, q, q2);
  if (with_ent) c = extend_entanglement_column(c, graph);
  return c.entries;
}

AllocationMatrix normalize(RationalMatrix sum, const ExtendedGraph& graph, bool with_ent) {
  sum /= Rational(2 * (graph.n_working() - 1));
  return AllocationMatrix{std::move(sum), with_ent};
}

}  // namespace

AllocationMatrix allocation_matrix_serial(const ExtendedGraph& graph, bool with_ent) {
  const auto& w = graph.working_qubits();
  RationalMatrix sum(graph.n_working(), graph.size() + (with_ent ? 1 : 0));
  for (QubitId q : w)
    for (QubitId q2 : w)
      if (q != q2) sum += pair_cost(graph, q, q2, with_ent);
  return normalize(std::move(sum), graph, with_ent);
}

AllocationMatrix allocation_matrix(const ExtendedGraph& graph, bool with_ent) {
  const auto& w = graph.working_qubits();
  const int n = graph.n_working();
  const int cols = graph.size() + (with_ent ? 1 : 0);
  RationalMatrix sum(n, cols);
#pragma omp parallel
  {
    RationalMatrix local(n, cols);
#pragma omp for schedule(dynamic) nowait
    for (int k = 0; k < n * n; ++k) {
      const int i = k / n;
      const int j = k % n;
      if (i != j) local += pair_cost(graph, w[i], w[j], with_ent);
    }
#pragma omp critical
    sum += local;
  }
  return normalize(std::move(sum), graph, with_ent);
}

std::vector<double> effective_preserving(const AllocationMatrix& alloc, const NoiseSpec& noise) {
  const int qubit_cols = alloc.entries.cols() - (alloc.has_entanglement_column ? 1 : 0);
  noise.validate(qubit_cols);
  const double r = noise.calibration_ratio;
  std::vector<double> out(alloc.entries.rows(), 1.0);
  for (int row = 0; row < alloc.entries.rows(); ++row) {
    // Accumulate in log space; exact zeros are kept exact.
    double log_p = 0.0;
    bool zero = false;
    for (int c = 0; c < qubit_cols; ++c) {
      const double a = alloc.entries.at(row, c).to_double();
      if (a == 0.0) continue;
      const double p = 1.0 - r * noise.per_qubit_error[c];
      if (p <= 0.0) {
        zero = true;
        break;
      }
      log_p += a * std::log(p);
    }
    if (alloc.has_entanglement_column && !zero) {
      const double a = alloc.entries.at(row, qubit_cols).to_double();
      const double p = 1.0 - noise.entanglement_error;
      if (a != 0.0) {
        if (p <= 0.0) zero = true;
        else log_p += a * std::log(p);
      }
    }
    out[row] = zero ? 0.0 : std::exp(log_p);
  }
  return out;
}

void write_csv(std::ostream& out, const RationalMatrix& m, const ExtendedGraph& graph, bool entanglement_column) {
  out << "row";
  for (QubitId q = 0; q < graph.size(); ++q) out << (graph.is_working(q) ? ",q" : ",m") << q;
  if (entanglement_column) out << ",ent";
  out << '\n';
  for (int r = 0; r < m.rows(); ++r) {
    out << 'q' << graph.working_qubits()[r];
    for (int c = 0; c < m.cols(); ++c) out << ',' << m.at(r, c).str();
    out << '\n';
  }
}

}  // namespace dqcbench::noisemodel
