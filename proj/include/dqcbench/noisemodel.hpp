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

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "dqcbench/rational.hpp"
#include "dqcbench/topology.hpp"

namespace dqcbench::noisemodel {

using topology::ExtendedGraph;
using topology::QubitId;

/// Gate-level noise of a device.
struct NoiseSpec {
  /// Error rate per qubit id; the preserving factor is 1 - rate.
  std::vector<double> per_qubit_error;
  /// Depolarizing rate of each shared Bell pair.
  double entanglement_error = 0.0;
  /// Scale applied to local error rates (fitted, typically 0.8 to 1).
  double calibration_ratio = 1.0;

  /// Same rate on every qubit of `graph`.
  static NoiseSpec uniform(const ExtendedGraph& graph, double error, double entanglement_error = 0.0,
                           double calibration_ratio = 1.0);
  void validate(int n_qubits) const;
  double preserving(QubitId q) const { return 1.0 - per_qubit_error.at(q); }
};

/// Rows are working qubits (ascending id), columns are all qubit ids,
/// optionally followed by one column for the shared entanglement.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return entries_.at(static_cast<size_t>(r) * cols_ + c); }
  const Rational& at(int r, int c) const { return entries_.at(static_cast<size_t>(r) * cols_ + c); }
  Rational sum() const;
  Rational column_sum(int c) const;
  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator/=(const Rational& d);
  /// Appends an all-zero column.
  void add_column();

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

/// Single-qubit depolarizing channels that implementing one SU(4) on the
/// pair (q, q2) deposits on each working qubit, by qubit of origin.
struct CostMatrix {
  RationalMatrix entries;
  std::pair<QubitId, QubitId> gate_pair{0, 0};
  bool has_entanglement_column = false;
};

/// Normalized sum of the cost matrices of all ordered working pairs.
struct AllocationMatrix {
  RationalMatrix entries;
  bool has_entanglement_column = false;

  /// Sum over working rows and qubit columns (the entanglement column is
  /// reported separately).
  Rational characteristic_cost() const;
  Rational entanglement_cost() const;
};

/// Preserving factor each working endpoint receives from a telegate that
/// consumes a memory pair with factors p_a and p_b: (p_a p_b)^(1/3).
double ejpp_shift_exponent(double p_a, double p_b);

CostMatrix gate_cost_matrix(const ExtendedGraph& graph, QubitId q, QubitId q2);

/// Appends the entanglement column: 1/3 on both endpoints when the pair's
/// path crosses the channel, zeros otherwise.
CostMatrix extend_entanglement_column(const CostMatrix& cost, const ExtendedGraph& graph);

/// OpenMP-parallel over gate pairs.
AllocationMatrix allocation_matrix(const ExtendedGraph& graph, bool with_entanglement_column = false);
/// Serial reference; identical output.
AllocationMatrix allocation_matrix_serial(const ExtendedGraph& graph, bool with_entanglement_column = false);

/// Effective preserving factor per working qubit, indexed like
/// graph.working_qubits(): prod_q' (1 - r eps_q')^A[q][q'] times
/// (1 - eps_E)^A[q][E] when the entanglement column is present.
std::vector<double> effective_preserving(const AllocationMatrix& alloc, const NoiseSpec& noise);

/// CSV with exact rational entries; header row names the column qubits.
void write_csv(std::ostream& out, const RationalMatrix& m, const ExtendedGraph& graph, bool entanglement_column);

}  // namespace dqcbench::noisemodel
