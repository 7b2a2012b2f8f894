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

#include <complex>
#include <cstdint>
#include <vector>

#include "dqcbench/circuits.hpp"

namespace dqcbench::sim {

using circuits::Complex;
using circuits::Mat2;
using circuits::Mat4;

/// Dense pure state; qubit k is bit k of the amplitude index.
class StateVector {
 public:
  explicit StateVector(int n_qubits);

  int n_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  std::vector<Complex>& amplitudes() { return amps_; }

  void apply_1q(int q, const Mat2& u);
  /// `a` is the most significant factor of `u`.
  void apply_2q(int a, int b, const Mat4& u);
  void apply_cnot(int control, int target);
  void apply_swap(int a, int b);
  void apply_x(int q);
  void apply_z(int q);
  /// Pauli by code: 0 = I, 1 = X, 2 = Y, 3 = Z.
  void apply_pauli(int q, int code);

  double probability_one(int q) const;
  /// Projects qubit q onto `bit` and renormalizes.
  void collapse(int q, int bit);
  double norm() const;

  /// Probabilities of the listed qubits, bit i of the result index being
  /// qubits[i]; all other qubits are traced out.
  std::vector<double> marginal(const std::vector<int>& qubits) const;

 private:
  int n_;
  std::vector<Complex> amps_;
};

}  // namespace dqcbench::sim
