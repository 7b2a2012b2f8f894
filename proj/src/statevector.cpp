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

#include "dqcbench/statevector.hpp"

#include <cmath>

#include "dqcbench/error.hpp"

namespace dqcbench::sim {

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 0 || n_qubits > 26) throw Error("state vector size out of range");
  amps_.assign(std::size_t{1} << n_qubits, Complex(0.0, 0.0));
  amps_[0] = 1.0;
}

void StateVector::apply_1q(int q, const Mat2& u) {
  const std::size_t bit = std::size_t{1} << q;
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const Complex v0 = amps_[i];
    const Complex v1 = amps_[i | bit];
    amps_[i] = u00 * v0 + u01 * v1;
    amps_[i | bit] = u10 * v0 + u11 * v1;
  }
}

void StateVector::apply_2q(int a, int b, const Mat4& u) {
  if (a == b) throw Error("two-qubit gate on a single qubit");
  const std::size_t ba = std::size_t{1} << a;
  const std::size_t bb = std::size_t{1} << b;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & (ba | bb)) continue;
    const std::size_t idx[4] = {i, i | bb, i | ba, i | ba | bb};
    Complex v[4];
    for (int k = 0; k < 4; ++k) v[k] = amps_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      amps_[idx[r]] = u(r, 0) * v[0] + u(r, 1) * v[1] + u(r, 2) * v[2] + u(r, 3) * v[3];
    }
  }
}

void StateVector::apply_cnot(int control, int target) {
  const std::size_t bc = std::size_t{1} << control;
  const std::size_t bt = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & bc) && !(i & bt)) std::swap(amps_[i], amps_[i | bt]);
  }
}

void StateVector::apply_swap(int a, int b) {
  const std::size_t ba = std::size_t{1} << a;
  const std::size_t bb = std::size_t{1} << b;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & ba) && !(i & bb)) std::swap(amps_[i], amps_[(i ^ ba) | bb]);
  }
}

void StateVector::apply_x(int q) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
  }
}

void StateVector::apply_z(int q) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) amps_[i] = -amps_[i];
  }
}

void StateVector::apply_pauli(int q, int code) {
  switch (code) {
    case 0:
      break;
    case 1:
      apply_x(q);
      break;
    case 2:
      // Y = iXZ; the global phase is dropped.
      apply_z(q);
      apply_x(q);
      break;
    case 3:
      apply_z(q);
      break;
    default:
      throw Error("bad Pauli code");
  }
}

double StateVector::probability_one(int q) const {
  const std::size_t bit = std::size_t{1} << q;
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) p += std::norm(amps_[i]);
  }
  return p;
}

void StateVector::collapse(int q, int bit_value) {
  const std::size_t bit = std::size_t{1} << q;
  double kept = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (((i & bit) != 0) != (bit_value != 0)) {
      amps_[i] = 0.0;
    } else {
      kept += std::norm(amps_[i]);
    }
  }
  if (kept <= 0.0) throw Error("collapse onto a zero-probability outcome");
  const double s = 1.0 / std::sqrt(kept);
  for (auto& a : amps_) a *= s;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

std::vector<double> StateVector::marginal(const std::vector<int>& qubits) const {
  std::vector<double> out(std::size_t{1} << qubits.size(), 0.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    const double p = std::norm(amps_[i]);
    if (p == 0.0) continue;
    std::size_t x = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      if (i >> qubits[k] & 1) x |= std::size_t{1} << k;
    }
    out[x] += p;
  }
  return out;
}

}  // namespace dqcbench::sim
