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
#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "dqcbench/topology.hpp"

namespace dqcbench::circuits {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Rng = std::mt19937_64;

enum class GateKind { SingleQubit, CNOT, Swap, BellPrep, MeasureZ, MeasureX, ClassicallyControlled };

/// One physical operation.
///
/// Operands: SingleQubit, MeasureZ/X and ClassicallyControlled act on q0;
/// CNOT has control q0 and target q1; Swap and BellPrep act on (q0, q1).
/// Measurements write `cbit`; ClassicallyControlled applies `unitary` when
/// `cbit` is set.
struct Gate {
  GateKind kind = GateKind::SingleQubit;
  int q0 = -1;
  int q1 = -1;
  int cbit = -1;
  Mat2 unitary = Mat2::Identity();

  static Gate single(int q, const Mat2& u);
  static Gate cnot(int control, int target);
  static Gate swap(int a, int b);
  static Gate bell_prep(int a, int b);
  static Gate measure_z(int q, int cbit);
  static Gate measure_x(int q, int cbit);
  static Gate controlled(int q, const Mat2& u, int cbit);
};

/// Two-qubit gate of an abstract circuit. `a` is the most significant
/// tensor factor of `unitary`.
struct Su4Gate {
  int a = 0;
  int b = 1;
  Mat4 unitary = Mat4::Identity();
};

struct Layer {
  std::vector<Su4Gate> gates;
};

/// Abstract quantum-volume circuit over logical qubits 0..n-1.
struct Circuit {
  int n_qubits = 0;
  std::vector<Layer> layers;
};

enum class BlockKind { Swap, LocalSu4, TelegateSu4 };

/// Contiguous gate range implementing one swap or one SU(4).
///
/// For SU(4) blocks (a, b) are the physical sites holding the logical pair
/// while it executes and `unitary` is the block's net action on them (a
/// most significant). Telegate blocks also name the memory pair they use.
struct Block {
  BlockKind kind = BlockKind::Swap;
  int a = -1;
  int b = -1;
  int begin = 0;
  int end = 0;
  std::array<int, 2> memory{-1, -1};
  Mat4 unitary = Mat4::Identity();
};

/// Compiled gate stream over all qubits of an extended graph.
struct PhysicalCircuit {
  int n_qubits = 0;
  int n_cbits = 0;
  /// Physical ids of the working qubits in logical order; measured output
  /// bit i is output_qubits[i].
  std::vector<int> output_qubits;
  std::vector<Gate> gates;
  std::vector<Block> blocks;
  int entanglement_pairs_consumed = 0;
};

namespace gates {
Mat2 x();
Mat2 y();
Mat2 z();
Mat2 h();
Mat2 rz(double theta);
Mat2 ry(double theta);
Mat4 cnot_ab();  // control a (most significant), target b
Mat4 cnot_ba();
Mat4 swap();
Mat4 kron(const Mat2& a, const Mat2& b);
}  // namespace gates

/// Haar-random SU(4): QR of a complex Ginibre matrix with the phases of
/// R's diagonal folded into Q, rescaled to unit determinant.
Mat4 sample_su4(Rng& rng);

/// Haar-random unitary of any dimension (no determinant fix).
Eigen::MatrixXcd sample_haar(int dim, Rng& rng);

/// n layers; each pairs up a uniformly random 2 floor(n/2)-subset of the
/// qubits with a uniformly random perfect matching and attaches fresh SU(4)
/// gates. Gates in a layer are sorted by their smaller qubit.
Circuit sample_qv_circuit(int n, Rng& rng);

/// Decomposition U = phase * (A0 x A1) Can(a, b, c) (B0 x B1) with
/// Can(a, b, c) = exp(i (a XX + b YY + c ZZ)), plus the equivalent
/// three-CNOT gate sequence on local qubits 0 (most significant) and 1.
struct KakDecomposition {
  Complex phase{1.0, 0.0};
  std::array<Mat2, 2> before;
  std::array<Mat2, 2> after;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  /// Exactly three CNOTs; U = sequence_phase * sequence_unitary(sequence).
  std::vector<Gate> sequence;
  Complex sequence_phase{1.0, 0.0};
};

KakDecomposition kak_decompose(const Mat4& u);
/// exp(i (a XX + b YY + c ZZ)).
Mat4 canonical_gate(double a, double b, double c);
/// Product of a two-qubit gate sequence on local qubits 0 and 1.
Mat4 sequence_unitary(const std::vector<Gate>& sequence);

/// Nonlocal CNOT through one Bell pair. `mem_control` sits on the control's
/// QPU and `mem_target` on the target's. Uses classical bits first_cbit and
/// first_cbit + 1.
std::vector<Gate> ejpp_cnot(int control, int target, int mem_control, int mem_target, int first_cbit);

/// Routes and decomposes every SU(4) onto the device: local pairs use a
/// closed swap chain around a three-CNOT body, cross-QPU pairs run each CNOT
/// of the body as an EJPP telegate.
PhysicalCircuit compile(const Circuit& circuit, const topology::ExtendedGraph& graph);

}  // namespace dqcbench::circuits
