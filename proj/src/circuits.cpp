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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dqcbench/circuits.hpp"
#include "dqcbench/error.hpp"

namespace dqcbench::circuits {

Gate Gate::single(int q, const Mat2& u) { return {GateKind::SingleQubit, q, -1, -1, u}; }
Gate Gate::cnot(int control, int target) { return {GateKind::CNOT, control, target, -1, Mat2::Identity()}; }
Gate Gate::swap(int a, int b) { return {GateKind::Swap, a, b, -1, Mat2::Identity()}; }
Gate Gate::bell_prep(int a, int b) { return {GateKind::BellPrep, a, b, -1, Mat2::Identity()}; }
Gate Gate::measure_z(int q, int cbit) { return {GateKind::MeasureZ, q, -1, cbit, Mat2::Identity()}; }
Gate Gate::measure_x(int q, int cbit) { return {GateKind::MeasureX, q, -1, cbit, Mat2::Identity()}; }
Gate Gate::controlled(int q, const Mat2& u, int cbit) { return {GateKind::ClassicallyControlled, q, -1, cbit, u}; }

Eigen::MatrixXcd sample_haar(int dim, Rng& rng) {
  if (dim < 1) throw Error("sample_haar: dimension must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

Mat4 sample_su4(Rng& rng) {
  Mat4 u = sample_haar(4, rng);
  return u / std::pow(u.determinant(), 0.25);
}

Circuit sample_qv_circuit(int n, Rng& rng) {
  if (n < 1) throw Error("sample_qv_circuit: need at least one qubit");
  Circuit c;
  c.n_qubits = n;
  std::vector<int> order(n);
  for (int layer = 0; layer < n; ++layer) {
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      std::uniform_int_distribution<int> pick(0, i);
      std::swap(order[i], order[pick(rng)]);
    }
    Layer l;
    for (int i = 0; i + 1 < n; i += 2) {
      l.gates.push_back({std::min(order[i], order[i + 1]), std::max(order[i], order[i + 1]), Mat4()});
    }
    std::sort(l.gates.begin(), l.gates.end(), [](const Su4Gate& x, const Su4Gate& y) { return x.a < y.a; });
    for (auto& g : l.gates) g.unitary = sample_su4(rng);
    c.layers.push_back(std::move(l));
  }
  return c;
}

std::vector<Gate> ejpp_cnot(int control, int target, int mem_control, int mem_target, int first_cbit) {
  return {
      Gate::bell_prep(mem_control, mem_target),
      Gate::cnot(control, mem_control),
      Gate::measure_z(mem_control, first_cbit),
      Gate::controlled(mem_target, gates::x(), first_cbit),
      Gate::cnot(mem_target, target),
      Gate::measure_x(mem_target, first_cbit + 1),
      Gate::controlled(control, gates::z(), first_cbit + 1),
  };
}

namespace {

class Compiler {
 public:
  Compiler(const topology::ExtendedGraph& graph) : graph_(graph) {
    out_.n_qubits = graph.size();
    out_.output_qubits = graph.working_qubits();
  }

  void su4(const Su4Gate& g) {
    const auto& home = graph_.working_qubits();
    if (g.a < 0 || g.b < 0 || g.a >= graph_.n_working() || g.b >= graph_.n_working() || g.a == g.b) {
      throw Error("compile: gate operands out of range");
    }
    const int pa = home[g.a];
    const int pb = home[g.b];
    const int lo = std::min(pa, pb);
    const int hi = std::max(pa, pb);
    const auto path = topology::swap_path(graph_, lo, hi);
    const auto& nodes = path.nodes;
    const int last = static_cast<int>(nodes.size()) - 1;

    std::vector<std::pair<int, int>> swaps;
    int site_lo = 0;
    int site_hi = 0;
    if (!path.crossing) {
      for (int i = 0; i + 1 < last; ++i) swaps.emplace_back(nodes[i], nodes[i + 1]);
      site_lo = nodes[last - 1];
      site_hi = nodes[last];
    } else {
      const int ia = static_cast<int>(std::find(nodes.begin(), nodes.end(), path.crossing->first) - nodes.begin());
      for (int i = 0; i + 1 < ia; ++i) swaps.emplace_back(nodes[i], nodes[i + 1]);
      for (int j = last; j > ia + 2; --j) swaps.emplace_back(nodes[j], nodes[j - 1]);
      site_lo = nodes[ia - 1];
      site_hi = nodes[ia + 2];
    }

    for (const auto& [x, y] : swaps) emit_swap(x, y);
    const int site_a = pa == lo ? site_lo : site_hi;
    const int site_b = pa == lo ? site_hi : site_lo;
    const KakDecomposition kak = kak_decompose(g.unitary);

    Block block;
    block.a = site_a;
    block.b = site_b;
    block.unitary = g.unitary;
    block.begin = static_cast<int>(out_.gates.size());
    const int local[2] = {site_a, site_b};
    if (!path.crossing) {
      block.kind = BlockKind::LocalSu4;
      for (const Gate& s : kak.sequence) {
        if (s.kind == GateKind::CNOT) {
          out_.gates.push_back(Gate::cnot(local[s.q0], local[s.q1]));
        } else {
          out_.gates.push_back(Gate::single(local[s.q0], s.unitary));
        }
      }
    } else {
      block.kind = BlockKind::TelegateSu4;
      // Memory adjacent to each endpoint site.
      const int mem_lo = path.crossing->first;
      const int mem_hi = path.crossing->second;
      block.memory = {mem_lo, mem_hi};
      auto memory_of = [&](int site) { return site == site_lo ? mem_lo : mem_hi; };
      for (const Gate& s : kak.sequence) {
        if (s.kind == GateKind::CNOT) {
          const int c = local[s.q0];
          const int t = local[s.q1];
          for (const Gate& e : ejpp_cnot(c, t, memory_of(c), memory_of(t), out_.n_cbits)) out_.gates.push_back(e);
          out_.n_cbits += 2;
          ++out_.entanglement_pairs_consumed;
        } else {
          out_.gates.push_back(Gate::single(local[s.q0], s.unitary));
        }
      }
    }
    block.end = static_cast<int>(out_.gates.size());
    out_.blocks.push_back(block);
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) emit_swap(it->first, it->second);
  }

  PhysicalCircuit finish() { return std::move(out_); }

 private:
  void emit_swap(int x, int y) {
    Block b;
    b.kind = BlockKind::Swap;
    b.a = x;
    b.b = y;
    b.unitary = gates::swap();
    b.begin = static_cast<int>(out_.gates.size());
    out_.gates.push_back(Gate::swap(x, y));
    b.end = b.begin + 1;
    out_.blocks.push_back(b);
  }

  const topology::ExtendedGraph& graph_;
  PhysicalCircuit out_;
};

}  // namespace

PhysicalCircuit compile(const Circuit& circuit, const topology::ExtendedGraph& graph) {
  if (circuit.n_qubits != graph.n_working()) throw Error("compile: circuit width does not match the device");
  Compiler compiler(graph);
  for (const Layer& layer : circuit.layers)
    for (const Su4Gate& g : layer.gates) compiler.su4(g);
  return compiler.finish();
}

}  // namespace dqcbench::circuits
