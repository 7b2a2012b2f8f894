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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "devices.hpp"
#include "dqcbench/circuit_io.hpp"
#include "dqcbench/circuits.hpp"
#include "dqcbench/error.hpp"
#include "dqcbench/sim.hpp"
#include "lemma.hpp"

namespace dqcbench::circuits {
namespace {

using topology::TopologyKind;

double unitarity_error(const Eigen::MatrixXcd& u) {
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

TEST(Haar, UnitaryWithUnitDeterminant) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    Mat4 u = sample_su4(rng);
    EXPECT_LT(unitarity_error(u), 1e-12);
    EXPECT_NEAR(std::abs(u.determinant() - 1.0), 0.0, 1e-12);
  }
  EXPECT_LT(unitarity_error(sample_haar(8, rng)), 1e-12);
}

TEST(Haar, SecondMomentOfTrace) {
  Rng rng(17);
  double s = 0.0;
  const int k = 10000;
  for (int i = 0; i < k; ++i) s += std::norm(sample_su4(rng).trace());
  EXPECT_NEAR(s / k, 1.0, 0.05);
}

TEST(Haar, Deterministic) {
  Rng a(99), b(99);
  EXPECT_EQ(sample_su4(a), sample_su4(b));
}

TEST(QvCircuit, Shapes) {
  Rng rng(1);
  auto c2 = sample_qv_circuit(2, rng);
  ASSERT_EQ(c2.layers.size(), 2u);
  for (const auto& l : c2.layers) {
    ASSERT_EQ(l.gates.size(), 1u);
    EXPECT_EQ(l.gates[0].a, 0);
    EXPECT_EQ(l.gates[0].b, 1);
  }
  for (int n : {3, 5, 8}) {
    auto c = sample_qv_circuit(n, rng);
    ASSERT_EQ(static_cast<int>(c.layers.size()), n);
    for (const auto& l : c.layers) {
      ASSERT_EQ(static_cast<int>(l.gates.size()), n / 2);
      std::set<int> used;
      int prev = -1;
      for (const auto& g : l.gates) {
        EXPECT_LT(g.a, g.b);
        EXPECT_GT(g.a, prev);
        prev = g.a;
        EXPECT_TRUE(used.insert(g.a).second);
        EXPECT_TRUE(used.insert(g.b).second);
      }
    }
  }
}

TEST(QvCircuit, MatchingsAreUniform) {
  Rng rng(5);
  std::map<int, int> partner;  // of qubit 0
  const int circuits = 25000;
  for (int i = 0; i < circuits; ++i) {
    for (const auto& l : sample_qv_circuit(4, rng).layers) partner[l.gates[0].b]++;
  }
  const double total = 4.0 * circuits;
  for (int q = 1; q <= 3; ++q) EXPECT_NEAR(partner[q] / total, 1.0 / 3, 0.01);

  std::map<int, int> idle_counts;
  for (int i = 0; i < 5000; ++i) {
    for (const auto& l : sample_qv_circuit(3, rng).layers) {
      idle_counts[3 - l.gates[0].a - l.gates[0].b]++;
    }
  }
  for (int q = 0; q < 3; ++q) EXPECT_NEAR(idle_counts[q] / 15000.0, 1.0 / 3, 0.015);
}

int count_cnots(const std::vector<Gate>& seq) {
  int n = 0;
  for (const auto& g : seq) n += g.kind == GateKind::CNOT;
  return n;
}

TEST(Kak, RandomGatesReconstruct) {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    Mat4 u = sample_su4(rng);
    auto k = kak_decompose(u);
    EXPECT_EQ(count_cnots(k.sequence), 3);
    const Mat4 v = sequence_unitary(k.sequence);
    EXPECT_GT(std::abs((v.adjoint() * u).trace()) / 4, 1 - 1e-9);
    EXPECT_LT((u - k.sequence_phase * v).cwiseAbs().maxCoeff(), 1e-9);
    const Mat4 w = k.phase * gates::kron(k.after[0], k.after[1]) * canonical_gate(k.a, k.b, k.c) *
                   gates::kron(k.before[0], k.before[1]);
    EXPECT_LT((u - w).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Kak, SpecialGatesKeepThreeCnots) {
  const Mat4 id = Mat4::Identity();
  for (const Mat4& u : {id, gates::cnot_ab(), gates::cnot_ba(), gates::swap(), gates::kron(gates::h(), gates::x())}) {
    auto k = kak_decompose(u);
    EXPECT_EQ(count_cnots(k.sequence), 3);
    EXPECT_LT((u - k.sequence_phase * sequence_unitary(k.sequence)).cwiseAbs().maxCoeff(), 1e-9);
  }
  auto k = kak_decompose(id);
  EXPECT_NEAR(std::remainder(k.a, std::numbers::pi / 2), 0.0, 1e-9);
}

TEST(Kak, RejectsNonUnitary) {
  Mat4 m = Mat4::Identity();
  m(0, 0) = 2.0;
  EXPECT_THROW(kak_decompose(m), Error);
}

TEST(Kak, CanonicalGateIsExponential) {
  // exp(i a XX) for a single term has the closed form cos a I + i sin a XX.
  const Mat4 xx = gates::kron(gates::x(), gates::x());
  const Mat4 expect = std::cos(0.3) * Mat4(Mat4::Identity()) + Complex(0, std::sin(0.3)) * xx;
  EXPECT_LT((canonical_gate(0.3, 0, 0) - expect).cwiseAbs().maxCoeff(), 1e-14);
}

// Reduced density matrix of qubits (q0, q1), q0 most significant.
Mat4 reduced(const sim::StateVector& psi, int q0, int q1) {
  Mat4 rho = Mat4::Zero();
  const auto& a = psi.amplitudes();
  const std::size_t b0 = std::size_t{1} << q0, b1 = std::size_t{1} << q1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if ((i & ~(b0 | b1)) != (j & ~(b0 | b1))) continue;
      const int r = 2 * ((i & b0) != 0) + ((i & b1) != 0);
      const int c = 2 * ((j & b0) != 0) + ((j & b1) != 0);
      rho(r, c) += a[i] * std::conj(a[j]);
    }
  }
  return rho;
}

// Two working qubits 0 (control) and 1 (target) plus memories 2 and 3.
sim::StateVector prepared(const Mat2& u0, const Mat2& u1) {
  sim::StateVector psi(4);
  psi.apply_1q(0, u0);
  psi.apply_1q(1, u1);
  return psi;
}

TEST(Ejpp, ComputationalInputs) {
  PhysicalCircuit pc;
  pc.n_qubits = 4;
  pc.n_cbits = 2;
  pc.output_qubits = {0, 1};
  pc.gates = ejpp_cnot(0, 1, 2, 3, 0);
  ASSERT_EQ(pc.gates.size(), 7u);
  EXPECT_EQ(pc.gates[0].kind, GateKind::BellPrep);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto p00 = sim::compiled_distribution(pc, seed);
    EXPECT_NEAR(p00[0], 1.0, 1e-12);
    auto psi = prepared(gates::x(), Mat2::Identity());
    sim::execute(pc, psi, seed);
    EXPECT_NEAR(psi.marginal({0, 1})[3], 1.0, 1e-12);  // |10> -> |11>
  }
}

TEST(Ejpp, ProcessMatchesCnot) {
  PhysicalCircuit pc;
  pc.n_qubits = 4;
  pc.n_cbits = 2;
  pc.gates = ejpp_cnot(0, 1, 2, 3, 0);
  const Mat2 s = (Mat2() << 1, 0, 0, Complex(0, 1)).finished();
  const std::vector<Mat2> preps{Mat2::Identity(), gates::x(), gates::h(), s * gates::h()};
  Rng rng(4);
  std::vector<std::pair<Mat2, Mat2>> inputs;
  for (const auto& a : preps)
    for (const auto& b : preps) inputs.emplace_back(a, b);
  for (int i = 0; i < 8; ++i) {
    auto u = sample_haar(2, rng);
    auto v = sample_haar(2, rng);
    inputs.emplace_back(u, v);
  }
  for (const auto& [a, b] : inputs) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      auto psi = prepared(a, b);
      sim::execute(pc, psi, seed);
      auto ideal = prepared(a, b);
      ideal.apply_cnot(0, 1);
      // Both qubits sit in product with the memories afterwards.
      const Mat4 got = reduced(psi, 0, 1);
      const Mat4 want = reduced(ideal, 0, 1);
      EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
  // Entangled with a spectator qubit: populations in two bases.
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    sim::StateVector psi(5);
    psi.apply_1q(0, gates::h());
    psi.apply_1q(4, gates::ry(0.7));
    psi.apply_cnot(4, 0);
    psi.apply_1q(1, gates::ry(1.1));
    auto ideal = psi;
    PhysicalCircuit big = pc;
    big.n_qubits = 5;
    sim::execute(big, psi, seed);
    ideal.apply_cnot(0, 1);
    for (int basis = 0; basis < 2; ++basis) {
      if (basis == 1) {
        for (int q : {0, 1, 4}) {
          psi.apply_1q(q, gates::h());
          ideal.apply_1q(q, gates::h());
        }
      }
      auto m1 = psi.marginal({0, 1, 4});
      auto m2 = ideal.marginal({0, 1, 4});
      for (std::size_t x = 0; x < m1.size(); ++x) EXPECT_NEAR(m1[x], m2[x], 1e-10);
    }
  }
}

TEST(Compile, CompleteGraphNeedsNoRouting) {
  Rng rng(2);
  auto c = sample_qv_circuit(6, rng);
  auto pc = compile(c, standard_topology(TopologyKind::FullyConnected, 6, false));
  for (const auto& g : pc.gates) {
    EXPECT_NE(g.kind, GateKind::Swap);
    EXPECT_NE(g.kind, GateKind::BellPrep);
  }
  EXPECT_EQ(pc.entanglement_pairs_consumed, 0);
  EXPECT_EQ(pc.blocks.size(), 18u);
}

TEST(Compile, ClosedSwapChainOnLine) {
  Circuit c;
  c.n_qubits = 4;
  c.layers.push_back({{{0, 3, Mat4::Identity()}}});
  auto pc = compile(c, standard_topology(TopologyKind::Line1D, 4, false));
  std::vector<GateKind> kinds;
  for (const auto& g : pc.gates)
    if (g.kind != GateKind::SingleQubit) kinds.push_back(g.kind);
  using K = GateKind;
  EXPECT_EQ(kinds, (std::vector<K>{K::Swap, K::Swap, K::CNOT, K::CNOT, K::CNOT, K::Swap, K::Swap}));
  EXPECT_EQ(pc.gates.front().q0, 0);
  EXPECT_EQ(pc.gates.front().q1, 1);
}

TEST(Compile, CrossQpuGateUsesThreePairs) {
  Circuit c;
  c.n_qubits = 4;
  c.layers.push_back({{{0, 2, gates::cnot_ab()}}});
  auto g = testing::two_by_two_device();
  auto pc = compile(c, g);
  EXPECT_EQ(pc.entanglement_pairs_consumed, 3);
  int bells = 0;
  for (const auto& gate : pc.gates) bells += gate.kind == GateKind::BellPrep;
  EXPECT_EQ(bells, 3);
  EXPECT_EQ(pc.n_cbits, 6);
}

TEST(Compile, StructuralInvariants) {
  for (auto kind : {TopologyKind::FullyConnected, TopologyKind::Line1D, TopologyKind::Grid2D}) {
    for (bool dqc : {false, true}) {
      auto g = standard_topology(kind, 6, dqc);
      Rng rng(12);
      auto c = sample_qv_circuit(6, rng);
      auto pc = compile(c, g);
      auto again = compile(c, g);
      ASSERT_EQ(pc.gates.size(), again.gates.size());
      int cross = 0;
      for (const auto& b : pc.blocks) cross += b.kind == BlockKind::TelegateSu4;
      EXPECT_EQ(pc.entanglement_pairs_consumed, 3 * cross);
      for (std::size_t i = 0; i < pc.gates.size(); ++i) {
        const auto& gate = pc.gates[i];
        EXPECT_EQ(gate.kind, again.gates[i].kind);
        EXPECT_EQ(gate.q0, again.gates[i].q0);
        EXPECT_EQ(gate.q1, again.gates[i].q1);
        if (gate.kind == GateKind::CNOT || gate.kind == GateKind::Swap) {
          EXPECT_TRUE(g.coupled(gate.q0, gate.q1)) << gate.q0 << "-" << gate.q1;
        }
        if (gate.kind == GateKind::BellPrep) EXPECT_TRUE(g.entangled(gate.q0, gate.q1));
        if (gate.kind == GateKind::Swap) {
          EXPECT_TRUE(g.is_working(gate.q0) && g.is_working(gate.q1));
        }
      }
      // Memory qubits only appear inside telegate blocks.
      for (const auto& b : pc.blocks) {
        for (int i = b.begin; i < b.end; ++i) {
          const auto& gate = pc.gates[i];
          const bool touches = !g.is_working(gate.q0) || (gate.q1 >= 0 && !g.is_working(gate.q1));
          if (touches) EXPECT_EQ(b.kind, BlockKind::TelegateSu4);
        }
      }
      // Blocks tile the gate list in order.
      int next = 0;
      for (const auto& b : pc.blocks) {
        EXPECT_EQ(b.begin, next);
        next = b.end;
      }
      EXPECT_EQ(next, static_cast<int>(pc.gates.size()));
    }
  }
}

TEST(Compile, MatchesAbstractCircuit) {
  for (auto kind : {TopologyKind::FullyConnected, TopologyKind::Line1D, TopologyKind::Grid2D}) {
    for (bool dqc : {false, true}) {
      for (int n : {2, 3, 4}) {
        if (dqc && n % 2) continue;
        auto g = standard_topology(kind, n, dqc);
        for (int i = 0; i < 5; ++i) {
          auto c = sim::benchmark_circuit(n, 21, i);
          auto q = sim::ideal_distribution(c);
          auto p = sim::compiled_distribution(compile(c, g), i);
          double tv = 0.0;
          for (std::size_t x = 0; x < q.size(); ++x) tv += std::abs(q[x] - p[x]) / 2;
          EXPECT_LT(tv, 1e-6);
        }
      }
    }
  }
}

TEST(Compile, WidthMismatch) {
  Circuit c;
  c.n_qubits = 3;
  EXPECT_THROW(compile(c, standard_topology(TopologyKind::Line1D, 4, false)), Error);
}

TEST(CommutationLemma, MeanCommutatorVanishes) {
  Rng rng(31);
  for (double p : {0.0, 0.5, 0.9}) EXPECT_LT(testing::commutator_deviation(2000, p, rng), 0.1);
  // A single fixed gate does not commute.
  Rng one(31);
  EXPECT_GT(testing::commutator_deviation(1, 0.5, one), 0.1);
}

TEST(CircuitIo, RoundTrip) {
  Rng rng(6);
  auto c = sample_qv_circuit(5, rng);
  std::stringstream ss;
  write_circuit(ss, c);
  auto back = read_circuit(ss);
  ASSERT_EQ(back.layers.size(), c.layers.size());
  for (std::size_t l = 0; l < c.layers.size(); ++l) {
    for (std::size_t k = 0; k < c.layers[l].gates.size(); ++k) {
      EXPECT_EQ(back.layers[l].gates[k].a, c.layers[l].gates[k].a);
      EXPECT_EQ(back.layers[l].gates[k].unitary, c.layers[l].gates[k].unitary);
    }
  }
}

TEST(CircuitIo, PhysicalRoundTripKeepsBehaviour) {
  Rng rng(6);
  auto c = sample_qv_circuit(4, rng);
  auto pc = compile(c, standard_topology(TopologyKind::Line1D, 4, true));
  std::stringstream ss;
  write_physical(ss, pc);
  auto back = read_physical(ss);
  EXPECT_EQ(back.gates.size(), pc.gates.size());
  EXPECT_EQ(back.entanglement_pairs_consumed, pc.entanglement_pairs_consumed);
  auto p = sim::compiled_distribution(pc, 1);
  auto q = sim::compiled_distribution(back, 1);
  for (std::size_t x = 0; x < p.size(); ++x) EXPECT_NEAR(p[x], q[x], 1e-14);
}

TEST(CircuitIo, RejectsGarbage) {
  std::istringstream bad("qubits 2\nsu4 0 1 1 0\n");
  EXPECT_THROW(read_circuit(bad), Error);
  std::istringstream bad2("qubits 2 cbits 0 pairs 0\ncx 0 5\n");
  EXPECT_THROW(read_physical(bad2), Error);
}

}  // namespace
}  // namespace dqcbench::circuits
