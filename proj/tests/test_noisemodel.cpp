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
#include <sstream>

#include "devices.hpp"
#include "dqcbench/error.hpp"
#include "dqcbench/noisemodel.hpp"

namespace dqcbench::noisemodel {
namespace {

using testing::matrix;
using testing::third;
using topology::MemoryPlacement;
using topology::TopologyKind;

TEST(CostMatrix, CrossQpuPairOfTwoByTwoDevice) {
  auto g = testing::two_by_two_device();
  auto c = gate_cost_matrix(g, 0, 2);
  const Rational t = third();
  EXPECT_EQ(c.entries, matrix({{1, 2, 0, 0, t, t}, {1, 1, 0, 0, 0, 0}, {0, 0, 1, 0, t, t}, {0, 0, 0, 0, 0, 0}}));
}

TEST(CostMatrix, LinePairOneFour) {
  auto g = standard_topology(TopologyKind::Line1D, 5, false);
  auto c = gate_cost_matrix(g, 0, 3);
  EXPECT_EQ(c.entries, matrix({{1, 2, 2, 0, 0}, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 0}}));
}

TEST(CostMatrix, ThreeQubitDqcPair) {
  auto g = testing::three_qubit_dqc_device();
  auto c = gate_cost_matrix(g, 2, 4);
  const Rational t = third();
  EXPECT_EQ(c.entries, matrix({{t, t, 1, 2, 0}, {0, 0, 1, 1, 0}, {t, t, 0, 0, 1}}));
}

TEST(CostMatrix, EntanglementColumn) {
  auto g = testing::two_by_two_device();
  auto c = extend_entanglement_column(gate_cost_matrix(g, 0, 2), g);
  const Rational t = third();
  EXPECT_TRUE(c.has_entanglement_column);
  EXPECT_EQ(c.entries,
            matrix({{1, 2, 0, 0, t, t, t}, {1, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, t, t, t}, {0, 0, 0, 0, 0, 0, 0}}));

  auto local = extend_entanglement_column(gate_cost_matrix(g, 0, 1), g);
  for (int r = 0; r < local.entries.rows(); ++r) EXPECT_EQ(local.entries.at(r, 6), Rational(0));
}

TEST(CostMatrix, SamePairIsZero) {
  auto g = standard_topology(TopologyKind::Line1D, 4, false);
  EXPECT_EQ(gate_cost_matrix(g, 2, 2).entries.sum(), Rational(0));
  EXPECT_THROW(gate_cost_matrix(testing::two_by_two_device(), 0, 4), Error);
}

std::vector<topology::ExtendedGraph> devices() {
  std::vector<topology::ExtendedGraph> out;
  for (auto kind : {TopologyKind::FullyConnected, TopologyKind::Line1D, TopologyKind::Grid2D}) {
    for (int n : {3, 4, 6, 8}) out.push_back(standard_topology(kind, n, false));
    for (int n : {4, 6, 8}) out.push_back(standard_topology(kind, n, true));
  }
  out.push_back(standard_topology(TopologyKind::Line1D, 8, true, MemoryPlacement::edge()));
  return out;
}

TEST(CostMatrix, ColumnSumsDoNotDependOnArgumentOrder) {
  for (const auto& g : devices()) {
    for (int a : g.working_qubits()) {
      for (int b : g.working_qubits()) {
        auto x = gate_cost_matrix(g, a, b).entries;
        auto y = gate_cost_matrix(g, b, a).entries;
        for (int c = 0; c < x.cols(); ++c) EXPECT_EQ(x.column_sum(c), y.column_sum(c));
      }
    }
  }
}

TEST(CostMatrix, EntriesAreThirdsAndIntegralWithoutCrossing) {
  for (const auto& g : devices()) {
    for (int a : g.working_qubits()) {
      for (int b : g.working_qubits()) {
        if (a == b) continue;
        const bool crosses = topology::swap_path(g, a, b).crossing.has_value();
        auto c = gate_cost_matrix(g, a, b).entries;
        for (int r = 0; r < c.rows(); ++r) {
          for (int k = 0; k < c.cols(); ++k) {
            const Rational v = c.at(r, k);
            EXPECT_TRUE(v.den() == 1 || v.den() == 3);
            if (!crosses) EXPECT_TRUE(v.is_integer());
            EXPECT_GE(v, Rational(0));
          }
        }
        // 2 channels per swap on each leg plus 2 for the gate body.
        if (!crosses) EXPECT_EQ(c.sum(), Rational(2 + 4 * (topology::swap_path(g, a, b).hops() - 1)));
      }
    }
  }
}

TEST(Allocation, FullyConnectedIsIdentity) {
  for (int n = 2; n <= 8; ++n) {
    auto a = allocation_matrix(standard_topology(TopologyKind::FullyConnected, n, false));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) EXPECT_EQ(a.entries.at(r, c), Rational(r == c ? 1 : 0));
    EXPECT_EQ(a.characteristic_cost(), Rational(n));
  }
}

TEST(Allocation, LineOfFourByEnumeration) {
  auto g = standard_topology(TopologyKind::Line1D, 4, false);
  RationalMatrix sum(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a != b) sum += gate_cost_matrix(g, a, b).entries;
  sum /= Rational(6);
  EXPECT_EQ(allocation_matrix(g).entries, sum);
  // 12 ordered pairs: 6, 4 and 2 of them at distance 1, 2 and 3.
  EXPECT_EQ(allocation_matrix(g).characteristic_cost(), Rational(2 * 12 + 4 * (4 * 1 + 2 * 2), 6));
}

TEST(Allocation, SerialAndParallelAgree) {
  for (const auto& g : devices()) {
    EXPECT_EQ(allocation_matrix(g).entries, allocation_matrix_serial(g).entries);
    EXPECT_EQ(allocation_matrix(g, true).entries, allocation_matrix_serial(g, true).entries);
  }
}

TEST(Allocation, CostIsAtLeastN) {
  for (const auto& g : devices()) EXPECT_GE(allocation_matrix(g).characteristic_cost(), Rational(g.n_working()));
}

TEST(Allocation, AddingCouplingNeverIncreasesCost) {
  for (int n = 3; n <= 6; ++n) {
    auto line = standard_topology(TopologyKind::Line1D, n, false);
    const Rational base = allocation_matrix(line).characteristic_cost();
    for (int a = 0; a < n; ++a) {
      for (int b = a + 2; b < n; ++b) {
        auto edges = line.coupling_edges();
        edges.emplace_back(a, b);
        topology::ExtendedGraph g(line.qubits(), edges, {});
        EXPECT_LE(allocation_matrix(g).characteristic_cost(), base) << "edge " << a << "-" << b;
      }
    }
  }
}

TEST(Allocation, KnownCharacteristicCosts) {
  EXPECT_EQ(allocation_matrix(standard_topology(TopologyKind::Line1D, 8, false)).characteristic_cost(), Rational(40));
  EXPECT_EQ(allocation_matrix(standard_topology(TopologyKind::Grid2D, 8, false)).characteristic_cost(), Rational(24));
  auto hub = allocation_matrix(standard_topology(TopologyKind::Line1D, 8, true), true);
  EXPECT_EQ(hub.characteristic_cost(), Rational(712, 21));
  EXPECT_EQ(hub.entanglement_cost(), Rational(32, 21));
}

TEST(EjppShift, Values) {
  EXPECT_DOUBLE_EQ(ejpp_shift_exponent(1.0, 1.0), 1.0);
  for (double p : {0.0, 0.3, 0.9, 0.999}) EXPECT_NEAR(ejpp_shift_exponent(p, p), std::pow(p, 2.0 / 3.0), 1e-15);
  EXPECT_NEAR(ejpp_shift_exponent(0.997, 0.997), 0.997998998664328656532389421046, 1e-15);
}

TEST(EffectivePreserving, Noiseless) {
  auto g = standard_topology(TopologyKind::Grid2D, 6, true);
  for (double p : effective_preserving(allocation_matrix(g, true), NoiseSpec::uniform(g, 0.0))) EXPECT_EQ(p, 1.0);
}

TEST(EffectivePreserving, IdentityAllocationGivesBareFactor) {
  auto g = standard_topology(TopologyKind::FullyConnected, 5, false);
  NoiseSpec spec = NoiseSpec::uniform(g, 0.0);
  spec.per_qubit_error = {0.01, 0.02, 0.0, 0.5, 0.1};
  auto p = effective_preserving(allocation_matrix(g), spec);
  for (int q = 0; q < 5; ++q) EXPECT_NEAR(p[q], 1.0 - spec.per_qubit_error[q], 1e-15);
}

TEST(EffectivePreserving, LineOfFourAgainstLongDouble) {
  auto g = standard_topology(TopologyKind::Line1D, 4, false);
  auto a = allocation_matrix(g);
  auto p = effective_preserving(a, NoiseSpec::uniform(g, 0.005));
  for (int r = 0; r < 4; ++r) {
    long double expect = 1.0L;
    for (int c = 0; c < 4; ++c) {
      expect *= std::pow(0.995L, static_cast<long double>(a.entries.at(r, c).num()) / a.entries.at(r, c).den());
    }
    EXPECT_NEAR(p[r], static_cast<double>(expect), 1e-14);
  }
}

TEST(EffectivePreserving, CalibrationAndEntanglementColumn) {
  auto g = standard_topology(TopologyKind::Line1D, 4, true);
  auto a = allocation_matrix(g, true);
  auto spec = NoiseSpec::uniform(g, 0.01, 0.02, 0.8);
  auto p = effective_preserving(a, spec);
  for (int r = 0; r < 4; ++r) {
    long double expect = 1.0L;
    for (int c = 0; c < a.entries.cols(); ++c) {
      const long double e = a.entries.at(r, c).num() / static_cast<long double>(a.entries.at(r, c).den());
      expect *= std::pow(c == g.size() ? 0.98L : 1.0L - 0.8L * 0.01L, e);
    }
    EXPECT_NEAR(p[r], static_cast<double>(expect), 1e-14);
  }
}

TEST(NoiseSpec, Validation) {
  auto g = standard_topology(TopologyKind::Line1D, 3, false);
  EXPECT_THROW(NoiseSpec::uniform(g, 1.5), Error);
  EXPECT_THROW(NoiseSpec::uniform(g, 0.1, -0.1), Error);
  EXPECT_THROW(NoiseSpec::uniform(g, 0.1, 0.0, 0.0), Error);
  NoiseSpec s = NoiseSpec::uniform(g, 0.1);
  EXPECT_THROW(s.validate(4), Error);
}

TEST(Csv, ExactRationals) {
  auto g = testing::two_by_two_device();
  auto c = extend_entanglement_column(gate_cost_matrix(g, 0, 2), g);
  std::ostringstream os;
  write_csv(os, c.entries, g, true);
  EXPECT_EQ(os.str(),
            "row,q0,q1,q2,q3,m4,m5,ent\n"
            "q0,1,2,0,0,1/3,1/3,1/3\n"
            "q1,1,1,0,0,0,0,0\n"
            "q2,0,0,1,0,1/3,1/3,1/3\n"
            "q3,0,0,0,0,0,0,0\n");
}

}  // namespace
}  // namespace dqcbench::noisemodel
