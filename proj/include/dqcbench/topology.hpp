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

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dqcbench::topology {

/// Dense qubit index, 0..(N+M-1) within one device.
using QubitId = int;

enum class QubitRole { Working, Memory };

struct QubitInfo {
  QubitRole role = QubitRole::Working;
  int qpu = 0;
};

using Edge = std::pair<QubitId, QubitId>;

/// Extended connectivity graph of a one- or two-QPU device.
///
/// Coupling edges are physical couplings inside one QPU. Entanglement edges
/// join two memory qubits on different QPUs and carry the shared Bell pairs.
/// Construction validates every structural invariant, so a constructed
/// graph is always well formed and immutable afterwards.
class ExtendedGraph {
 public:
  ExtendedGraph(std::vector<QubitInfo> qubits, std::vector<Edge> coupling,
                std::vector<Edge> entanglement);

  int size() const { return static_cast<int>(qubits_.size()); }
  int n_working() const { return static_cast<int>(working_.size()); }
  int n_memory() const { return static_cast<int>(memory_.size()); }
  int n_qpus() const { return n_qpus_; }

  /// Working qubit ids in ascending order; position i is logical qubit i.
  const std::vector<QubitId>& working_qubits() const { return working_; }
  const std::vector<QubitId>& memory_qubits() const { return memory_; }

  QubitRole role(QubitId q) const { return qubits_.at(q).role; }
  int qpu(QubitId q) const { return qubits_.at(q).qpu; }
  bool is_working(QubitId q) const { return role(q) == QubitRole::Working; }
  const std::vector<QubitInfo>& qubits() const { return qubits_; }

  /// Sorted (a < b), deduplicated edge lists.
  const std::vector<Edge>& coupling_edges() const { return coupling_; }
  const std::vector<Edge>& entanglement_edges() const { return entanglement_; }

  /// Neighbours over both edge kinds, ascending.
  const std::vector<QubitId>& neighbors(QubitId q) const { return adjacency_.at(q); }
  bool coupled(QubitId a, QubitId b) const;
  bool entangled(QubitId a, QubitId b) const;
  /// Number of coupling edges at q.
  int coupling_degree(QubitId q) const;
  /// Index of q within working_qubits(), or -1 for memory qubits.
  int logical_index(QubitId q) const { return logical_.at(q); }

  bool is_dqc() const { return !entanglement_.empty(); }

 private:
  std::vector<QubitInfo> qubits_;
  std::vector<Edge> coupling_;
  std::vector<Edge> entanglement_;
  std::vector<std::vector<QubitId>> adjacency_;
  std::vector<QubitId> working_;
  std::vector<QubitId> memory_;
  std::vector<int> logical_;
  int n_qpus_ = 0;
};

enum class TopologyKind { FullyConnected, Line1D, Grid2D };

/// Where each QPU's memory qubit is attached.
struct MemoryPlacement {
  enum class Kind { Hub, Edge, Explicit };
  Kind kind = Kind::Hub;
  /// Explicit only: global working-qubit ids of the attachment sites, one
  /// per QPU (QPU A first).
  std::vector<QubitId> sites;

  static MemoryPlacement hub() { return {Kind::Hub, {}}; }
  static MemoryPlacement edge() { return {Kind::Edge, {}}; }
  static MemoryPlacement explicit_sites(QubitId a, QubitId b) { return {Kind::Explicit, {a, b}}; }
};

std::string to_string(TopologyKind kind);
TopologyKind parse_topology_kind(const std::string& text);
std::string to_string(MemoryPlacement::Kind kind);
MemoryPlacement::Kind parse_placement_kind(const std::string& text);

/// Rows x cols of the most-square grid with rows <= cols.
std::pair<int, int> grid_shape(int n);

/// Coupling graph of one QPU before it is placed in a device. Sites are
/// numbered 0..size-1.
struct LocalQpu {
  int size = 0;
  std::vector<Edge> edges;

  int degree(int site) const;
};

/// Local coupling graph of the given kind on n sites.
LocalQpu local_qpu(TopologyKind kind, int n);

/// Single-QPU device of n working qubits (ids 0..n-1).
ExtendedGraph single_qpu(TopologyKind kind, int n);

/// Joins two QPUs into a two-QPU device.
///
/// Working qubits of `a` get ids 0..|a|-1 and those of `b` follow. Memory
/// qubit m_a gets id N and is coupled to site `site_a` of `a`; m_b gets id
/// N+1 and is coupled to `site_b` of `b`. The memories share the channel.
ExtendedGraph join_qpus(const LocalQpu& a, const LocalQpu& b, int site_a, int site_b);

/// Hub site: maximal degree, lowest index on ties.
int hub_site(const LocalQpu& qpu);

/// The standard devices: for dqc=true the n working qubits are split n/2 +
/// n/2 and the placement decides where the memory qubits attach.
ExtendedGraph standard_topology(TopologyKind kind, int n_working, bool dqc,
                                const MemoryPlacement& placement = MemoryPlacement::hub());

/// Route between two working qubits.
struct SwapPath {
  std::vector<QubitId> nodes;
  /// The entanglement edge on the path, ordered in walking direction.
  std::optional<Edge> crossing;

  QubitId front() const { return nodes.front(); }
  QubitId back() const { return nodes.back(); }
  int hops() const { return static_cast<int>(nodes.size()) - 1; }
};

/// Shortest path from q to q2 over both edge kinds. Among equal-length paths
/// the lexicographically smallest node sequence wins.
SwapPath swap_path(const ExtendedGraph& graph, QubitId q, QubitId q2);

/// Hop distances from `source` over both edge kinds (-1 when unreachable).
std::vector<int> bfs_distances(const ExtendedGraph& graph, QubitId source);

}  // namespace dqcbench::topology
