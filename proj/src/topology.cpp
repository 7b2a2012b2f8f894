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

#include "dqcbench/topology.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "dqcbench/error.hpp"

namespace dqcbench::topology {

namespace {

Edge ordered(Edge e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}

std::vector<Edge> normalize_edges(std::vector<Edge> edges, int n, const char* what) {
  for (auto& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n) {
      throw Error(std::string(what) + " edge references unknown qubit");
    }
    if (e.first == e.second) throw Error(std::string(what) + " edge is a self loop");
    e = ordered(e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

// Connectivity of `members` using only the given edges.
bool connected(const std::vector<QubitId>& members, const std::vector<Edge>& edges, int n) {
  if (members.empty()) return true;
  std::vector<std::vector<QubitId>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> in_set(n, 0);
  for (QubitId q : members) in_set[q] = 1;
  std::vector<char> seen(n, 0);
  std::deque<QubitId> queue{members.front()};
  seen[members.front()] = 1;
  int reached = 0;
  while (!queue.empty()) {
    const QubitId q = queue.front();
    queue.pop_front();
    ++reached;
    for (QubitId r : adj[q]) {
      if (in_set[r] && !seen[r]) {
        seen[r] = 1;
        queue.push_back(r);
      }
    }
  }
  return reached == static_cast<int>(members.size());
}

}  // namespace

ExtendedGraph::ExtendedGraph(std::vector<QubitInfo> qubits, std::vector<Edge> coupling,
                             std::vector<Edge> entanglement)
    : qubits_(std::move(qubits)) {
  const int n = size();
  if (n == 0) throw Error("graph has no qubits");
  coupling_ = normalize_edges(std::move(coupling), n, "coupling");
  entanglement_ = normalize_edges(std::move(entanglement), n, "entanglement");

  int max_qpu = -1;
  for (const auto& info : qubits_) {
    if (info.qpu < 0) throw Error("negative qpu label");
    max_qpu = std::max(max_qpu, info.qpu);
  }
  n_qpus_ = max_qpu + 1;
  if (n_qpus_ > 2) throw Error("devices with more than two QPUs are not supported");

  logical_.assign(n, -1);
  for (QubitId q = 0; q < n; ++q) {
    if (qubits_[q].role == QubitRole::Working) {
      logical_[q] = static_cast<int>(working_.size());
      working_.push_back(q);
    } else {
      memory_.push_back(q);
    }
  }
  if (n_working() < 2) throw Error("a device needs at least two working qubits");
  if (n_memory() != 0 && n_memory() != 2) throw Error("a device has either zero or two memory qubits");

  for (const auto& [a, b] : coupling_) {
    if (qubits_[a].qpu != qubits_[b].qpu) throw Error("coupling edge crosses QPUs");
  }
  std::vector<int> channels(n, 0);
  for (const auto& [a, b] : entanglement_) {
    if (qubits_[a].qpu == qubits_[b].qpu) throw Error("entanglement edge inside one QPU");
    if (qubits_[a].role != QubitRole::Memory || qubits_[b].role != QubitRole::Memory) {
      throw Error("entanglement edge must join two memory qubits");
    }
    if (++channels[a] > 1 || ++channels[b] > 1) {
      throw Error("memory qubit in more than one entanglement channel");
    }
  }
  if (n_memory() == 2) {
    if (entanglement_.size() != 1) throw Error("two-QPU device needs exactly one entanglement channel");
    if (n_qpus_ != 2) throw Error("memory qubits require a two-QPU device");
  } else if (!entanglement_.empty() || n_qpus_ != 1) {
    throw Error("a two-QPU device needs one memory qubit per QPU");
  }

  for (int p = 0; p < n_qpus_; ++p) {
    std::vector<QubitId> members;
    for (QubitId q = 0; q < n; ++q) {
      if (qubits_[q].qpu == p) members.push_back(q);
    }
    if (members.empty()) throw Error("qpu label " + std::to_string(p) + " is unused");
    if (!connected(members, coupling_, n)) {
      throw Error("QPU " + std::to_string(p) + " is not connected");
    }
  }

  adjacency_.assign(n, {});
  for (const auto* list : {&coupling_, &entanglement_}) {
    for (const auto& [a, b] : *list) {
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool ExtendedGraph::coupled(QubitId a, QubitId b) const {
  return std::binary_search(coupling_.begin(), coupling_.end(), ordered({a, b}));
}

bool ExtendedGraph::entangled(QubitId a, QubitId b) const {
  return std::binary_search(entanglement_.begin(), entanglement_.end(), ordered({a, b}));
}

int ExtendedGraph::coupling_degree(QubitId q) const {
  int d = 0;
  for (const auto& [a, b] : coupling_) d += (a == q || b == q);
  return d;
}

std::string to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::FullyConnected: return "full";
    case TopologyKind::Line1D: return "line";
    case TopologyKind::Grid2D: return "grid";
  }
  return "?";
}

TopologyKind parse_topology_kind(const std::string& text) {
  if (text == "full" || text == "FullyConnected") return TopologyKind::FullyConnected;
  if (text == "line" || text == "Line1D" || text == "1d") return TopologyKind::Line1D;
  if (text == "grid" || text == "Grid2D" || text == "2d") return TopologyKind::Grid2D;
  throw Error("unknown topology kind '" + text + "'");
}

std::string to_string(MemoryPlacement::Kind kind) {
  switch (kind) {
    case MemoryPlacement::Kind::Hub: return "hub";
    case MemoryPlacement::Kind::Edge: return "edge";
    case MemoryPlacement::Kind::Explicit: return "explicit";
  }
  return "?";
}

MemoryPlacement::Kind parse_placement_kind(const std::string& text) {
  if (text == "hub") return MemoryPlacement::Kind::Hub;
  if (text == "edge") return MemoryPlacement::Kind::Edge;
  if (text == "explicit") return MemoryPlacement::Kind::Explicit;
  throw Error("unknown memory placement '" + text + "'");
}

std::pair<int, int> grid_shape(int n) {
  int rows = 1;
  for (int r = 1; r * r <= n; ++r) {
    if (n % r == 0) rows = r;
  }
  return {rows, n / rows};
}

int LocalQpu::degree(int site) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == site || b == site);
  return d;
}

LocalQpu local_qpu(TopologyKind kind, int n) {
  if (n < 1) throw Error("a QPU needs at least one qubit");
  LocalQpu qpu{n, {}};
  auto& edges = qpu.edges;
  switch (kind) {
    case TopologyKind::FullyConnected:
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
      break;
    case TopologyKind::Line1D:
      for (int a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
      break;
    case TopologyKind::Grid2D: {
      const auto [rows, cols] = grid_shape(n);
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          const int q = r * cols + c;
          if (c + 1 < cols) edges.emplace_back(q, q + 1);
          if (r + 1 < rows) edges.emplace_back(q, q + cols);
        }
      }
      break;
    }
  }
  return qpu;
}

ExtendedGraph single_qpu(TopologyKind kind, int n) {
  const LocalQpu qpu = local_qpu(kind, n);
  return ExtendedGraph(std::vector<QubitInfo>(n), qpu.edges, {});
}

ExtendedGraph join_qpus(const LocalQpu& a, const LocalQpu& b, int site_a, int site_b) {
  if (site_a < 0 || site_a >= a.size || site_b < 0 || site_b >= b.size) {
    throw Error("memory attachment site out of range");
  }
  const int n = a.size + b.size;
  std::vector<QubitInfo> qubits(n + 2);
  for (int q = a.size; q < n; ++q) qubits[q].qpu = 1;
  qubits[n] = {QubitRole::Memory, 0};
  qubits[n + 1] = {QubitRole::Memory, 1};
  std::vector<Edge> coupling = a.edges;
  for (const auto& [x, y] : b.edges) coupling.emplace_back(x + a.size, y + a.size);
  coupling.emplace_back(site_a, n);
  coupling.emplace_back(site_b + a.size, n + 1);
  return ExtendedGraph(std::move(qubits), std::move(coupling), {{n, n + 1}});
}

int hub_site(const LocalQpu& qpu) {
  int best = 0;
  for (int s = 1; s < qpu.size; ++s) {
    if (qpu.degree(s) > qpu.degree(best)) best = s;
  }
  return best;
}

ExtendedGraph standard_topology(TopologyKind kind, int n_working, bool dqc,
                                const MemoryPlacement& placement) {
  if (n_working < 2) throw Error("a device needs at least two working qubits");
  if (!dqc) return single_qpu(kind, n_working);
  if (n_working % 2 != 0) throw Error("a two-QPU device needs an even number of working qubits");
  const int half = n_working / 2;
  const LocalQpu local = local_qpu(kind, half);
  int site_a = 0;
  int site_b = 0;
  switch (placement.kind) {
    case MemoryPlacement::Kind::Hub:
      site_a = site_b = hub_site(local);
      break;
    case MemoryPlacement::Kind::Edge: {
      if (kind != TopologyKind::Line1D) throw Error("edge placement is defined for line QPUs only");
      // Lowest-index endpoint of the line; both halves are identical lines.
      site_a = site_b = 0;
      break;
    }
    case MemoryPlacement::Kind::Explicit:
      if (placement.sites.size() != 2) throw Error("explicit placement needs two sites");
      site_a = placement.sites[0];
      site_b = placement.sites[1] - half;
      if (site_a < 0 || site_a >= half || site_b < 0 || site_b >= half) {
        throw Error("explicit memory sites must be one working qubit on each QPU");
      }
      break;
  }
  return join_qpus(local, local, site_a, site_b);
}

std::vector<int> bfs_distances(const ExtendedGraph& graph, QubitId source) {
  std::vector<int> dist(graph.size(), -1);
  std::deque<QubitId> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const QubitId q = queue.front();
    queue.pop_front();
    for (QubitId r : graph.neighbors(q)) {
      if (dist[r] < 0) {
        dist[r] = dist[q] + 1;
        queue.push_back(r);
      }
    }
  }
  return dist;
}

SwapPath swap_path(const ExtendedGraph& graph, QubitId q, QubitId q2) {
  if (q < 0 || q2 < 0 || q >= graph.size() || q2 >= graph.size()) throw Error("qubit out of range");
  if (q == q2) throw Error("swap_path needs two distinct qubits");
  if (!graph.is_working(q) || !graph.is_working(q2)) throw Error("swap_path endpoints must be working qubits");
  // Walking greedily toward the target over distance-decreasing neighbours,
  // always taking the smallest id, yields the lexicographically smallest
  // shortest path.
  const std::vector<int> to_target = bfs_distances(graph, q2);
  if (to_target[q] < 0) throw Error("endpoints are disconnected");
  SwapPath path;
  path.nodes.push_back(q);
  QubitId cur = q;
  while (cur != q2) {
    for (QubitId next : graph.neighbors(cur)) {
      if (to_target[next] == to_target[cur] - 1) {
        if (graph.entangled(cur, next)) {
          if (path.crossing) throw Error("path crosses the entanglement channel twice");
          path.crossing = Edge{cur, next};
        }
        cur = next;
        break;
      }
    }
    path.nodes.push_back(cur);
  }
  return path;
}

}  // namespace dqcbench::topology
