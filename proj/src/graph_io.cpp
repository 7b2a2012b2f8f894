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

#include "dqcbench/graph_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "dqcbench/error.hpp"

namespace dqcbench::topology {

ExtendedGraph read_graph(std::istream& in) {
  std::map<int, QubitInfo> declared;
  std::vector<Edge> coupling;
  std::vector<Edge> entanglement;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    const std::string where = "graph line " + std::to_string(line_no) + ": ";
    if (keyword == "qubit") {
      int id = -1;
      std::string role;
      int qpu = -1;
      if (!(fields >> id >> role >> qpu)) throw Error(where + "expected 'qubit <id> <role> <qpu>'");
      if (role != "working" && role != "memory") throw Error(where + "unknown role '" + role + "'");
      if (!declared.emplace(id, QubitInfo{role == "working" ? QubitRole::Working : QubitRole::Memory, qpu}).second) {
        throw Error(where + "qubit " + std::to_string(id) + " declared twice");
      }
    } else if (keyword == "coupling" || keyword == "entanglement") {
      Edge e;
      if (!(fields >> e.first >> e.second)) throw Error(where + "expected two qubit ids");
      (keyword == "coupling" ? coupling : entanglement).push_back(e);
    } else {
      throw Error(where + "unknown keyword '" + keyword + "'");
    }
  }
  std::vector<QubitInfo> qubits;
  for (const auto& [id, info] : declared) {
    if (id != static_cast<int>(qubits.size())) throw Error("graph qubit ids must be dense from 0");
    qubits.push_back(info);
  }
  return ExtendedGraph(std::move(qubits), std::move(coupling), std::move(entanglement));
}

void write_graph(std::ostream& out, const ExtendedGraph& graph) {
  out << "# dqcbench graph v1\n";
  for (QubitId q = 0; q < graph.size(); ++q) {
    out << "qubit " << q << ' ' << (graph.is_working(q) ? "working" : "memory") << ' ' << graph.qpu(q) << '\n';
  }
  for (const auto& [a, b] : graph.coupling_edges()) out << "coupling " << a << ' ' << b << '\n';
  for (const auto& [a, b] : graph.entanglement_edges()) out << "entanglement " << a << ' ' << b << '\n';
}

ExtendedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file " + path);
  return read_graph(in);
}

}  // namespace dqcbench::topology
