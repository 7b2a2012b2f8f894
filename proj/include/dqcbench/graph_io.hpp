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
#include <string>

#include "dqcbench/topology.hpp"

namespace dqcbench::topology {

// Graph spec files are line oriented:
//
//   # comment
//   qubit <id> <working|memory> <qpu>
//   coupling <a> <b>
//   entanglement <a> <b>
//
// Qubit ids must be dense 0..K-1 and may appear in any order.

ExtendedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const ExtendedGraph& graph);
ExtendedGraph load_graph_file(const std::string& path);

}  // namespace dqcbench::topology
