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

#include "dqcbench/circuits.hpp"

namespace dqcbench::circuits {

/// Line-oriented text forms. Abstract circuits:
///   qubits <n>
///   layer
///   su4 <a> <b> <16 re im pairs, row major>
/// Compiled circuits:
///   qubits <n> cbits <m> pairs <k>
///   output <q0> <q1> ...
///   u1 <q> <4 re im pairs> | cx <c> <t> | swap <a> <b> | bell <a> <b>
///   mz <q> <bit> | mx <q> <bit> | cc <q> <bit> <4 re im pairs>
/// Blocks are not serialized; a parsed compiled circuit has none.
void write_circuit(std::ostream& os, const Circuit& c);
Circuit read_circuit(std::istream& is);
void write_physical(std::ostream& os, const PhysicalCircuit& pc);
PhysicalCircuit read_physical(std::istream& is);

}  // namespace dqcbench::circuits
