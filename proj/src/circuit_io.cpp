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

#include "dqcbench/circuit_io.hpp"

#include <fmt/format.h>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "dqcbench/error.hpp"

namespace dqcbench::circuits {

namespace {

template <typename M>
void put_matrix(std::ostream& os, const M& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) os << fmt::format(" {:.17g} {:.17g}", m(r, c).real(), m(r, c).imag());
}

template <typename M>
M get_matrix(std::istringstream& in, int line_no) {
  M m;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      double re = 0, im = 0;
      if (!(in >> re >> im)) throw Error(fmt::format("line {}: truncated matrix", line_no));
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

int get_int(std::istringstream& in, int line_no) {
  int v = 0;
  if (!(in >> v)) throw Error(fmt::format("line {}: expected an integer", line_no));
  return v;
}

// Yields non-empty, non-comment lines.
template <typename F>
void for_each_line(std::istream& is, F&& f) {
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::string word;
    if (!(in >> word)) continue;
    f(word, in, line_no);
  }
}

}  // namespace

void write_circuit(std::ostream& os, const Circuit& c) {
  os << "qubits " << c.n_qubits << '\n';
  for (const auto& layer : c.layers) {
    os << "layer\n";
    for (const auto& g : layer.gates) {
      os << "su4 " << g.a << ' ' << g.b;
      put_matrix(os, g.unitary);
      os << '\n';
    }
  }
}

Circuit read_circuit(std::istream& is) {
  Circuit c;
  bool have_size = false;
  for_each_line(is, [&](const std::string& word, std::istringstream& in, int line_no) {
    if (word == "qubits") {
      c.n_qubits = get_int(in, line_no);
      have_size = true;
    } else if (word == "layer") {
      c.layers.emplace_back();
    } else if (word == "su4") {
      if (c.layers.empty()) throw Error(fmt::format("line {}: su4 before any layer", line_no));
      Su4Gate g;
      g.a = get_int(in, line_no);
      g.b = get_int(in, line_no);
      g.unitary = get_matrix<Mat4>(in, line_no);
      if (g.a < 0 || g.b < 0 || g.a == g.b || g.a >= c.n_qubits || g.b >= c.n_qubits) {
        throw Error(fmt::format("line {}: bad operands", line_no));
      }
      c.layers.back().gates.push_back(g);
    } else {
      throw Error(fmt::format("line {}: unknown keyword '{}'", line_no, word));
    }
  });
  if (!have_size) throw Error("circuit: missing 'qubits' line");
  return c;
}

void write_physical(std::ostream& os, const PhysicalCircuit& pc) {
  os << "qubits " << pc.n_qubits << " cbits " << pc.n_cbits << " pairs " << pc.entanglement_pairs_consumed << '\n';
  os << "output";
  for (int q : pc.output_qubits) os << ' ' << q;
  os << '\n';
  for (const auto& g : pc.gates) {
    switch (g.kind) {
      case GateKind::SingleQubit:
        os << "u1 " << g.q0;
        put_matrix(os, g.unitary);
        break;
      case GateKind::CNOT:
        os << "cx " << g.q0 << ' ' << g.q1;
        break;
      case GateKind::Swap:
        os << "swap " << g.q0 << ' ' << g.q1;
        break;
      case GateKind::BellPrep:
        os << "bell " << g.q0 << ' ' << g.q1;
        break;
      case GateKind::MeasureZ:
        os << "mz " << g.q0 << ' ' << g.cbit;
        break;
      case GateKind::MeasureX:
        os << "mx " << g.q0 << ' ' << g.cbit;
        break;
      case GateKind::ClassicallyControlled:
        os << "cc " << g.q0 << ' ' << g.cbit;
        put_matrix(os, g.unitary);
        break;
    }
    os << '\n';
  }
}

PhysicalCircuit read_physical(std::istream& is) {
  PhysicalCircuit pc;
  bool have_size = false;
  for_each_line(is, [&](const std::string& word, std::istringstream& in, int line_no) {
    auto qubit = [&] {
      const int q = get_int(in, line_no);
      if (!have_size || q < 0 || q >= pc.n_qubits) throw Error(fmt::format("line {}: qubit out of range", line_no));
      return q;
    };
    auto cbit = [&] {
      const int c = get_int(in, line_no);
      if (c < 0 || c >= pc.n_cbits) throw Error(fmt::format("line {}: classical bit out of range", line_no));
      return c;
    };
    if (word == "qubits") {
      pc.n_qubits = get_int(in, line_no);
      std::string k;
      if (!(in >> k) || k != "cbits") throw Error(fmt::format("line {}: expected 'cbits'", line_no));
      pc.n_cbits = get_int(in, line_no);
      if (!(in >> k) || k != "pairs") throw Error(fmt::format("line {}: expected 'pairs'", line_no));
      pc.entanglement_pairs_consumed = get_int(in, line_no);
      have_size = true;
    } else if (word == "output") {
      int q = 0;
      while (in >> q) pc.output_qubits.push_back(q);
    } else if (word == "u1") {
      const int q = qubit();
      pc.gates.push_back(Gate::single(q, get_matrix<Mat2>(in, line_no)));
    } else if (word == "cx") {
      const int c = qubit();
      pc.gates.push_back(Gate::cnot(c, qubit()));
    } else if (word == "swap") {
      const int a = qubit();
      pc.gates.push_back(Gate::swap(a, qubit()));
    } else if (word == "bell") {
      const int a = qubit();
      pc.gates.push_back(Gate::bell_prep(a, qubit()));
    } else if (word == "mz") {
      const int q = qubit();
      pc.gates.push_back(Gate::measure_z(q, cbit()));
    } else if (word == "mx") {
      const int q = qubit();
      pc.gates.push_back(Gate::measure_x(q, cbit()));
    } else if (word == "cc") {
      const int q = qubit();
      const int c = cbit();
      pc.gates.push_back(Gate::controlled(q, get_matrix<Mat2>(in, line_no), c));
    } else {
      throw Error(fmt::format("line {}: unknown keyword '{}'", line_no, word));
    }
  });
  if (!have_size) throw Error("physical circuit: missing 'qubits' line");
  return pc;
}

}  // namespace dqcbench::circuits
