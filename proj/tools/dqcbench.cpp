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

#include <CLI11.hpp>
#include <fmt/core.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dqcbench/error.hpp"
#include "dqcbench/experiments.hpp"
#include "dqcbench/graph_io.hpp"
#include "dqcbench/noisemodel.hpp"
#include "dqcbench/topology.hpp"

namespace {

using namespace dqcbench;

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> circuits;
  std::optional<int> shots;
  std::optional<std::string> mode;
  std::string out;
  bool paper_scale = false;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("-c,--config", o.config, "JSON experiment config")->required()->check(CLI::ExistingFile);
  cmd->add_option("--seed", o.seed, "master seed");
  cmd->add_option("--circuits", o.circuits, "random circuits per grid point")->check(CLI::PositiveNumber);
  cmd->add_option("--shots", o.shots, "shots per circuit")->check(CLI::PositiveNumber);
  cmd->add_option("--mode", o.mode, "noise attachment: per-su4 or per-basis-gate");
  cmd->add_option("-o,--out", o.out, "output CSV (default: config 'output', else stdout)");
  cmd->add_flag("--paper-scale", o.paper_scale, "2000 circuits x 10000 shots unless overridden");
}

experiments::ExperimentConfig load(const Overrides& o) {
  auto cfg = experiments::ExperimentConfig::load(o.config);
  if (o.paper_scale) {
    cfg.circuits = 2000;
    cfg.shots = 10000;
  }
  if (o.seed) cfg.seed = *o.seed;
  if (o.circuits) cfg.circuits = *o.circuits;
  if (o.shots) cfg.shots = *o.shots;
  if (o.mode) cfg.noise_mode = sim::parse_noise_mode(*o.mode);
  if (!o.out.empty()) cfg.output = o.out;
  cfg.validate();
  return cfg;
}

template <class F>
void emit(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(fmt::format("cannot open '{}' for writing", path));
  write(f);
  if (!f) throw Error(fmt::format("write to '{}' failed", path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum volume benchmarks of single- and two-QPU devices"};
  app.require_subcommand(1);

  Overrides err, size, ent, pred;
  auto* error_sweep = app.add_subcommand("error-sweep", "simulate every device at every error rate");
  add_common(error_sweep, err);
  auto* size_sweep = app.add_subcommand("size-sweep", "simulate every device at every size, first error rate");
  add_common(size_sweep, size);
  auto* ent_sweep = app.add_subcommand("ent-sweep", "simulate over the entanglement error grid");
  add_common(ent_sweep, ent);
  auto* predict = app.add_subcommand("predict", "analytic predictions only, no simulation");
  add_common(predict, pred);

  std::string topo = "line";
  int n = 8;
  double eps = 0.0015;
  std::string place_out;
  auto* placement = app.add_subcommand("placement", "score every memory attachment of an n/2 + n/2 device");
  placement->add_option("--topology", topo, "full, line or grid");
  placement->add_option("-n,--qubits", n, "working qubits (even)")->check(CLI::PositiveNumber);
  placement->add_option("--eps", eps, "error rate for the predicted fidelity")->check(CLI::Range(0.0, 1.0));
  placement->add_option("-o,--out", place_out, "output CSV (default stdout)");

  bool with_ent = false;
  bool dqc = false;
  std::string alloc_place = "hub";
  std::string graph_file;
  std::string alloc_out;
  auto* allocation = app.add_subcommand("allocation", "exact allocation matrix of one device");
  allocation->add_option("--topology", topo, "full, line or grid");
  allocation->add_option("-n,--qubits", n, "working qubits")->check(CLI::PositiveNumber);
  allocation->add_flag("--dqc", dqc, "two-QPU device");
  allocation->add_option("--placement", alloc_place, "hub or edge");
  allocation->add_option("--graph", graph_file, "graph file instead of a standard device")->check(CLI::ExistingFile);
  allocation->add_flag("--entanglement-column", with_ent, "append the entanglement column");
  allocation->add_option("-o,--out", alloc_out, "output CSV (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*error_sweep) {
      auto cfg = load(err);
      auto rec = experiments::run_error_sweep(cfg);
      emit(cfg.output, [&](std::ostream& os) { experiments::write_records(os, "error-sweep", rec); });
    } else if (*size_sweep) {
      auto cfg = load(size);
      auto rec = experiments::run_size_sweep(cfg);
      emit(cfg.output, [&](std::ostream& os) { experiments::write_records(os, "size-sweep", rec); });
    } else if (*ent_sweep) {
      auto cfg = load(ent);
      auto rec = experiments::run_entanglement_sweep(cfg);
      emit(cfg.output, [&](std::ostream& os) { experiments::write_records(os, "ent-sweep", rec); });
    } else if (*predict) {
      auto cfg = load(pred);
      auto rows = experiments::predict(cfg);
      emit(cfg.output, [&](std::ostream& os) { experiments::write_predictions(os, rows); });
    } else if (*placement) {
      auto rows = experiments::run_placement_search(topology::parse_topology_kind(topo), n, eps);
      emit(place_out, [&](std::ostream& os) { experiments::write_placement(os, rows); });
    } else if (*allocation) {
      const auto g = graph_file.empty()
                         ? topology::standard_topology(topology::parse_topology_kind(topo), n, dqc,
                                                       {topology::parse_placement_kind(alloc_place), {}})
                         : topology::load_graph_file(graph_file);
      const auto a = noisemodel::allocation_matrix(g, with_ent);
      emit(alloc_out, [&](std::ostream& os) { noisemodel::write_csv(os, a.entries, g, with_ent); });
      std::cerr << fmt::format("characteristic cost {} ({:.6g})\n", a.characteristic_cost().str(),
                               a.characteristic_cost().to_double());
    }
  } catch (const std::exception& e) {
    std::cerr << "dqcbench: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
