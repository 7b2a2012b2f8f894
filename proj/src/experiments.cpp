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

#include "dqcbench/experiments.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "dqcbench/analytic.hpp"
#include "dqcbench/csv.hpp"
#include "dqcbench/error.hpp"
#include "dqcbench/graph_io.hpp"
#include "dqcbench/noisemodel.hpp"

namespace dqcbench::experiments {

using nlohmann::json;
using topology::ExtendedGraph;
using topology::MemoryPlacement;

std::string DeviceSpec::label() const {
  if (!graph_file.empty()) {
    const auto slash = graph_file.find_last_of('/');
    return "file-" + (slash == std::string::npos ? graph_file : graph_file.substr(slash + 1));
  }
  std::string s = topology::to_string(kind) + (dqc ? "-dqc" : "-single");
  if (dqc) {
    s += "-" + topology::to_string(placement.kind);
    for (int site : placement.sites) s += fmt::format("-{}", site);
  }
  return s;
}

ExtendedGraph DeviceSpec::build(int n) const {
  if (!graph_file.empty()) return topology::load_graph_file(graph_file);
  return topology::standard_topology(kind, n, dqc, placement);
}

void ExperimentConfig::validate() const {
  if (devices.empty()) throw Error("config: no devices");
  if (sizes.empty()) throw Error("config: 'sizes' is empty");
  if (errors.empty()) throw Error("config: 'errors' is empty");
  if (entanglement_errors.empty()) throw Error("config: 'entanglement_errors' is empty");
  for (int n : sizes)
    if (n < 2 || n > sim::kMaxIdealQubits) throw Error(fmt::format("config: size {} outside 2..14", n));
  for (double e : errors)
    if (!(e >= 0.0 && e <= 1.0)) throw Error("config: error rate outside [0, 1]");
  for (double e : entanglement_errors)
    if (!(e >= 0.0 && e <= 1.0)) throw Error("config: entanglement error outside [0, 1]");
  for (const auto& d : devices) {
    if (!d.dqc || !d.graph_file.empty()) continue;
    if (std::none_of(sizes.begin(), sizes.end(), [](int n) { return n % 2 == 0; }))
      throw Error(fmt::format("config: two-QPU device {} needs at least one even size", d.label()));
  }
  if (circuits < 1 || shots < 1) throw Error("config: circuits and shots must be positive");
  if (!(cnot_scale >= 0.0 && cnot_scale <= 1.0)) throw Error("config: cnot_scale outside [0, 1]");
  if (!(single_qubit_error >= 0.0 && single_qubit_error <= 1.0)) throw Error("config: single_qubit_error outside [0, 1]");
}

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) throw Error(fmt::format("config: unknown key '{}' in {}", key, where));
  }
}

DeviceSpec parse_device(const json& j) {
  if (!j.is_object()) throw Error("config: each device must be an object");
  reject_unknown(j, {"topology", "dqc", "placement", "sites", "graph"}, "device");
  DeviceSpec d;
  if (j.contains("graph")) {
    d.graph_file = j.at("graph").get<std::string>();
    return d;
  }
  d.kind = topology::parse_topology_kind(j.at("topology").get<std::string>());
  d.dqc = j.value("dqc", false);
  if (j.contains("placement")) d.placement.kind = topology::parse_placement_kind(j.at("placement").get<std::string>());
  if (j.contains("sites")) d.placement.sites = j.at("sites").get<std::vector<int>>();
  if (d.placement.kind == MemoryPlacement::Kind::Explicit && d.placement.sites.size() != 2) {
    throw Error("config: explicit placement needs two 'sites'");
  }
  return d;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<int> sizes_for(const ExperimentConfig& cfg, const DeviceSpec& d) {
  if (!d.graph_file.empty()) return {d.build(0).n_working()};
  if (!d.dqc) return cfg.sizes;
  // two-QPU devices split evenly; odd sizes are skipped
  std::vector<int> even;
  for (int n : cfg.sizes)
    if (n % 2 == 0) even.push_back(n);
  return even;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
  ExperimentConfig c;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw Error("config: top level must be an object");
    reject_unknown(j,
                   {"devices", "sizes", "errors", "entanglement_errors", "circuits", "shots", "seed", "noise_mode",
                    "cnot_scale", "single_qubit_error", "output"},
                   "config");
    for (const auto& d : j.at("devices")) c.devices.push_back(parse_device(d));
    c.sizes = j.at("sizes").get<std::vector<int>>();
    c.errors = j.at("errors").get<std::vector<double>>();
    if (j.contains("entanglement_errors")) c.entanglement_errors = j.at("entanglement_errors").get<std::vector<double>>();
    c.circuits = j.value("circuits", c.circuits);
    c.shots = j.value("shots", c.shots);
    c.seed = j.value("seed", c.seed);
    if (j.contains("noise_mode")) c.noise_mode = sim::parse_noise_mode(j.at("noise_mode").get<std::string>());
    c.cnot_scale = j.value("cnot_scale", c.cnot_scale);
    c.single_qubit_error = j.value("single_qubit_error", c.single_qubit_error);
    c.output = j.value("output", c.output);
  } catch (const json::exception& e) {
    throw Error(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string ExperimentConfig::to_json() const {
  json j;
  j["devices"] = json::array();
  for (const auto& d : devices) {
    json dj;
    if (!d.graph_file.empty()) {
      dj["graph"] = d.graph_file;
    } else {
      dj["topology"] = topology::to_string(d.kind);
      dj["dqc"] = d.dqc;
      if (d.dqc) dj["placement"] = topology::to_string(d.placement.kind);
      if (!d.placement.sites.empty()) dj["sites"] = d.placement.sites;
    }
    j["devices"].push_back(dj);
  }
  j["sizes"] = sizes;
  j["errors"] = errors;
  j["entanglement_errors"] = entanglement_errors;
  j["circuits"] = circuits;
  j["shots"] = shots;
  j["seed"] = seed;
  j["noise_mode"] = sim::to_string(noise_mode);
  j["cnot_scale"] = cnot_scale;
  j["single_qubit_error"] = single_qubit_error;
  j["output"] = output;
  return j.dump(2);
}

sim::NoiseAttachment make_noise(const ExperimentConfig& cfg, const ExtendedGraph& g, double eps, double eps_ent) {
  auto a = sim::NoiseAttachment::from_spec(noisemodel::NoiseSpec::uniform(g, eps, eps_ent), cfg.noise_mode);
  a.cnot_scale = cfg.cnot_scale;
  a.single_qubit_error = cfg.single_qubit_error;
  return a;
}

BenchmarkRecord run_point(const ExperimentConfig& cfg, const DeviceSpec& device, int n, double eps, double eps_ent,
                          bool parallel) {
  const auto t0 = std::chrono::steady_clock::now();
  const ExtendedGraph g = device.build(n);
  const auto noise = make_noise(cfg, g, eps, eps_ent);
  const sim::BenchmarkParams params{cfg.circuits, cfg.shots, cfg.seed};
  const auto m = parallel ? sim::run_benchmark(g, noise, params) : sim::run_benchmark_serial(g, noise, params);

  BenchmarkRecord r;
  r.device = device.label();
  r.n = g.n_working();
  r.eps = eps;
  r.eps_ent = eps_ent;
  r.circuits = cfg.circuits;
  r.shots = cfg.shots;
  r.seed = cfg.seed;
  r.noise_mode = sim::to_string(cfg.noise_mode);
  r.hop = m.hop;
  r.lxe = m.lxe;
  r.hop_ideal = m.hop_ideal;
  r.lxe_ideal = m.lxe_ideal;
  r.agf_sim = m.agf_via_lxe;
  r.agf_sim_stderr = m.agf_stderr;
  r.pairs_per_circuit = m.entanglement_pairs_per_circuit;
  for (std::size_t i = 0; i < m.per_circuit.size(); ++i) r.circuit_agf.push_back(m.circuit_agf(i));

  const auto alloc = noisemodel::allocation_matrix(g, g.is_dqc());
  r.characteristic_cost = alloc.characteristic_cost().to_double();
  const auto spec = noisemodel::NoiseSpec::uniform(g, eps, eps_ent);
  r.agf_pred = analytic::predicted_agf(alloc, spec, r.n).agf;
  r.agf_approx = analytic::approx_agf(r.characteristic_cost, r.n, eps);
  r.hop_pred = analytic::hop_from_agf(r.agf_pred, r.hop_ideal, r.n);
  r.lxe_ratio_pred = analytic::lxe_from_agf(r.agf_pred, 1.0, r.n);
  r.agf_pred_fit = r.agf_pred;
  r.runtime_s = seconds_since(t0);
  return r;
}

void fit_calibration(std::vector<BenchmarkRecord>& records) {
  std::map<std::pair<std::string, int>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < records.size(); ++i) groups[{records[i].device, records[i].n}].push_back(i);
  for (const auto& [key, idx] : groups) {
    std::vector<std::pair<double, double>> points;
    for (std::size_t i : idx) {
      if (records[i].eps > 0.0) points.emplace_back(records[i].eps, records[i].eps_eff);
    }
    const double r = points.empty() ? 1.0 : analytic::calibration_fit(points);
    for (std::size_t i : idx) records[i].r_fit = r;
  }
}

namespace {

// eps_eff needs the allocation matrix, which fit_calibration cannot rebuild
// from a label; sweeps fill it here and then call fit_calibration.
void calibrate(const ExperimentConfig& cfg, std::vector<BenchmarkRecord>& records) {
  std::map<std::pair<std::string, int>, noisemodel::AllocationMatrix> allocs;
  std::map<std::pair<std::string, int>, ExtendedGraph> graphs;
  for (const auto& d : cfg.devices) {
    for (int n : sizes_for(cfg, d)) {
      const auto g = d.build(n);
      const std::pair<std::string, int> key{d.label(), g.n_working()};
      if (!allocs.count(key)) {
        allocs.emplace(key, noisemodel::allocation_matrix(g, false));
        graphs.emplace(key, g);
      }
    }
  }
  for (auto& r : records) {
    const auto& alloc = allocs.at({r.device, r.n});
    r.eps_eff = r.eps > 0.0 ? analytic::infer_uniform_error(alloc, r.n, r.agf_sim) : 0.0;
  }
  fit_calibration(records);
  for (auto& r : records) {
    const auto& g = graphs.at({r.device, r.n});
    const double ratio = std::min(r.r_fit, r.eps > 0.0 ? 1.0 / r.eps : r.r_fit);
    const auto spec = noisemodel::NoiseSpec::uniform(g, r.eps, r.eps_ent, ratio);
    r.agf_pred_fit = analytic::predicted_agf(g, spec).agf;
  }
}

}  // namespace

std::vector<BenchmarkRecord> run_error_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<BenchmarkRecord> out;
  for (const auto& d : cfg.devices)
    for (int n : sizes_for(cfg, d))
      for (double eps : cfg.errors) out.push_back(run_point(cfg, d, n, eps, cfg.entanglement_errors.front()));
  calibrate(cfg, out);
  return out;
}

std::vector<BenchmarkRecord> run_size_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<BenchmarkRecord> out;
  for (const auto& d : cfg.devices)
    for (int n : sizes_for(cfg, d)) out.push_back(run_point(cfg, d, n, cfg.errors.front(), cfg.entanglement_errors.front()));
  calibrate(cfg, out);
  return out;
}

std::vector<BenchmarkRecord> run_entanglement_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<BenchmarkRecord> out;
  for (const auto& d : cfg.devices)
    for (int n : sizes_for(cfg, d))
      for (double e : cfg.entanglement_errors) out.push_back(run_point(cfg, d, n, cfg.errors.front(), e));
  return out;
}

void write_records(std::ostream& os, const std::string& kind, const std::vector<BenchmarkRecord>& records) {
  csv::Writer w(os, kind,
                {"device", "n", "eps", "eps_ent", "circuits", "shots", "seed", "noise_mode", "char_cost",
                 "pairs_per_circuit", "hop", "lxe", "hop_ideal", "lxe_ideal", "agf_sim", "agf_sim_stderr",
                 "agf_pred", "agf_approx", "hop_pred", "lxe_ratio_pred", "eps_eff", "r_fit", "agf_pred_fit",
                 "runtime_s"});
  for (const auto& r : records) {
    w.row({r.device, csv::num(static_cast<long long>(r.n)), csv::num(r.eps), csv::num(r.eps_ent),
           csv::num(static_cast<long long>(r.circuits)), csv::num(static_cast<long long>(r.shots)),
           std::to_string(r.seed), r.noise_mode, csv::num(r.characteristic_cost), csv::num(r.pairs_per_circuit),
           csv::num(r.hop), csv::num(r.lxe), csv::num(r.hop_ideal), csv::num(r.lxe_ideal), csv::num(r.agf_sim),
           csv::num(r.agf_sim_stderr), csv::num(r.agf_pred), csv::num(r.agf_approx), csv::num(r.hop_pred),
           csv::num(r.lxe_ratio_pred), csv::num(r.eps_eff), csv::num(r.r_fit), csv::num(r.agf_pred_fit),
           fmt::format("{:.3f}", r.runtime_s)});
  }
}

std::vector<PlacementRow> run_placement_search(topology::TopologyKind kind, int n, double eps) {
  if (n < 2 || n % 2 != 0) throw Error("placement search needs an even number of working qubits");
  const auto local = topology::local_qpu(kind, n / 2);
  const auto search = analytic::optimize_memory_placement(local, local);
  std::vector<PlacementRow> rows;
  for (const auto& s : search.scores) {
    const auto g = topology::join_qpus(local, local, s.site_a, s.site_b);
    PlacementRow row;
    row.site_a = s.site_a;
    row.site_b = s.site_b;
    row.cost = s.cost;
    row.agf_pred = analytic::predicted_agf(g, noisemodel::NoiseSpec::uniform(g, eps)).agf;
    row.best = s.site_a == search.best.site_a && s.site_b == search.best.site_b;
    rows.push_back(row);
  }
  return rows;
}

void write_placement(std::ostream& os, const std::vector<PlacementRow>& rows) {
  csv::Writer w(os, "placement", {"site_a", "site_b", "char_cost", "char_cost_exact", "agf_pred", "best"});
  for (const auto& r : rows) {
    w.row({csv::num(static_cast<long long>(r.site_a)), csv::num(static_cast<long long>(r.site_b)),
           csv::num(r.cost.to_double()), r.cost.str(), csv::num(r.agf_pred), r.best ? "1" : "0"});
  }
}

double mean_ideal_hop(int n, int circuits, std::uint64_t seed) {
  if (circuits < 1) throw Error("mean_ideal_hop: need at least one circuit");
  std::vector<double> h(circuits);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < circuits; ++i) {
    const auto q = sim::ideal_distribution(sim::benchmark_circuit(n, seed, i));
    h[i] = sim::ideal_hop(q, sim::heavy_mask(q));
  }
  double s = 0.0;
  for (double v : h) s += v;
  return s / circuits;
}

std::vector<PredictionRow> predict(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<PredictionRow> rows;
  std::map<int, double> hop_ideal;
  for (const auto& d : cfg.devices) {
    for (int n : sizes_for(cfg, d)) {
      const auto g = d.build(n);
      const int nw = g.n_working();
      if (!hop_ideal.count(nw)) hop_ideal[nw] = mean_ideal_hop(nw, cfg.circuits, cfg.seed);
      const auto alloc = noisemodel::allocation_matrix(g, g.is_dqc());
      const double cost = alloc.characteristic_cost().to_double();
      const double ent_cost = alloc.has_entanglement_column ? alloc.entanglement_cost().to_double() : 0.0;
      for (double eps : cfg.errors) {
        for (double e : cfg.entanglement_errors) {
          PredictionRow r;
          r.device = d.label();
          r.n = nw;
          r.eps = eps;
          r.eps_ent = e;
          r.characteristic_cost = cost;
          r.entanglement_cost = ent_cost;
          r.agf_pred = analytic::predicted_agf(alloc, noisemodel::NoiseSpec::uniform(g, eps, e), nw).agf;
          r.agf_approx = analytic::approx_agf(cost, nw, eps);
          r.hop_ideal = hop_ideal[nw];
          r.hop_pred = analytic::hop_from_agf(r.agf_pred, r.hop_ideal, nw);
          r.lxe_ratio_pred = analytic::lxe_from_agf(r.agf_pred, 1.0, nw);
          rows.push_back(r);
        }
      }
    }
  }
  return rows;
}

void write_predictions(std::ostream& os, const std::vector<PredictionRow>& rows) {
  csv::Writer w(os, "predict",
                {"device", "n", "eps", "eps_ent", "char_cost", "ent_cost", "agf_pred", "agf_approx", "hop_pred",
                 "lxe_ratio_pred", "hop_ideal"});
  for (const auto& r : rows) {
    w.row({r.device, csv::num(static_cast<long long>(r.n)), csv::num(r.eps), csv::num(r.eps_ent),
           csv::num(r.characteristic_cost), csv::num(r.entanglement_cost), csv::num(r.agf_pred),
           csv::num(r.agf_approx), csv::num(r.hop_pred), csv::num(r.lxe_ratio_pred), csv::num(r.hop_ideal)});
  }
}

}  // namespace dqcbench::experiments
