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

#include <sstream>

#include "dqcbench/analytic.hpp"
#include "dqcbench/error.hpp"
#include "dqcbench/experiments.hpp"
#include "dqcbench/noisemodel.hpp"

namespace dqcbench::experiments {
namespace {

using topology::TopologyKind;

const char* kSmall = R"({
  "devices": [{"topology": "line"}, {"topology": "line", "dqc": true, "placement": "edge"}],
  "sizes": [4],
  "errors": [0.01, 0.02],
  "circuits": 4,
  "shots": 200,
  "seed": 9
})";

TEST(Config, ParsesAndRoundTrips) {
  auto cfg = ExperimentConfig::parse(kSmall);
  ASSERT_EQ(cfg.devices.size(), 2u);
  EXPECT_EQ(cfg.devices[0].label(), "line-single");
  EXPECT_EQ(cfg.devices[1].label(), "line-dqc-edge");
  EXPECT_EQ(cfg.circuits, 4);
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(cfg.entanglement_errors, std::vector<double>{0.0});
  EXPECT_EQ(cfg.noise_mode, sim::NoiseMode::PerSU4);
  auto again = ExperimentConfig::parse(cfg.to_json());
  EXPECT_EQ(again.to_json(), cfg.to_json());
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(ExperimentConfig::parse(R"({"devices": [{"topology": "line"}], "sizes": [4], "errors": [0.1],
                                         "shots_per_circuit": 3})"),
               Error);
  EXPECT_THROW(ExperimentConfig::parse(R"({"devices": [{"topology": "ring"}], "sizes": [4], "errors": [0.1]})"),
               Error);
  EXPECT_THROW(ExperimentConfig::parse(R"({"devices": [{"topology": "line"}], "sizes": [4], "errors": [1.5]})"),
               Error);
  EXPECT_THROW(ExperimentConfig::parse(R"({"devices": [{"topology": "line", "dqc": true}], "sizes": [3, 5],
                                         "errors": [0.1]})"),
               Error);
  EXPECT_THROW(ExperimentConfig::parse("{not json"), Error);
  EXPECT_THROW(ExperimentConfig::load("/nonexistent/config.json"), Error);
}

TEST(Sweep, TwoQpuDevicesSkipOddSizes) {
  auto cfg = ExperimentConfig::parse(R"({"devices": [{"topology": "full"}, {"topology": "full", "dqc": true}],
                                         "sizes": [3, 4], "errors": [0.01]})");
  auto rows = predict(cfg);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[2].device, "full-dqc-hub");
  EXPECT_EQ(rows[2].n, 4);
}

TEST(Sweep, CsvIsReproducible) {
  auto cfg = ExperimentConfig::parse(kSmall);
  auto render = [&] {
    auto records = run_error_sweep(cfg);
    for (auto& r : records) r.runtime_s = 0.0;
    std::ostringstream os;
    write_records(os, "error-sweep", records);
    return os.str();
  };
  const std::string a = render();
  EXPECT_EQ(a, render());
  EXPECT_EQ(a.rfind("# dqcbench-csv v1 kind=error-sweep\n", 0), 0u);
  std::istringstream lines(a);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 2 + 4);
}

TEST(Sweep, PredictionsMatchAnalytic) {
  auto cfg = ExperimentConfig::parse(kSmall);
  auto r = run_point(cfg, cfg.devices[0], 4, 0.01, 0.0);
  auto g = cfg.devices[0].build(4);
  auto alloc = noisemodel::allocation_matrix(g);
  EXPECT_DOUBLE_EQ(r.characteristic_cost, alloc.characteristic_cost().to_double());
  EXPECT_DOUBLE_EQ(r.agf_pred, analytic::predicted_agf(g, noisemodel::NoiseSpec::uniform(g, 0.01)).agf);
  EXPECT_EQ(r.pairs_per_circuit, 0.0);
  auto serial = run_point(cfg, cfg.devices[0], 4, 0.01, 0.0, false);
  EXPECT_EQ(serial.agf_sim, r.agf_sim);
}

TEST(Sweep, CalibrationFitsPerDevice) {
  std::vector<BenchmarkRecord> recs(3);
  for (auto& r : recs) {
    r.device = "line-single";
    r.n = 2;
  }
  recs[2].device = "full-single";
  recs[2].eps = 0.01;
  recs[2].eps_eff = 0.012;
  recs[0].eps = 0.01;
  recs[0].eps_eff = 0.008;
  recs[1].eps = 0.02;
  recs[1].eps_eff = 0.016;
  fit_calibration(recs);
  EXPECT_NEAR(recs[0].r_fit, 0.8, 1e-12);
  EXPECT_NEAR(recs[1].r_fit, 0.8, 1e-12);
  EXPECT_NEAR(recs[2].r_fit, 1.2, 1e-12);
}

TEST(Placement, LineMiddleIsBest) {
  auto rows = run_placement_search(TopologyKind::Line1D, 8, 0.0015);
  ASSERT_EQ(rows.size(), 16u);
  int best = 0;
  for (const auto& r : rows) {
    if (!r.best) continue;
    ++best;
    EXPECT_EQ(r.site_a, 1);
    EXPECT_EQ(r.site_b, 1);
    for (const auto& o : rows) EXPECT_LE(r.cost, o.cost);
  }
  EXPECT_EQ(best, 1);
  std::ostringstream os;
  write_placement(os, rows);
  EXPECT_NE(os.str().find("kind=placement"), std::string::npos);
}

TEST(Predict, GridOverConfig) {
  auto cfg = ExperimentConfig::parse(kSmall);
  cfg.entanglement_errors = {0.0, 0.01};
  auto rows = predict(cfg);
  EXPECT_EQ(rows.size(), 2u * 2u * 2u);
  for (const auto& r : rows) {
    EXPECT_GT(r.agf_pred, 0.0);
    EXPECT_LE(r.agf_pred, 1.0);
    EXPECT_GT(r.hop_ideal, 0.5);
    if (r.device == "line-single") EXPECT_EQ(r.entanglement_cost, 0.0);
  }
  std::ostringstream a, b;
  write_predictions(a, rows);
  write_predictions(b, predict(cfg));
  EXPECT_EQ(a.str(), b.str());
}

}  // namespace
}  // namespace dqcbench::experiments
