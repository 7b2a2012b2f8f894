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

#include "dqcbench/csv.hpp"

#include <fmt/format.h>

#include <ostream>

#include "dqcbench/error.hpp"

namespace dqcbench::csv {

Writer::Writer(std::ostream& os, const std::string& kind, const std::vector<std::string>& columns)
    : os_(os), width_(columns.size()) {
  os_ << "# dqcbench-csv " << kSchemaVersion << " kind=" << kind << '\n';
  row(columns);
}

void Writer::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_) throw Error(fmt::format("csv: row has {} fields, header has {}", fields.size(), width_));
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i].find_first_of(",\n") != std::string::npos) throw Error("csv: field contains a separator");
    if (i) os_ << ',';
    os_ << fields[i];
  }
  os_ << '\n';
}

std::string num(double v) { return fmt::format("{:.10g}", v); }
std::string num(long long v) { return fmt::format("{}", v); }

}  // namespace dqcbench::csv
