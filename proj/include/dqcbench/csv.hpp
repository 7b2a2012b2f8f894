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
#include <vector>

namespace dqcbench::csv {

/// Versioned CSV: a '# dqcbench-csv v1 kind=<kind>' comment, a header row,
/// then data rows. Fields are never quoted; callers keep commas out.
class Writer {
 public:
  Writer(std::ostream& os, const std::string& kind, const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& os_;
  std::size_t width_;
};

constexpr const char* kSchemaVersion = "v1";

/// Fixed, locale-independent number formatting.
std::string num(double v);
std::string num(long long v);

}  // namespace dqcbench::csv
