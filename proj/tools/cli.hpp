// Copyright 2026 The obsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace obsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCheckFailed = 3;

inline constexpr const char* kVersion = "0.1.0";

// Bad flag, bad value, unknown scenario or missing parameter. Raised before
// any simulation starts.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kCsv, kJson };

struct RunConfig {
  std::string scenario;
  std::uint64_t seed = 42;
  std::uint64_t trials = 100000;
  std::uint64_t gamma_grid = 13;
  std::vector<double> epsilons;
  double length = 1.0;          // original elastic length L0
  std::uint64_t breaks = 10000;  // sequential breaks in the elastic trajectory
  double volume = 1.0;          // solid volume for the creation report
  double ratio = 0.05;          // solid compaction ratio for the creation report
  std::string out;              // file, or directory for `all`; empty = stdout
  Format format = Format::kCsv;
  bool check = false;
  unsigned threads = 0;
};

// Flat "key = value" text; '#' starts a comment. Keys are the long flag names
// without dashes. `epsilon` may repeat or hold a comma-separated list.
std::multimap<std::string, std::string> read_config_file(const std::filesystem::path& path);

// Parses argv (flags override config-file values) and validates the result.
RunConfig parse_args(int argc, const char* const* argv);

// Fixed output schemas.
enum class Schema { kQuantumMachine, kTrials, kTaxonomy };

const std::vector<std::string>& schema_header(Schema schema);

using Cell = std::variant<std::string, double, std::uint64_t>;

struct Table {
  Schema schema = Schema::kTrials;
  std::vector<std::vector<Cell>> rows;
};

// Header row then data rows; reals with 9 significant digits; LF endings.
void emit_csv(const Table& table, std::ostream& os);
// {"meta": {...}, "rows": [{column: value, ...}, ...]}
void emit_json(const Table& table, const RunConfig& config, std::ostream& os);

// Writes to `path` (or `os` when path is empty). I/O failures raise
// std::runtime_error naming the path.
void write_table(const Table& table, const RunConfig& config, const std::filesystem::path& path, std::ostream& os);

// Runs a validated configuration. Returns kExitOk or kExitCheckFailed.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// argv -> exit code; never throws.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace obsim::cli
