// Copyright 2026 The RamseyKit Authors
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


#ifndef RAMSEYKIT_TOOLS_CLI_H_
#define RAMSEYKIT_TOOLS_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ramseykit::cli {

enum class OutputFormat { kHuman, kMachine };

inline constexpr int kExitVerdict = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitInput = 3;

// Everything a command needs. Structure arguments accept a short name
// (k3, chain4, ...), a one-line literal over the class signature
// ("size: 2; B: ..."), or a path to a structure file. Class arguments accept
// a preset name or a path to a class file.
struct RunConfig {
  std::string command;
  std::string subcommand;
  std::string echo;

  std::string class_name;
  std::string a;
  std::string b;
  std::string c;
  std::vector<std::string> as;     // order-forgetful: the family of A
  std::vector<std::string> parts;  // chain: "A:k" per step
  std::string ambient;
  std::string order;
  std::string root;
  std::string embedding;
  std::string mode = "copies";
  std::string suite;

  int k = 2;
  int d = 1;
  int cap = 0;  // 0 selects the command default
  int b_cap = 3;
  int c_cap = 6;
  int k_cap = 2;
  int64_t budget = int64_t{1} << 32;
  int threads = 1;
  uint64_t seed = 0;
  int samples = 100;
  int levels = 4;
  bool expansions = false;
  bool generators = false;
  bool timing = false;

  std::string cache_dir;
  OutputFormat format = OutputFormat::kHuman;
};

struct ResultRecord {
  std::string command;
  std::string verdict;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::string> certificate;
  std::vector<std::pair<std::string, std::string>> input_hashes;
  int64_t budget_used = 0;
  std::string version;
  int exit_code = kExitVerdict;
  // Not part of the reproducible payload.
  double elapsed_ms = 0;
  bool cache_hit = false;
};

const char* ToolVersion();

// Checks the invariants on caps and budget.
std::string ValidateConfig(const RunConfig& config);

// Dispatches to the owning module. Errors become records with verdict
// "error", an "error" field, and exit code 3 (bad input), 2 (budget) or 1.
ResultRecord Run(const RunConfig& config);

// Human: "key: value" lines. Machine: "key=value" lines, one certificate
// line per "certificate=" record.
std::string Render(const ResultRecord& record, OutputFormat format,
                   bool timing);

// Line-oriented form stored in the cache.
std::string SerializeRecord(const ResultRecord& record);
bool ParseRecord(const std::string& text, ResultRecord& record);

// The whole tool: parses argv, consults the cache, runs, prints.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

// Preset suites for `catalog`.
std::vector<std::string> CatalogSuites();
ResultRecord RunCatalog(const RunConfig& config);

}  // namespace ramseykit::cli

#endif  // RAMSEYKIT_TOOLS_CLI_H_
