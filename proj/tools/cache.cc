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


#include "cache.h"

#include <unistd.h>

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "absl/strings/str_cat.h"
#include "ramseykit/canonical.h"

namespace ramseykit::cli {
namespace {

namespace fs = std::filesystem;

void Mix(uint64_t& h, const std::string& text) {
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  h ^= 0xff;  // field separator
  h *= 1099511628211ULL;
}

// File contents when `arg` names a readable file, else the argument itself.
std::string Material(const std::string& arg) {
  std::error_code ec;
  if (arg.empty() || !fs::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return absl::StrCat("file:", buf.str());
}

}  // namespace

std::string CacheKey(const RunConfig& c) {
  uint64_t h = 1469598103934665603ULL;
  for (const std::string& s :
       {std::string(ToolVersion()), c.command, c.subcommand, c.mode, c.suite,
        c.order, c.root, c.embedding}) {
    Mix(h, s);
  }
  for (const std::string* s : {&c.class_name, &c.a, &c.b, &c.c, &c.ambient}) {
    Mix(h, Material(*s));
  }
  for (const std::vector<std::string>* list : {&c.as, &c.parts}) {
    Mix(h, absl::StrCat(list->size()));
    for (const std::string& s : *list) Mix(h, Material(s));
  }
  Mix(h, absl::StrCat(c.k, ",", c.d, ",", c.cap, ",", c.b_cap, ",", c.c_cap,
                      ",", c.k_cap, ",", c.budget, ",", c.seed, ",",
                      c.samples, ",", c.levels, ",", c.expansions, ",",
                      c.generators));
  return HexDigest(h);
}

ResultCache ResultCache::Open(const std::string& dir, std::string* warning) {
  ResultCache cache;
  if (warning != nullptr) warning->clear();
  if (dir.empty()) return cache;
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path probe = fs::path(dir) / absl::StrCat(".probe.", getpid());
  {
    std::ofstream out(probe);
    if (ec || !out) {
      if (warning != nullptr) {
        *warning = absl::StrCat("cache directory ", dir,
                                " is not writable; caching disabled");
      }
      return cache;
    }
  }
  fs::remove(probe, ec);
  cache.dir_ = dir;
  return cache;
}

std::optional<ResultRecord> ResultCache::Load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(fs::path(dir_) / absl::StrCat(key, ".rec"),
                   std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  ResultRecord record;
  if (!ParseRecord(buf.str(), record)) return std::nullopt;
  return record;
}

absl::Status ResultCache::Store(const std::string& key,
                                const ResultRecord& record) const {
  if (!enabled()) return absl::OkStatus();
  static std::atomic<int> counter{0};
  const fs::path final_path = fs::path(dir_) / absl::StrCat(key, ".rec");
  const fs::path tmp = fs::path(dir_) / absl::StrCat(
                           key, ".tmp.", getpid(), ".", counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << SerializeRecord(record);
    out.flush();
    if (!out) {
      return absl::UnavailableError(
          absl::StrCat("cannot write ", tmp.string()));
    }
  }
  std::error_code ec;
  fs::rename(tmp, final_path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return absl::UnavailableError(
        absl::StrCat("cannot commit ", final_path.string()));
  }
  return absl::OkStatus();
}

}  // namespace ramseykit::cli
