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


#ifndef RAMSEYKIT_TOOLS_CACHE_H_
#define RAMSEYKIT_TOOLS_CACHE_H_

#include <optional>
#include <string>

#include "absl/status/status.h"
#include "cli.h"

namespace ramseykit::cli {

// One file per key under a directory. Writes go to a temporary file that is
// renamed into place, so readers never see a partial record and the last
// writer of a key wins.
class ResultCache {
 public:
  // Disabled when `dir` is empty or cannot be created; `warning` then says
  // why (empty for an empty dir).
  static ResultCache Open(const std::string& dir, std::string* warning);

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  std::optional<ResultRecord> Load(const std::string& key) const;
  absl::Status Store(const std::string& key,
                     const ResultRecord& record) const;

 private:
  std::string dir_;
};

// 64-bit FNV-1a of the operation, its scalar caps and the content of every
// input (file contents when an argument names a file), as hex.
std::string CacheKey(const RunConfig& config);

}  // namespace ramseykit::cli

#endif  // RAMSEYKIT_TOOLS_CACHE_H_
