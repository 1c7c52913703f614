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

#ifndef RAMSEYKIT_ARROW_H_
#define RAMSEYKIT_ARROW_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ramseykit/class_spec.h"
#include "ramseykit/structure.h"

namespace ramseykit {

enum class ArrowMode { kCopies, kEmbeddings };

const char* ArrowModeName(ArrowMode mode);
absl::StatusOr<ArrowMode> ParseArrowMode(std::string_view name);

// C -> (B)^A_{k,d} in copy mode, C (->) (B)^A_{k,d} in embedding mode.
struct ArrowQuery {
  Structure c;
  Structure b;
  Structure a;
  int k = 2;
  int d = 1;
  ArrowMode mode = ArrowMode::kCopies;
};

enum class ArrowVerdict { kHolds, kFails, kUndecided };

const char* ArrowVerdictName(ArrowVerdict v);

struct ArrowOptions {
  // Search nodes (color assignments tried) before giving up.
  int64_t budget = int64_t{1} << 32;
  int threads = 1;
  // Automorphisms of C used for lex-leader pruning, taken in lexicographic
  // order.
  int symmetry_cap = 5040;
};

struct SearchStats {
  int64_t nodes = 0;
  int64_t budget = 0;
  // Automorphisms of C applied during pruning; `aut_complete` says whether
  // that is the whole group.
  int64_t aut_used = 0;
  bool aut_complete = true;
  int tasks = 0;
};

struct ArrowCertificate {
  ArrowVerdict verdict = ArrowVerdict::kUndecided;
  // A-objects in enumeration order: sorted subsets for copies, maps for
  // embeddings. Lexicographic.
  std::vector<std::vector<int>> objects;
  // The lexicographically least bad coloring when verdict is kFails.
  std::vector<int> coloring;
  SearchStats stats;
  // Set when the verdict follows without search.
  std::string reason;
};

// The A-objects of C in enumeration order.
absl::StatusOr<std::vector<std::vector<int>>> ArrowObjects(
    const Structure& a, const Structure& c, ArrowMode mode);

absl::StatusOr<ArrowCertificate> CheckArrow(const ArrowQuery& q,
                                            const ArrowOptions& options = {});

// Checks a coloring of the A-objects against the definition: every B-object
// of C sees at least d + 1 colors. Independent of the search code.
absl::StatusOr<bool> VerifyBadColoring(const ArrowQuery& q,
                                       const std::vector<int>& coloring);

// "verdict:", statistics, then "coloring:" with one "object -> color" line
// per A-object.
std::string FormatCertificate(const ArrowQuery& q,
                              const ArrowCertificate& cert);

// For rigid A the two modes must agree. Errors when A has a nontrivial
// automorphism.
absl::StatusOr<bool> ModesAgreeOnRigid(const ArrowQuery& q,
                                       const ArrowOptions& options = {});

struct WitnessResult {
  std::optional<Structure> witness;  // nullopt: none up to cap
  int cap = 0;
  int64_t members_checked = 0;
  int64_t nodes = 0;
};

// Smallest member C of spec (by size, then canon) with C -> (B)^A_{k,d}.
// A budget exhausted inside any check yields ResourceExhausted.
absl::StatusOr<WitnessResult> FindWitness(const ClassSpec& spec,
                                          const Structure& b,
                                          const Structure& a, int k, int d,
                                          ArrowMode mode, int cap,
                                          const ArrowOptions& options = {});

// Returns C with C -> (B)^A_{k,1}, or nullopt.
using WitnessOracle = std::function<absl::StatusOr<std::optional<Structure>>(
    const Structure& b, const Structure& a, int k)>;

WitnessOracle SearchOracle(const ClassSpec& spec, int cap,
                           const ArrowOptions& options = {});

struct ChainPart {
  Structure a;
  int k = 2;
};

struct ChainResult {
  // chain[0] = B, chain[i] -> (chain[i-1])^{A_{i-1}}_{k_{i-1},1}.
  std::vector<Structure> chain;
  int samples = 0;
  int samples_verified = 0;
};

// Builds the chain and checks the simultaneous property on `samples`
// families of colorings drawn from a mt19937_64 seeded with `seed`: each
// family admits a copy of B on whose A_i-copies every chi_i is constant.
// An oracle failure at step i returns NotFound listing the partial chain.
absl::StatusOr<ChainResult> ChainWitness(const Structure& b,
                                         const std::vector<ChainPart>& parts,
                                         const WitnessOracle& oracle,
                                         int samples, uint64_t seed);

}  // namespace ramseykit

#endif  // RAMSEYKIT_ARROW_H_
