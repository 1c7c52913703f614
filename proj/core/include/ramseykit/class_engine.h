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

#ifndef RAMSEYKIT_CLASS_ENGINE_H_
#define RAMSEYKIT_CLASS_ENGINE_H_

#include <optional>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "ramseykit/canonical.h"
#include "ramseykit/class_spec.h"
#include "ramseykit/embedding.h"
#include "ramseykit/structure.h"

namespace ramseykit {

// One canonical representative per isomorphism class of members of size at
// most n, sorted by (size, canon).
absl::StatusOr<std::vector<CanonicalForm>> Members(const ClassSpec& spec,
                                                   int n);

// Outcome of a bounded search for joint embeddings or amalgams. kRefuted is
// only reported when the cap covers every size an amalgam could need, since
// the union of the two images of any amalgam is itself one.
enum class SearchVerdict { kPass, kRefuted, kUnknownUpToCap };

const char* SearchVerdictName(SearchVerdict v);

struct AmalgamationProblem {
  Structure a;
  Structure b0;
  Structure b1;
  Embedding a0;  // A -> B0
  Embedding a1;  // A -> B1
};

struct Amalgam {
  Structure c;
  Embedding e0;  // B0 -> C
  Embedding e1;  // B1 -> C
};

struct ClassReport {
  int checked_size = 0;
  int witness_cap = 0;
  bool hereditary = true;  // by construction
  SearchVerdict jep = SearchVerdict::kPass;
  std::optional<std::pair<Structure, Structure>> jep_counterexample;
  SearchVerdict ap = SearchVerdict::kPass;
  std::optional<AmalgamationProblem> ap_counterexample;
  std::vector<int> member_counts;  // index = size
};

absl::StatusOr<ClassReport> CheckJepAp(const ClassSpec& spec, int n,
                                       int witness_cap);

// Smallest member C (by size, then canon) holding an amalgam, searching
// sizes up to min(cap, |B0| + |B1| - |A|).
absl::StatusOr<std::optional<Amalgam>> FindAmalgam(
    const ClassSpec& spec, const AmalgamationProblem& problem, int cap);

// Smallest member into which both structures embed.
struct JointEmbedding {
  Structure b;
  Embedding b0;
  Embedding b1;
};
absl::StatusOr<std::optional<JointEmbedding>> FindJointEmbedding(
    const ClassSpec& spec, const Structure& b0, const Structure& b1, int cap);

// Amalgamation from a Ramsey witness. Colors each a in C^A by the set of
// i in {0, 1} for which a factors as e o a_i with e in C^{B_i}, finds the
// first b in C^B on which this 4-coloring is constant on b o B^A, and reads
// the amalgam off that color class. `joint` must embed B0 and B1 into B.
// Fails with FailedPrecondition ("witness not Ramsey enough") when no such b
// exists.
absl::StatusOr<std::pair<Embedding, Embedding>> AmalgamateViaArrow(
    const Structure& c, const AmalgamationProblem& problem,
    const JointEmbedding& joint);

}  // namespace ramseykit

#endif  // RAMSEYKIT_CLASS_ENGINE_H_
