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

#ifndef RAMSEYKIT_DEGREE_H_
#define RAMSEYKIT_DEGREE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ramseykit/arrow.h"
#include "ramseykit/class_spec.h"
#include "ramseykit/embedding.h"
#include "ramseykit/expansion.h"
#include "ramseykit/structure.h"

namespace ramseykit {

// The fixed enumeration shared by all coloring conversions: copies of A in C
// in lexicographic order, and for each copy the embeddings onto it in
// lexicographic order of the map.
struct EmbeddingIndex {
  std::vector<Subset> copies;
  std::vector<std::vector<Embedding>> per_copy;
  // Embeddings of A into C in lexicographic order, with (copy, j) for each.
  std::vector<Embedding> embeddings;
  std::vector<std::pair<int, int>> position;
  int ell = 1;

  int EmbeddingId(const Embedding& e) const;

 private:
  friend absl::StatusOr<EmbeddingIndex> IndexEmbeddings(const Structure&,
                                                        const Structure&);
  std::map<Embedding, int> ids_;
};

absl::StatusOr<EmbeddingIndex> IndexEmbeddings(const Structure& c,
                                               const Structure& a);

// chi(a) = j where a is the j-th embedding onto its image. Indexed like
// EmbeddingIndex::embeddings.
absl::StatusOr<std::vector<int>> EmbeddingIndexColoring(const Structure& c,
                                                        const Structure& a);

// True when every b in C^A sees all ell colors of `coloring` on b o Aut(A),
// which certifies that the embedding degree of A is at least ell.
absl::StatusOr<bool> SeesAllIndices(const Structure& c, const Structure& a,
                                    const std::vector<int>& coloring);

// chi'(a) = chi(im a) * ell + j, a coloring by k * ell colors.
absl::StatusOr<std::vector<int>> ConvertCopyToEmbedding(
    const std::vector<int>& copy_coloring, const Structure& c,
    const Structure& a);

// chi'(A') = (chi(a_0), ..., chi(a_{ell-1})) over the embeddings onto A'.
absl::StatusOr<std::vector<std::vector<int>>> ConvertEmbeddingToCopy(
    const std::vector<int>& embedding_coloring, const Structure& c,
    const Structure& a);

// Replaces tuple colors by their rank among the distinct tuples, sorted
// lexicographically.
std::vector<int> EncodeTupleColoring(
    const std::vector<std::vector<int>>& tuples);

struct ExpansionCount {
  int isomorphism_classes = 0;
  int labeled = 0;  // |admissible orders|
  bool warning = false;  // A has no admissible order
};

absl::StatusOr<ExpansionCount> CountExpansions(
    const Structure& a, const OrderedExpansionSpec& spec);

struct DegreeCaps {
  int b_cap = 3;
  int c_cap = 6;
  int k_cap = 2;
};

struct DegreeWitness {
  Structure b;
  int k = 0;
  int d = 0;
  Structure c;
};

struct DegreeRecord {
  std::string class_name;
  Structure a;  // canonical
  uint64_t hash = 0;
  int ell = 1;
  DegreeCaps caps;

  int copy_lower = 0;
  std::string copy_lower_certificate;
  std::optional<int> copy_upper;  // exact up to caps when set
  std::string copy_upper_source;
  std::vector<DegreeWitness> copy_witnesses;

  int emb_lower = 0;
  std::string emb_lower_certificate;
  std::optional<int> emb_upper;
  std::string emb_upper_source;
  std::vector<DegreeWitness> emb_witnesses;

  std::optional<int> expansion_count;
  // Set when a search ran out of budget; bounds are then weaker, not wrong.
  bool budget_hit = false;

  bool Exact() const { return emb_upper && *emb_upper == emb_lower; }
};

// Lower bounds come from explicit colorings valid for every C: the order-type
// coloring for copies, the pulled-back labeled order coloring and the
// embedding-index coloring for embeddings. Upper bounds come from witnesses
// for every member B with |A| <= |B| <= max(b_cap, |A| + 1) and every
// k <= k_cap, searching C up to c_cap; they are exact only up to these caps.
// Bounds are transferred through the ell-factor law.
absl::StatusOr<DegreeRecord> DegreeBounds(
    const ClassSpec& spec, const Structure& a, const DegreeCaps& caps,
    const OrderedExpansionSpec* expansion = nullptr,
    const ArrowOptions& options = {});

// Checks lower <= upper and the ell-factor relation between the copy and
// embedding bounds. Returns an error naming the first violation.
absl::Status CheckDegreeRecord(const DegreeRecord& r);

// "A=<hash> copy=[lo,hi] emb=[lo,hi] exp=<n>", with "?" for unknown.
std::string FormatDegreeLine(const DegreeRecord& r);

struct AuditRow {
  std::string class_name;
  int audited_up_to = 0;
  // Largest exact embedding degree per audited size (nullopt if none exact).
  std::vector<std::optional<int>> max_exact_by_size;
  std::optional<int> class_degree;
  bool growing = false;
  bool flagged = false;
};

struct AuditReport {
  std::vector<AuditRow> rows;
  bool pass = true;
};

// Per class, the largest exactly determined embedding degree over the
// audited A. A class whose embedding lower bounds still rise at the largest
// audited size is reported as growing and not judged; otherwise a maximum
// that is not a power of two is flagged.
AuditReport PowerOfTwoAudit(const std::vector<DegreeRecord>& records);

bool IsPowerOfTwo(int64_t x);

}  // namespace ramseykit

#endif  // RAMSEYKIT_DEGREE_H_
