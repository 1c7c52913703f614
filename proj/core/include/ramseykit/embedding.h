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

#ifndef RAMSEYKIT_EMBEDDING_H_
#define RAMSEYKIT_EMBEDDING_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ramseykit/structure.h"

namespace ramseykit {

// An embedding a: A -> B stored as its map, a[i] = image of element i. The
// source and target are supplied by context. Embeddings preserve and reflect
// every relation (induced semantics).
using Embedding = std::vector<int>;

// A sorted set of universe elements.
using Subset = std::vector<int>;

inline constexpr uint64_t kAllElements = ~uint64_t{0};

// Backtracking enumerator for B^A. Elements of A are assigned in increasing
// order and candidate images are tried in increasing order, so embeddings are
// produced in lexicographic order of their maps.
class EmbeddingSearch {
 public:
  // Signatures must be equal; callers check with CheckSameSignature.
  EmbeddingSearch(const Structure& source, const Structure& target);

  // Visits every embedding that agrees with `partial` (entries < 0 are free)
  // and whose image lies inside `allowed`. Stops early when `visit` returns
  // false.
  void ForEach(std::span<const int> partial, uint64_t allowed,
               const std::function<bool(const Embedding&)>& visit) const;
  void ForEach(const std::function<bool(const Embedding&)>& visit) const {
    ForEach({}, kAllElements, visit);
  }

  std::optional<Embedding> First(std::span<const int> partial = {},
                                 uint64_t allowed = kAllElements) const;
  std::vector<Embedding> All() const;
  int64_t Count() const;

 private:
  struct Check {
    int relation;
    Tuple tuple;
    bool holds;
  };

  bool Consistent(int step, const Embedding& map) const;

  const Structure& source_;
  const Structure& target_;
  // checks_[i]: every tuple over {0..i} that mentions i, for every relation.
  std::vector<std::vector<Check>> checks_;
};

absl::Status CheckSameSignature(const Structure& a, const Structure& b);

// B^A in lexicographic order.
absl::StatusOr<std::vector<Embedding>> Embeddings(const Structure& a,
                                                  const Structure& b);

// Aut(A), lexicographic; the identity comes first.
std::vector<Embedding> Automorphisms(const Structure& a);

// The substructures of B isomorphic to A, as sorted element sets, sorted
// lexicographically.
absl::StatusOr<std::vector<Subset>> Copies(const Structure& a,
                                           const Structure& b);

bool IsEmbedding(const Structure& a, const Structure& b,
                 std::span<const int> map);

// outer o inner.
Embedding Compose(const Embedding& outer, const Embedding& inner);

Embedding IdentityMap(int n);

// Inverse of a bijection.
std::vector<int> InversePermutation(std::span<const int> perm);

Subset Image(const Embedding& e);
uint64_t ToMask(std::span<const int> subset);
Subset FromMask(uint64_t mask);

struct Induced {
  Structure structure;
  // The inclusion map; element i of `structure` is subset[i].
  Embedding inclusion;
};

// B restricted to `subset` along the increasing bijection [|subset|] ->
// subset. The subset may be given in any order; it is sorted first.
absl::StatusOr<Induced> InducedSubstructure(const Structure& b,
                                            std::span<const int> subset);

}  // namespace ramseykit

#endif  // RAMSEYKIT_EMBEDDING_H_
