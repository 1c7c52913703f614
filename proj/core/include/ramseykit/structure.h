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

#ifndef RAMSEYKIT_STRUCTURE_H_
#define RAMSEYKIT_STRUCTURE_H_

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ramseykit/signature.h"

namespace ramseykit {

// Largest universe any structure may have.
inline constexpr int kMaxUniverse = 64;

using Tuple = std::vector<int>;

// The interpretation of one relation symbol on the universe [n]. Relations of
// arity at most 3 are packed bitsets indexed in lexicographic tuple order;
// higher arities keep a sorted tuple list.
class Relation {
 public:
  Relation(int arity, int universe);

  int arity() const { return arity_; }
  bool Contains(std::span<const int> tuple) const;
  void Insert(std::span<const int> tuple);
  void Erase(std::span<const int> tuple);
  // All tuples, lexicographically sorted.
  std::vector<Tuple> Tuples() const;
  int64_t Count() const;

  bool operator==(const Relation& other) const;

 private:
  bool dense() const { return arity_ <= 3; }
  int64_t Index(std::span<const int> tuple) const;

  int arity_;
  int universe_;
  std::vector<uint64_t> bits_;
  std::vector<Tuple> tuples_;
};

// A finite relational structure on the universe [n] = {0, ..., n-1}.
class Structure {
 public:
  // The structure with no tuples in any relation.
  Structure(Signature signature, int size);
  Structure() : Structure(Signature(), 0) {}

  // Builds a structure from explicit tuple lists (one per symbol, in
  // signature order) and checks every invariant: entries in range, arities,
  // and the linear-order axiom on a flagged "<".
  static absl::StatusOr<Structure> Create(
      Signature signature, int size,
      const std::vector<std::vector<Tuple>>& relations);

  int size() const { return size_; }
  const Signature& signature() const { return *signature_; }
  const std::shared_ptr<const Signature>& shared_signature() const {
    return signature_;
  }

  bool Holds(int relation, std::span<const int> tuple) const {
    return relations_[relation].Contains(tuple);
  }
  bool Holds(int relation, std::initializer_list<int> tuple) const {
    return relations_[relation].Contains(
        std::span<const int>(tuple.begin(), tuple.size()));
  }
  const Relation& relation(int i) const { return relations_[i]; }

  void Add(int relation, std::span<const int> tuple);
  void Add(int relation, std::initializer_list<int> tuple) {
    Add(relation, std::span<const int>(tuple.begin(), tuple.size()));
  }
  void Remove(int relation, std::span<const int> tuple);
  // Replaces the tuples of relation `i` with those of `other`.
  void SetRelation(int i, Relation other);

  // The image of this structure under the bijection perm (perm[old] = new).
  Structure Relabel(std::span<const int> perm) const;

  // Same universe and relations, different signature object. The new
  // signature must list the same arities in the same order.
  Structure WithSignature(const Signature& signature) const;

  // Checks entries and the order axiom; used after incremental edits.
  absl::Status Validate() const;

  bool operator==(const Structure& other) const;

 private:
  std::shared_ptr<const Signature> signature_;
  int size_;
  std::vector<Relation> relations_;
};

// Total order used for every sorted listing of structures: by size, then
// signature, then relations in signature order by sorted tuple lists.
bool StructureLess(const Structure& a, const Structure& b);

struct StructureLessFn {
  bool operator()(const Structure& a, const Structure& b) const {
    return StructureLess(a, b);
  }
};

// The reduct of `s` to `target`, whose symbols must all occur in s's
// signature with the same arity.
Structure ReductTo(const Structure& s, const Signature& target);

// True when the flagged order relation is a strict linear order, or no
// order symbol exists.
bool OrderAxiomHolds(const Structure& s);

}  // namespace ramseykit

#endif  // RAMSEYKIT_STRUCTURE_H_
