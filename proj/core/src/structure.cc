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

#include "ramseykit/structure.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ramseykit {

Relation::Relation(int arity, int universe)
    : arity_(arity), universe_(universe) {
  if (dense()) {
    int64_t cells = 1;
    for (int i = 0; i < arity_; ++i) cells *= universe_;
    bits_.assign((cells + 63) / 64, 0);
  }
}

int64_t Relation::Index(std::span<const int> tuple) const {
  int64_t index = 0;
  for (int x : tuple) index = index * universe_ + x;
  return index;
}

bool Relation::Contains(std::span<const int> tuple) const {
  if (dense()) {
    const int64_t i = Index(tuple);
    return (bits_[i >> 6] >> (i & 63)) & 1;
  }
  return std::binary_search(
      tuples_.begin(), tuples_.end(), tuple,
      [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                            b.end());
      });
}

void Relation::Insert(std::span<const int> tuple) {
  if (dense()) {
    const int64_t i = Index(tuple);
    bits_[i >> 6] |= uint64_t{1} << (i & 63);
    return;
  }
  Tuple t(tuple.begin(), tuple.end());
  auto it = std::lower_bound(tuples_.begin(), tuples_.end(), t);
  if (it == tuples_.end() || *it != t) tuples_.insert(it, std::move(t));
}

void Relation::Erase(std::span<const int> tuple) {
  if (dense()) {
    const int64_t i = Index(tuple);
    bits_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    return;
  }
  Tuple t(tuple.begin(), tuple.end());
  auto it = std::lower_bound(tuples_.begin(), tuples_.end(), t);
  if (it != tuples_.end() && *it == t) tuples_.erase(it);
}

std::vector<Tuple> Relation::Tuples() const {
  if (!dense()) return tuples_;
  std::vector<Tuple> out;
  for (size_t w = 0; w < bits_.size(); ++w) {
    uint64_t word = bits_[w];
    while (word != 0) {
      const int b = __builtin_ctzll(word);
      word &= word - 1;
      int64_t index = static_cast<int64_t>(w) * 64 + b;
      Tuple t(arity_);
      for (int j = arity_ - 1; j >= 0; --j) {
        t[j] = static_cast<int>(index % universe_);
        index /= universe_;
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

int64_t Relation::Count() const {
  if (!dense()) return static_cast<int64_t>(tuples_.size());
  int64_t count = 0;
  for (uint64_t w : bits_) count += __builtin_popcountll(w);
  return count;
}

bool Relation::operator==(const Relation& other) const {
  return arity_ == other.arity_ && universe_ == other.universe_ &&
         bits_ == other.bits_ && tuples_ == other.tuples_;
}

Structure::Structure(Signature signature, int size)
    : signature_(std::make_shared<const Signature>(std::move(signature))),
      size_(size) {
  relations_.reserve(signature_->size());
  for (const RelationSymbol& s : signature_->symbols()) {
    relations_.emplace_back(s.arity, size_);
  }
}

absl::StatusOr<Structure> Structure::Create(
    Signature signature, int size,
    const std::vector<std::vector<Tuple>>& relations) {
  if (size < 0 || size > kMaxUniverse) {
    return absl::InvalidArgumentError(
        absl::StrCat("universe size ", size, " outside [0, ", kMaxUniverse,
                     "]"));
  }
  if (static_cast<int>(relations.size()) != signature.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected ", signature.size(), " relations, got ",
                     relations.size()));
  }
  Structure s(std::move(signature), size);
  for (int r = 0; r < s.signature().size(); ++r) {
    const RelationSymbol& sym = s.signature().symbol(r);
    for (const Tuple& t : relations[r]) {
      if (static_cast<int>(t.size()) != sym.arity) {
        return absl::InvalidArgumentError(
            absl::StrCat("tuple of length ", t.size(), " for ", sym.name, "/",
                         sym.arity));
      }
      for (int x : t) {
        if (x < 0 || x >= size) {
          return absl::InvalidArgumentError(absl::StrCat(
              "entry ", x, " of relation ", sym.name, " outside [0, ", size,
              ")"));
        }
      }
      s.relations_[r].Insert(t);
    }
  }
  if (absl::Status st = s.Validate(); !st.ok()) return st;
  return s;
}

void Structure::Add(int relation, std::span<const int> tuple) {
  relations_[relation].Insert(tuple);
}

void Structure::Remove(int relation, std::span<const int> tuple) {
  relations_[relation].Erase(tuple);
}

void Structure::SetRelation(int i, Relation other) {
  relations_[i] = std::move(other);
}

Structure Structure::Relabel(std::span<const int> perm) const {
  Structure out(*this);
  for (int r = 0; r < signature_->size(); ++r) {
    Relation rel(signature_->symbol(r).arity, size_);
    for (Tuple t : relations_[r].Tuples()) {
      for (int& x : t) x = perm[x];
      rel.Insert(t);
    }
    out.relations_[r] = std::move(rel);
  }
  return out;
}

Structure Structure::WithSignature(const Signature& signature) const {
  Structure out(*this);
  out.signature_ = std::make_shared<const Signature>(signature);
  return out;
}

absl::Status Structure::Validate() const {
  if (size_ < 0 || size_ > kMaxUniverse) {
    return absl::InvalidArgumentError(
        absl::StrCat("universe size ", size_, " outside [0, ", kMaxUniverse,
                     "]"));
  }
  if (!OrderAxiomHolds(*this)) {
    return absl::InvalidArgumentError(
        "relation < is flagged as an order but is not a strict linear order");
  }
  return absl::OkStatus();
}

bool Structure::operator==(const Structure& other) const {
  return size_ == other.size_ && *signature_ == *other.signature_ &&
         relations_ == other.relations_;
}

Structure ReductTo(const Structure& s, const Signature& target) {
  Structure out(target, s.size());
  for (int r = 0; r < target.size(); ++r) {
    out.SetRelation(r, s.relation(*s.signature().IndexOf(target.symbol(r).name)));
  }
  return out;
}

bool StructureLess(const Structure& a, const Structure& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::string sa = a.signature().ToString();
  const std::string sb = b.signature().ToString();
  if (sa != sb) return sa < sb;
  for (int r = 0; r < a.signature().size(); ++r) {
    if (a.relation(r) == b.relation(r)) continue;
    return a.relation(r).Tuples() < b.relation(r).Tuples();
  }
  return false;
}

bool OrderAxiomHolds(const Structure& s) {
  const std::optional<int> order = s.signature().OrderIndex();
  if (!order) return true;
  const int n = s.size();
  for (int x = 0; x < n; ++x) {
    if (s.Holds(*order, {x, x})) return false;
    for (int y = x + 1; y < n; ++y) {
      const bool xy = s.Holds(*order, {x, y});
      const bool yx = s.Holds(*order, {y, x});
      if (xy == yx) return false;
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!s.Holds(*order, {x, y})) continue;
      for (int z = 0; z < n; ++z) {
        if (s.Holds(*order, {y, z}) && !s.Holds(*order, {x, z})) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ramseykit
