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

#include "ramseykit/embedding.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ramseykit {
namespace {

// Appends every tuple over {0..step} of length `arity` that mentions `step`.
void TuplesMentioning(int step, int arity, std::vector<Tuple>* out) {
  Tuple t(arity, 0);
  while (true) {
    if (std::find(t.begin(), t.end(), step) != t.end()) out->push_back(t);
    int j = arity - 1;
    while (j >= 0 && t[j] == step) t[j--] = 0;
    if (j < 0) break;
    ++t[j];
  }
}

}  // namespace

EmbeddingSearch::EmbeddingSearch(const Structure& source,
                                 const Structure& target)
    : source_(source), target_(target), checks_(source.size()) {
  const Signature& sig = source.signature();
  for (int step = 0; step < source.size(); ++step) {
    for (int r = 0; r < sig.size(); ++r) {
      std::vector<Tuple> tuples;
      TuplesMentioning(step, sig.symbol(r).arity, &tuples);
      for (Tuple& t : tuples) {
        const bool holds = source.Holds(r, t);
        checks_[step].push_back({r, std::move(t), holds});
      }
    }
  }
}

bool EmbeddingSearch::Consistent(int step, const Embedding& map) const {
  Tuple image;
  for (const Check& c : checks_[step]) {
    image.resize(c.tuple.size());
    for (size_t j = 0; j < c.tuple.size(); ++j) image[j] = map[c.tuple[j]];
    if (target_.Holds(c.relation, image) != c.holds) return false;
  }
  return true;
}

void EmbeddingSearch::ForEach(
    std::span<const int> partial, uint64_t allowed,
    const std::function<bool(const Embedding&)>& visit) const {
  const int n = source_.size();
  const int m = target_.size();
  if (n > m) return;
  uint64_t used = 0;
  for (int i = 0; i < static_cast<int>(partial.size()) && i < n; ++i) {
    if (partial[i] < 0) continue;
    if (partial[i] >= m || ((used >> partial[i]) & 1)) return;
    used |= uint64_t{1} << partial[i];
  }
  Embedding map(n, -1);
  auto fixed_at = [&](int i) {
    return i < static_cast<int>(partial.size()) ? partial[i] : -1;
  };
  // Iterative depth-first search; next[i] is the next candidate for step i.
  std::vector<int> next(n + 1, 0);
  int step = 0;
  if (n == 0) {
    visit(map);
    return;
  }
  next[0] = 0;
  while (step >= 0) {
    if (step == n) {
      if (!visit(map)) return;
      --step;
      continue;
    }
    if (map[step] >= 0) {
      if (fixed_at(step) < 0) used &= ~(uint64_t{1} << map[step]);
      map[step] = -1;
    }
    const int fixed = fixed_at(step);
    int candidate = -1;
    if (fixed >= 0) {
      if (next[step] == 0 && ((allowed >> fixed) & 1)) candidate = fixed;
      next[step] = m;
    } else {
      for (int y = next[step]; y < m; ++y) {
        if (((used >> y) & 1) || !((allowed >> y) & 1)) continue;
        candidate = y;
        break;
      }
    }
    if (candidate < 0) {
      next[step] = 0;
      --step;
      continue;
    }
    if (fixed < 0) next[step] = candidate + 1;
    map[step] = candidate;
    if (fixed < 0) used |= uint64_t{1} << candidate;
    if (!Consistent(step, map)) continue;
    ++step;
    if (step < n) next[step] = 0;
  }
}

std::optional<Embedding> EmbeddingSearch::First(std::span<const int> partial,
                                                uint64_t allowed) const {
  std::optional<Embedding> found;
  ForEach(partial, allowed, [&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

std::vector<Embedding> EmbeddingSearch::All() const {
  std::vector<Embedding> out;
  ForEach([&](const Embedding& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

int64_t EmbeddingSearch::Count() const {
  int64_t count = 0;
  ForEach([&](const Embedding&) {
    ++count;
    return true;
  });
  return count;
}

absl::Status CheckSameSignature(const Structure& a, const Structure& b) {
  if (a.signature() == b.signature()) return absl::OkStatus();
  return absl::InvalidArgumentError(
      absl::StrCat("signature mismatch: [", a.signature().ToString(), "] vs [",
                   b.signature().ToString(), "]"));
}

absl::StatusOr<std::vector<Embedding>> Embeddings(const Structure& a,
                                                  const Structure& b) {
  if (absl::Status st = CheckSameSignature(a, b); !st.ok()) return st;
  return EmbeddingSearch(a, b).All();
}

std::vector<Embedding> Automorphisms(const Structure& a) {
  return EmbeddingSearch(a, a).All();
}

absl::StatusOr<std::vector<Subset>> Copies(const Structure& a,
                                           const Structure& b) {
  if (absl::Status st = CheckSameSignature(a, b); !st.ok()) return st;
  std::set<Subset> images;
  EmbeddingSearch(a, b).ForEach([&](const Embedding& e) {
    images.insert(Image(e));
    return true;
  });
  return std::vector<Subset>(images.begin(), images.end());
}

bool IsEmbedding(const Structure& a, const Structure& b,
                 std::span<const int> map) {
  if (!(a.signature() == b.signature())) return false;
  if (static_cast<int>(map.size()) != a.size()) return false;
  uint64_t used = 0;
  for (int y : map) {
    if (y < 0 || y >= b.size() || ((used >> y) & 1)) return false;
    used |= uint64_t{1} << y;
  }
  return EmbeddingSearch(a, b).First(map).has_value();
}

Embedding Compose(const Embedding& outer, const Embedding& inner) {
  Embedding out(inner.size());
  for (size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Embedding IdentityMap(int n) {
  Embedding id(n);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

std::vector<int> InversePermutation(std::span<const int> perm) {
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

Subset Image(const Embedding& e) {
  Subset s(e.begin(), e.end());
  std::sort(s.begin(), s.end());
  return s;
}

uint64_t ToMask(std::span<const int> subset) {
  uint64_t mask = 0;
  for (int x : subset) mask |= uint64_t{1} << x;
  return mask;
}

Subset FromMask(uint64_t mask) {
  Subset s;
  while (mask != 0) {
    s.push_back(__builtin_ctzll(mask));
    mask &= mask - 1;
  }
  return s;
}

absl::StatusOr<Induced> InducedSubstructure(const Structure& b,
                                            std::span<const int> subset) {
  Subset sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= b.size()) {
      return absl::OutOfRangeError(absl::StrCat(
          "element ", sorted[i], " outside universe of size ", b.size()));
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      return absl::InvalidArgumentError(
          absl::StrCat("element ", sorted[i], " repeated in subset"));
    }
  }
  const int k = static_cast<int>(sorted.size());
  std::vector<int> position(b.size(), -1);
  for (int i = 0; i < k; ++i) position[sorted[i]] = i;
  Structure out(b.signature(), k);
  for (int r = 0; r < b.signature().size(); ++r) {
    for (Tuple t : b.relation(r).Tuples()) {
      bool inside = true;
      for (int& x : t) {
        if (position[x] < 0) {
          inside = false;
          break;
        }
        x = position[x];
      }
      if (inside) out.Add(r, t);
    }
  }
  return Induced{std::move(out), std::move(sorted)};
}

}  // namespace ramseykit
