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

#include "ramseykit/canonical.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <utility>

namespace ramseykit {
namespace {

constexpr uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr uint64_t kFnvPrime = 1099511628211ULL;

uint64_t Mix(uint64_t h, uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
  return h;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const Structure& a) : a_(a), n_(a.size()) {
    const Signature& sig = a.signature();
    tuples_.resize(sig.size());
    incidence_.resize(n_);
    for (int r = 0; r < sig.size(); ++r) {
      tuples_[r] = a.relation(r).Tuples();
      for (int t = 0; t < static_cast<int>(tuples_[r].size()); ++t) {
        uint64_t seen = 0;
        for (int x : tuples_[r][t]) {
          if ((seen >> x) & 1) continue;
          seen |= uint64_t{1} << x;
          incidence_[x].push_back({r, t});
        }
      }
    }
    ComputeTwins();
  }

  std::vector<int> Run() {
    std::vector<int> colors(n_, 0);
    Search(Refine(std::move(colors)));
    return best_perm_;
  }

 private:
  struct Incidence {
    int relation;
    int tuple;
  };

  // u ~ v iff the transposition (u v) is an automorphism.
  void ComputeTwins() {
    twin_rep_.resize(n_);
    std::iota(twin_rep_.begin(), twin_rep_.end(), 0);
    for (int v = 0; v < n_; ++v) {
      for (int u = 0; u < v; ++u) {
        if (twin_rep_[u] != u) continue;
        if (SwapIsAutomorphism(u, v)) {
          twin_rep_[v] = u;
          break;
        }
      }
    }
  }

  bool SwapIsAutomorphism(int u, int v) const {
    Tuple image;
    for (int r = 0; r < static_cast<int>(tuples_.size()); ++r) {
      for (const Tuple& t : tuples_[r]) {
        image = t;
        for (int& x : image) {
          if (x == u) {
            x = v;
          } else if (x == v) {
            x = u;
          }
        }
        if (!a_.Holds(r, image)) return false;
      }
    }
    return true;
  }

  // Equitable refinement. Colors are cell start positions in the ordered
  // partition, so a discrete coloring is directly a permutation.
  std::vector<int> Refine(std::vector<int> colors) const {
    int cells = CountCells(colors);
    std::vector<std::vector<uint64_t>> sig(n_);
    std::vector<int> order(n_);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        sig[v].clear();
        for (const Incidence& inc : incidence_[v]) {
          const Tuple& t = tuples_[inc.relation][inc.tuple];
          uint64_t h = Mix(kFnvOffset, inc.relation);
          uint64_t where = 0;
          for (size_t j = 0; j < t.size(); ++j) {
            if (t[j] == v) where |= uint64_t{1} << j;
          }
          h = Mix(h, where);
          for (int x : t) h = Mix(h, colors[x]);
          sig[v].push_back(h);
        }
        std::sort(sig[v].begin(), sig[v].end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (colors[x] != colors[y]) return colors[x] < colors[y];
        if (sig[x] != sig[y]) return sig[x] < sig[y];
        return false;
      });
      std::vector<int> next(n_);
      for (int i = 0; i < n_; ++i) {
        const int v = order[i];
        if (i > 0 && colors[order[i - 1]] == colors[v] &&
            sig[order[i - 1]] == sig[v]) {
          next[v] = next[order[i - 1]];
        } else {
          next[v] = i;
        }
      }
      const int next_cells = CountCells(next);
      colors = std::move(next);
      if (next_cells == cells) return colors;
      cells = next_cells;
    }
  }

  static int CountCells(const std::vector<int>& colors) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) -
                            sorted.begin());
  }

  void Search(const std::vector<int>& colors) {
    // Smallest color value with more than one vertex.
    std::vector<int> count(n_ + 1, 0);
    for (int c : colors) ++count[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      Leaf(colors);
      return;
    }
    std::vector<int> tried_reps;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (std::find(tried_reps.begin(), tried_reps.end(), twin_rep_[v]) !=
          tried_reps.end()) {
        continue;
      }
      tried_reps.push_back(twin_rep_[v]);
      std::vector<int> child = colors;
      for (int u = 0; u < n_; ++u) {
        if (colors[u] == target && u != v) child[u] = target + 1;
      }
      Search(Refine(std::move(child)));
    }
  }

  void Leaf(const std::vector<int>& perm) {
    std::vector<int> code;
    Tuple t;
    for (const std::vector<Tuple>& rel : tuples_) {
      std::vector<Tuple> mapped;
      mapped.reserve(rel.size());
      for (const Tuple& x : rel) {
        t = x;
        for (int& e : t) e = perm[e];
        mapped.push_back(t);
      }
      std::sort(mapped.begin(), mapped.end());
      code.push_back(static_cast<int>(mapped.size()));
      for (const Tuple& m : mapped) code.insert(code.end(), m.begin(), m.end());
    }
    if (!have_best_ || code < best_code_) {
      have_best_ = true;
      best_code_ = std::move(code);
      best_perm_ = perm;
    }
  }

  const Structure& a_;
  const int n_;
  std::vector<std::vector<Tuple>> tuples_;
  std::vector<std::vector<Incidence>> incidence_;
  std::vector<int> twin_rep_;
  bool have_best_ = false;
  std::vector<int> best_code_;
  std::vector<int> best_perm_;
};

}  // namespace

CanonicalForm Canonicalize(const Structure& a) {
  std::vector<int> perm = Canonicalizer(a).Run();
  Structure canon = a.Relabel(perm);
  const uint64_t hash = StructureDigest(canon);
  return {std::move(canon), std::move(perm), hash};
}

bool Isomorphic(const Structure& a, const Structure& b) {
  if (a.size() != b.size() || !(a.signature() == b.signature())) return false;
  return Canonicalize(a).canon == Canonicalize(b).canon;
}

uint64_t StructureDigest(const Structure& a) {
  uint64_t h = kFnvOffset;
  for (char c : a.signature().ToString()) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnvPrime;
  }
  h = Mix(h, a.size());
  for (int r = 0; r < a.signature().size(); ++r) {
    const std::vector<Tuple> tuples = a.relation(r).Tuples();
    h = Mix(h, tuples.size());
    for (const Tuple& t : tuples) {
      for (int x : t) h = Mix(h, x);
    }
  }
  return h;
}

std::string HexDigest(uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(digest));
  return buf;
}

}  // namespace ramseykit
