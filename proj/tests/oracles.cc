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


#include "oracles.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "ramseykit/named_structures.h"

namespace ramseykit::oracle {

std::vector<std::vector<int>> AllTuples(int n, int arity) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(arity, 0);
  if (n == 0) return arity == 0 ? std::vector<std::vector<int>>{{}} : out;
  while (true) {
    out.push_back(t);
    int i = arity - 1;
    while (i >= 0 && t[i] == n - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

bool IsEmbedding(const Structure& a, const Structure& b,
                 const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != a.size()) return false;
  std::set<int> seen(map.begin(), map.end());
  if (static_cast<int>(seen.size()) != a.size()) return false;
  for (int x : map) {
    if (x < 0 || x >= b.size()) return false;
  }
  for (int r = 0; r < a.signature().size(); ++r) {
    for (const std::vector<int>& t :
         AllTuples(a.size(), a.signature().symbol(r).arity)) {
      std::vector<int> image;
      for (int x : t) image.push_back(map[x]);
      if (a.Holds(r, t) != b.Holds(r, image)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> Embeddings(const Structure& a,
                                         const Structure& b) {
  std::vector<std::vector<int>> out;
  std::vector<int> map;
  std::vector<bool> used(b.size(), false);
  std::function<void()> rec = [&] {
    if (static_cast<int>(map.size()) == a.size()) {
      if (IsEmbedding(a, b, map)) out.push_back(map);
      return;
    }
    for (int y = 0; y < b.size(); ++y) {
      if (used[y]) continue;
      used[y] = true;
      map.push_back(y);
      rec();
      map.pop_back();
      used[y] = false;
    }
  };
  rec();
  return out;
}

std::vector<std::vector<int>> Automorphisms(const Structure& a) {
  return Embeddings(a, a);
}

std::vector<std::vector<int>> Permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool Isomorphic(const Structure& a, const Structure& b) {
  if (a.size() != b.size() || !(a.signature() == b.signature())) return false;
  for (const std::vector<int>& p : Permutations(a.size())) {
    if (IsEmbedding(a, b, p)) return true;
  }
  return false;
}

int CountIsoClasses(const std::vector<Structure>& structures) {
  std::vector<const Structure*> reps;
  for (const Structure& s : structures) {
    bool fresh = true;
    for (const Structure* r : reps) {
      if (Isomorphic(s, *r)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(&s);
  }
  return static_cast<int>(reps.size());
}

std::vector<Structure> AllGraphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Structure> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (size_t e = 0; e < pairs.size(); ++e) {
      if (mask >> e & 1) edges.push_back(pairs[e]);
    }
    out.push_back(GraphFromEdges(n, edges));
  }
  return out;
}

std::vector<Structure> AllTournaments(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Structure> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> arcs;
    for (size_t e = 0; e < pairs.size(); ++e) {
      const auto [i, j] = pairs[e];
      arcs.push_back(mask >> e & 1 ? std::make_pair(j, i)
                                   : std::make_pair(i, j));
    }
    out.push_back(DigraphFromArcs(n, arcs));
  }
  return out;
}

std::vector<std::vector<int>> Copies(const Structure& a, const Structure& b) {
  std::set<std::vector<int>> out;
  for (std::vector<int> e : Embeddings(a, b)) {
    std::sort(e.begin(), e.end());
    out.insert(e);
  }
  return {out.begin(), out.end()};
}

bool Arrow(const Structure& c, const Structure& b, const Structure& a, int k,
           int d, bool embeddings, std::vector<int>* bad) {
  // Objects: copies (sorted subsets) or embeddings (maps) of A in C.
  const std::vector<std::vector<int>> objects =
      embeddings ? Embeddings(a, c) : Copies(a, c);
  std::vector<std::vector<int>> a_in_b =
      embeddings ? Embeddings(a, b) : Copies(a, b);
  const std::vector<std::vector<int>> b_in_c = Embeddings(b, c);
  // For each B-embedding, the indices of the A-objects inside it.
  std::vector<std::vector<int>> groups;
  std::set<std::vector<int>> seen_groups;
  for (const std::vector<int>& bb : b_in_c) {
    std::vector<int> group;
    for (const std::vector<int>& x : a_in_b) {
      std::vector<int> img;
      for (int v : x) img.push_back(bb[v]);
      if (!embeddings) std::sort(img.begin(), img.end());
      const auto it = std::find(objects.begin(), objects.end(), img);
      group.push_back(static_cast<int>(it - objects.begin()));
    }
    std::sort(group.begin(), group.end());
    seen_groups.insert(group);
  }
  groups.assign(seen_groups.begin(), seen_groups.end());
  std::vector<int> color(objects.size(), 0);
  while (true) {
    bool good = false;
    for (const std::vector<int>& g : groups) {
      std::set<int> used;
      for (int o : g) used.insert(color[o]);
      if (static_cast<int>(used.size()) <= d) {
        good = true;
        break;
      }
    }
    if (!good) {
      if (bad != nullptr) *bad = color;
      return false;
    }
    int i = static_cast<int>(color.size()) - 1;
    while (i >= 0 && color[i] == k - 1) color[i--] = 0;
    if (i < 0) return true;
    ++color[i];
  }
}

}  // namespace ramseykit::oracle
