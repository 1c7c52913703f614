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

#include "ramseykit/named_structures.h"

#include <cctype>
#include <numeric>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"

namespace ramseykit {

Signature GraphSignature() { return *Signature::Create({{"E", 2, false}}); }

Signature OrderSignature() { return *Signature::Create({{"<", 2, true}}); }

Signature OrderedGraphSignature() {
  return *Signature::Create({{"E", 2, false}, {"<", 2, true}});
}

Signature EmptySignature() { return Signature(); }

Structure GraphFromEdges(int n,
                         const std::vector<std::pair<int, int>>& edges) {
  Structure g(GraphSignature(), n);
  for (auto [u, v] : edges) {
    g.Add(0, {u, v});
    g.Add(0, {v, u});
  }
  return g;
}

Structure DigraphFromArcs(int n,
                          const std::vector<std::pair<int, int>>& arcs) {
  Structure g(GraphSignature(), n);
  for (auto [u, v] : arcs) g.Add(0, {u, v});
  return g;
}

Structure CompleteGraph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return GraphFromEdges(n, edges);
}

Structure EmptyGraph(int n) { return GraphFromEdges(n, {}); }

Structure PathGraph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return GraphFromEdges(n, edges);
}

Structure CycleGraph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
  return GraphFromEdges(n, edges);
}

Structure DirectedCycle(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u) arcs.push_back({u, (u + 1) % n});
  return DigraphFromArcs(n, arcs);
}

Structure Chain(int n) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return WithOrder(PureSet(n), seq);
}

Structure PureSet(int n) { return Structure(EmptySignature(), n); }

Structure WithOrder(const Structure& s, const std::vector<int>& sequence) {
  Signature sig = *s.signature().With({"<", 2, true});
  Structure out(sig, s.size());
  for (int r = 0; r < s.signature().size(); ++r) {
    for (const Tuple& t : s.relation(r).Tuples()) out.Add(r, t);
  }
  const int order = sig.size() - 1;
  for (size_t i = 0; i < sequence.size(); ++i) {
    for (size_t j = i + 1; j < sequence.size(); ++j) {
      out.Add(order, {sequence[i], sequence[j]});
    }
  }
  return out;
}

Structure WithNaturalOrder(const Structure& s) {
  std::vector<int> seq(s.size());
  std::iota(seq.begin(), seq.end(), 0);
  return WithOrder(s, seq);
}

absl::StatusOr<Structure> NamedStructure(std::string_view name) {
  size_t split = 0;
  while (split < name.size() &&
         std::isalpha(static_cast<unsigned char>(name[split]))) {
    ++split;
  }
  const std::string_view family = name.substr(0, split);
  int n = 0;
  if (split == name.size() || !absl::SimpleAtoi(std::string(name.substr(split)), &n) ||
      n < 0 || n > kMaxUniverse) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown structure name '", std::string(name), "'"));
  }
  if (family == "k") return CompleteGraph(n);
  if (family == "e") return EmptyGraph(n);
  if (family == "p") return PathGraph(n);
  if (family == "c" && n >= 3) return CycleGraph(n);
  if (family == "dc" && n >= 3) return DirectedCycle(n);
  if (family == "chain") return Chain(n);
  if (family == "set") return PureSet(n);
  return absl::InvalidArgumentError(
      absl::StrCat("unknown structure name '", std::string(name), "'"));
}

}  // namespace ramseykit
