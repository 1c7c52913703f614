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

#include "ramseykit/presets.h"

#include <functional>
#include <map>
#include <mutex>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "ramseykit/named_structures.h"

namespace ramseykit {
namespace {

using ClassPtr = std::shared_ptr<const ClassSpec>;

Signature MakeSignature(std::vector<RelationSymbol> symbols) {
  return *Signature::Create(std::move(symbols));
}

const RelationSymbol kOrder{"<", 2, true};

ClassPtr Axiomatic(std::string name, Signature sig, std::vector<Axiom> axioms,
                   std::vector<Structure> forbidden = {}) {
  return std::make_shared<const ClassSpec>(
      *ClassSpec::Create(std::move(name), std::move(sig), std::move(axioms),
                         std::move(forbidden)));
}

ClassPtr ReductOf(std::string name, Signature sig, ClassPtr source,
                  std::function<Structure(const Structure&)> map) {
  return std::make_shared<const ClassSpec>(ClassSpec::FromReduct(
      std::move(name), std::move(sig), {std::move(source), std::move(map)}));
}

std::vector<Axiom> GraphAxioms() {
  return {{AxiomKind::kIrreflexive, "E"}, {AxiomKind::kSymmetric, "E"}};
}
std::vector<Axiom> DigraphAxioms() {
  return {{AxiomKind::kIrreflexive, "E"}, {AxiomKind::kAntisymmetric, "E"}};
}
std::vector<Axiom> TournamentAxioms() {
  return {{AxiomKind::kIrreflexive, "E"},
          {AxiomKind::kAntisymmetric, "E"},
          {AxiomKind::kTotal, "E"}};
}

// Relations definable from a linear order, given by ranks.
bool Between(const std::vector<int>& rk, int x, int y, int z) {
  return (rk[x] < rk[y] && rk[y] < rk[z]) || (rk[z] < rk[y] && rk[y] < rk[x]);
}
bool Cyclic(const std::vector<int>& rk, int x, int y, int z) {
  return (rk[x] < rk[y] && rk[y] < rk[z]) ||
         (rk[y] < rk[z] && rk[z] < rk[x]) || (rk[z] < rk[x] && rk[x] < rk[y]);
}
// {x, y} separates {z, w} in the cyclic order.
bool Separates(const std::vector<int>& rk, int x, int y, int z, int w) {
  if (x == y || x == z || x == w || y == z || y == w || z == w) return false;
  return Cyclic(rk, x, z, y) != Cyclic(rk, x, w, y);
}

std::vector<int> RanksOf(const Structure& ordered) {
  const int o = *ordered.signature().OrderIndex();
  std::vector<int> rk(ordered.size(), 0);
  for (const Tuple& t : ordered.relation(o).Tuples()) ++rk[t[1]];
  return rk;
}

// Builds the reduct map from a structure carrying only "<" to `sig`, which
// holds the ternary or quaternary relation `rel` and optionally "<".
std::function<Structure(const Structure&)> OrderReduct(Signature sig,
                                                       std::string rel) {
  return [sig, rel](const Structure& ordered) {
    const int n = ordered.size();
    const std::vector<int> rk = RanksOf(ordered);
    Structure out(sig, n);
    const int r = *sig.IndexOf(rel);
    const int arity = sig.symbol(r).arity;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (arity == 3) {
            const bool holds =
                rel == "B" ? Between(rk, x, y, z) : Cyclic(rk, x, y, z);
            if (holds) out.Add(r, {x, y, z});
            continue;
          }
          for (int w = 0; w < n; ++w) {
            if (Separates(rk, x, y, z, w)) out.Add(r, {x, y, z, w});
          }
        }
      }
    }
    if (std::optional<int> o = sig.OrderIndex()) {
      out.SetRelation(*o, ordered.relation(*ordered.signature().OrderIndex()));
    }
    return out;
  };
}

struct Registry {
  std::mutex mu;
  std::map<std::string, ClassPtr, std::less<>> classes;
};

Registry& GetRegistry() {
  static Registry* registry = new Registry;
  return *registry;
}

const std::map<std::string, std::string, std::less<>>& Aliases() {
  static const auto* aliases =
      new std::map<std::string, std::string, std::less<>>{
          {"linear-orders", "ordered-pure-sets"}};
  return *aliases;
}

ClassPtr Build(std::string_view name);

ClassPtr Get(std::string_view name) {
  Registry& reg = GetRegistry();
  {
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.classes.find(name);
    if (it != reg.classes.end()) return it->second;
  }
  ClassPtr built = Build(name);
  if (built == nullptr) return nullptr;
  std::lock_guard<std::mutex> lock(reg.mu);
  return reg.classes.emplace(std::string(name), built).first->second;
}

ClassPtr Build(std::string_view name) {
  const Signature graph = GraphSignature();
  const Signature ordered_graph = OrderedGraphSignature();
  if (name == "pure-sets") return Axiomatic("pure-sets", EmptySignature(), {});
  if (name == "ordered-pure-sets") {
    return Axiomatic("ordered-pure-sets", OrderSignature(), {});
  }
  if (name == "graphs") return Axiomatic("graphs", graph, GraphAxioms());
  if (name == "ordered-graphs") {
    return Axiomatic("ordered-graphs", ordered_graph, GraphAxioms());
  }
  if (name == "triangle-free") {
    return Axiomatic("triangle-free", graph, GraphAxioms(), {CompleteGraph(3)});
  }
  if (name == "complete-graphs") {
    return Axiomatic("complete-graphs", graph, GraphAxioms(), {EmptyGraph(2)});
  }
  if (name == "equivalences") {
    return Axiomatic("equivalences", graph,
                     {{AxiomKind::kEquivalence, "E"}});
  }
  if (name == "ordered-equivalences" || name == "convex-equivalences") {
    std::vector<Structure> forbidden;
    if (name == "convex-equivalences") {
      // 0 < 1 < 2 with 0 ~ 2 but 0 !~ 1.
      Structure s(ordered_graph, 3);
      for (int x = 0; x < 3; ++x) s.Add(0, {x, x});
      s.Add(0, {0, 2});
      s.Add(0, {2, 0});
      s.Add(1, {0, 1});
      s.Add(1, {1, 2});
      s.Add(1, {0, 2});
      forbidden.push_back(std::move(s));
    }
    return Axiomatic(std::string(name), ordered_graph,
                     {{AxiomKind::kEquivalence, "E"}}, std::move(forbidden));
  }
  if (name == "digraphs") return Axiomatic("digraphs", graph, DigraphAxioms());
  if (name == "ordered-digraphs") {
    return Axiomatic("ordered-digraphs", ordered_graph, DigraphAxioms());
  }
  if (name == "edge-ordered-digraphs") {
    // An arc pointing down the order.
    Structure down(ordered_graph, 2);
    down.Add(0, {1, 0});
    down.Add(1, {0, 1});
    return Axiomatic("edge-ordered-digraphs", ordered_graph, DigraphAxioms(),
                     {down});
  }
  if (name == "dags") {
    return ReductOf("dags", graph, Get("edge-ordered-digraphs"),
                    [graph](const Structure& s) { return ReductTo(s, graph); });
  }
  if (name == "tournaments") {
    return Axiomatic("tournaments", graph, TournamentAxioms());
  }
  if (name == "ordered-tournaments") {
    return Axiomatic("ordered-tournaments", ordered_graph, TournamentAxioms());
  }
  struct OrderReductPreset {
    std::string_view name;
    std::string_view relation;
    int arity;
    bool keep_order;
  };
  static constexpr OrderReductPreset kOrderReducts[] = {
      {"betweenness", "B", 3, false},
      {"ordered-betweenness", "B", 3, true},
      {"cyclic-orders", "C", 3, false},
      {"ordered-cyclic-orders", "C", 3, true},
      {"separations", "S", 4, false},
      {"ordered-separations", "S", 4, true},
  };
  for (const OrderReductPreset& p : kOrderReducts) {
    if (name != p.name) continue;
    std::vector<RelationSymbol> symbols = {
        {std::string(p.relation), p.arity, false}};
    if (p.keep_order) symbols.push_back(kOrder);
    const Signature sig = MakeSignature(std::move(symbols));
    return ReductOf(std::string(p.name), sig, Get("ordered-pure-sets"),
                    OrderReduct(sig, std::string(p.relation)));
  }
  return nullptr;
}

struct ExpansionPair {
  std::string_view name;
  std::string_view base;
  std::string_view expansion;
};

constexpr ExpansionPair kExpansions[] = {
    {"ordered-pure-sets", "pure-sets", "ordered-pure-sets"},
    {"ordered-graphs", "graphs", "ordered-graphs"},
    {"ordered-betweenness", "betweenness", "ordered-betweenness"},
    {"ordered-cyclic-orders", "cyclic-orders", "ordered-cyclic-orders"},
    {"ordered-separations", "separations", "ordered-separations"},
    {"ordered-equivalences", "equivalences", "ordered-equivalences"},
    {"convex-equivalences", "equivalences", "convex-equivalences"},
    {"ordered-digraphs", "digraphs", "ordered-digraphs"},
    {"edge-ordered-digraphs", "digraphs", "edge-ordered-digraphs"},
    {"topological-dags", "dags", "edge-ordered-digraphs"},
    {"ordered-tournaments", "tournaments", "ordered-tournaments"},
};

}  // namespace

std::vector<std::string> PresetClassNames() {
  return {"pure-sets",
          "ordered-pure-sets",
          "linear-orders",
          "graphs",
          "ordered-graphs",
          "triangle-free",
          "complete-graphs",
          "equivalences",
          "ordered-equivalences",
          "convex-equivalences",
          "digraphs",
          "ordered-digraphs",
          "edge-ordered-digraphs",
          "dags",
          "tournaments",
          "ordered-tournaments",
          "betweenness",
          "ordered-betweenness",
          "cyclic-orders",
          "ordered-cyclic-orders",
          "separations",
          "ordered-separations"};
}

absl::StatusOr<std::shared_ptr<const ClassSpec>> PresetClass(
    std::string_view name) {
  auto alias = Aliases().find(name);
  if (alias != Aliases().end()) name = alias->second;
  ClassPtr spec = Get(name);
  if (spec == nullptr) {
    return absl::NotFoundError(
        absl::StrCat("unknown preset class '", std::string(name),
                     "'; known: ", absl::StrJoin(PresetClassNames(), ", ")));
  }
  return spec;
}

std::vector<std::string> PresetExpansionNames() {
  std::vector<std::string> names;
  for (const ExpansionPair& p : kExpansions) names.emplace_back(p.name);
  return names;
}

absl::StatusOr<OrderedExpansionSpec> PresetExpansion(std::string_view name) {
  if (name == "linear-orders") name = "ordered-pure-sets";
  for (const ExpansionPair& p : kExpansions) {
    if (p.name != name) continue;
    return MakeOrderedExpansion(std::string(p.name), Get(p.base),
                                Get(p.expansion));
  }
  return absl::NotFoundError(
      absl::StrCat("unknown expansion preset '", std::string(name),
                   "'; known: ", absl::StrJoin(PresetExpansionNames(), ", ")));
}

}  // namespace ramseykit
