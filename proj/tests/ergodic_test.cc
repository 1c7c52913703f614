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


#include <map>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "ramseykit/embedding.h"
#include "ramseykit/ergodic.h"
#include "ramseykit/expansion.h"
#include "ramseykit/named_structures.h"
#include "ramseykit/presets.h"
#include "test_util.h"

namespace ramseykit {
namespace {

OrderedExpansionSpec Expansion(const char* name) {
  absl::StatusOr<OrderedExpansionSpec> ex = PresetExpansion(name);
  EXPECT_TRUE(ex.ok()) << ex.status();
  return *ex;
}

// Order on [size] induced on the domain of e by an order on its target.
Order Pull(const Order& target, const Embedding& e) {
  std::vector<int> where(target.size());
  for (size_t i = 0; i < target.size(); ++i) where[target[i]] = i;
  Order out(e.size());
  for (size_t i = 0; i < e.size(); ++i) out[i] = i;
  std::sort(out.begin(), out.end(),
            [&](int x, int y) { return where[e[x]] < where[e[y]]; });
  return out;
}

// Consistency straight from the definition: every embedding between members
// pushes ro(B) forward onto ro(A).
bool BruteConsistent(const RandomOrdering& ro) {
  for (size_t i = 0; i < ro.members.size(); ++i) {
    for (size_t j = 0; j < ro.members.size(); ++j) {
      const Structure& a = ro.members[i];
      const Structure& b = ro.members[j];
      if (a.size() > b.size()) continue;
      for (const Embedding& e : oracle::Embeddings(a, b)) {
        std::map<Order, Rational> pushed;
        for (size_t k = 0; k < ro.orders[j].size(); ++k) {
          pushed[Pull(ro.orders[j][k], e)] += ro.probs[j][k];
        }
        std::map<Order, Rational> expected;
        for (size_t k = 0; k < ro.orders[i].size(); ++k) {
          if (ro.probs[i][k] != 0) expected[ro.orders[i][k]] = ro.probs[i][k];
        }
        for (auto it = pushed.begin(); it != pushed.end();) {
          it = it->second == 0 ? pushed.erase(it) : std::next(it);
        }
        if (pushed != expected) return false;
      }
    }
  }
  return true;
}

RandomOrdering RandomWeights(const RandomOrdering& skeleton,
                             std::mt19937_64& rng) {
  RandomOrdering ro = skeleton;
  std::uniform_int_distribution<int> w(1, 4);
  for (size_t i = 0; i < ro.orders.size(); ++i) {
    std::vector<Rational> p;
    Rational sum = 0;
    for (size_t k = 0; k < ro.orders[i].size(); ++k) {
      p.push_back(w(rng));
      sum += p.back();
    }
    for (Rational& x : p) x /= sum;
    ro.probs[i] = p;
  }
  return ro;
}

bool Extends(const Order& ambient_order, const Order& partial) {
  std::vector<int> where(ambient_order.size());
  for (size_t i = 0; i < ambient_order.size(); ++i) {
    where[ambient_order[i]] = i;
  }
  for (size_t i = 1; i < partial.size(); ++i) {
    if (where[partial[i - 1]] > where[partial[i]]) return false;
  }
  return true;
}

TEST(UniformTest, EqualMassOnAdmissibleOrders) {
  ASSERT_OK_AND_ASSIGN(RandomOrdering ro,
                       UniformRandomOrdering(Expansion("ordered-graphs"), 3));
  EXPECT_OK(ValidateRandomOrdering(ro));
  ASSERT_EQ(ro.members.size(), 8u);
  for (size_t i = 0; i < ro.members.size(); ++i) {
    for (const Rational& p : ro.probs[i]) {
      EXPECT_EQ(p, Rational(1, ro.orders[i].size()));
    }
  }
}

TEST(UniformTest, FailsWithoutAdmissibleOrders) {
  absl::StatusOr<RandomOrdering> ro =
      UniformRandomOrdering(Expansion("edge-ordered-digraphs"), 3);
  ASSERT_FALSE(ro.ok());
  EXPECT_EQ(ro.status().code(), absl::StatusCode::kFailedPrecondition);
}

TEST(UniformTest, LocateRelabelsOntoTheMember) {
  ASSERT_OK_AND_ASSIGN(RandomOrdering ro,
                       UniformRandomOrdering(Expansion("ordered-graphs"), 4));
  const Structure s = GraphFromEdges(4, {{2, 3}, {3, 0}});
  std::optional<RandomOrdering::MemberRef> ref = ro.Locate(s);
  ASSERT_TRUE(ref.has_value());
  EXPECT_EQ(s.Relabel(ref->relabeling), ro.members[ref->index]);
  EXPECT_FALSE(ro.Locate(PathGraph(5)).has_value());
}

TEST(ValidateTest, RejectsBadVectors) {
  ASSERT_OK_AND_ASSIGN(RandomOrdering ro,
                       UniformRandomOrdering(Expansion("ordered-pure-sets"), 2));
  RandomOrdering short_sum = ro;
  short_sum.probs.back().back() = 0;
  EXPECT_FALSE(ValidateRandomOrdering(short_sum).ok());
  RandomOrdering negative = ro;
  negative.probs.back() = {Rational(3, 2), Rational(-1, 2)};
  EXPECT_FALSE(ValidateRandomOrdering(negative).ok());
}

TEST(ConsistencyTest, UniformAgreesWithDefinition) {
  for (const char* name :
       {"ordered-pure-sets", "ordered-betweenness", "ordered-graphs",
        "ordered-cyclic-orders", "ordered-separations",
        "ordered-tournaments", "convex-equivalences"}) {
    ASSERT_OK_AND_ASSIGN(RandomOrdering ro,
                         UniformRandomOrdering(Expansion(name), 4));
    ASSERT_OK_AND_ASSIGN(ConsistencyReport r, IsConsistent(ro));
    EXPECT_EQ(r.pass, BruteConsistent(ro)) << name;
    ASSERT_OK_AND_ASSIGN(ConsistencyReport g, IsConsistentOnGenerators(ro));
    EXPECT_EQ(g.pass, r.pass) << name;
  }
}

TEST(ConsistencyTest, ForgetfulPresetsWithAmenableGroups) {
  for (const char* name : {"ordered-pure-sets", "ordered-betweenness"}) {
    ASSERT_OK_AND_ASSIGN(RandomOrdering ro,
                         UniformRandomOrdering(Expansion(name), 4));
    ASSERT_OK_AND_ASSIGN(ConsistencyReport r, IsConsistent(ro));
    EXPECT_TRUE(r.pass) << name;
  }
}

TEST(ConsistencyTest, CyclicOrderViolationIsExplicit) {
  ASSERT_OK_AND_ASSIGN(RandomOrdering ro,
                       UniformRandomOrdering(Expansion("ordered-cyclic-orders"),
                                             3));
  ASSERT_OK_AND_ASSIGN(ConsistencyReport r, IsConsistent(ro));
  ASSERT_FALSE(r.pass);
  ASSERT_TRUE(r.violation.has_value());
  const ConsistencyViolation& v = *r.violation;
  EXPECT_TRUE(oracle::IsEmbedding(v.a, v.b, v.embedding));
  EXPECT_NE(v.expected, v.pushed);
  EXPECT_EQ(v.a.size(), 2);
  EXPECT_EQ(v.expected,
            (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
}

TEST(ConsistencyTest, PointMassFailsOnlyUnderAutomorphisms) {
  ASSERT_OK_AND_ASSIGN(RandomOrdering ro,
                       UniformRandomOrdering(Expansion("ordered-pure-sets"), 2));
  ro.probs.back() = {1, 0};
  ASSERT_OK_AND_ASSIGN(ConsistencyReport full, IsConsistent(ro));
  ASSERT_OK_AND_ASSIGN(ConsistencyReport gens, IsConsistentOnGenerators(ro));
  EXPECT_FALSE(full.pass);
  EXPECT_FALSE(gens.pass);
  EXPECT_FALSE(BruteConsistent(ro));
}

TEST(ConsistencyTest, GeneratorsDecideLikeAllEmbeddings) {
  std::mt19937_64 rng(23);
  for (const char* name :
       {"ordered-pure-sets", "ordered-graphs", "ordered-betweenness"}) {
    for (int n = 2; n <= 4; ++n) {
      ASSERT_OK_AND_ASSIGN(RandomOrdering skeleton,
                           UniformRandomOrdering(Expansion(name), n));
      std::vector<RandomOrdering> cases = {skeleton};
      for (int t = 0; t < 5; ++t) cases.push_back(RandomWeights(skeleton, rng));
      if (n <= 3) {
        // A basic feasible point of the polytope.
        ASSERT_OK_AND_ASSIGN(PolytopeReport poly,
                             ConsistencyPolytope(Expansion(name), n));
        if (poly.solution) cases.push_back(*poly.solution);
      }
      for (const RandomOrdering& ro : cases) {
        ASSERT_OK_AND_ASSIGN(ConsistencyReport full, IsConsistent(ro));
        ASSERT_OK_AND_ASSIGN(ConsistencyReport gens,
                             IsConsistentOnGenerators(ro));
        EXPECT_EQ(full.pass, gens.pass) << name << " n=" << n;
        EXPECT_EQ(full.pass, BruteConsistent(ro)) << name << " n=" << n;
      }
    }
  }
}

TEST(PolytopeTest, PureSetsHaveTheUniformOrderingOnly) {
  for (int n = 3; n <= 4; ++n) {
    ASSERT_OK_AND_ASSIGN(PolytopeReport r,
                         ConsistencyPolytope(Expansion("ordered-pure-sets"), n));
    EXPECT_TRUE(r.feasible);
    EXPECT_TRUE(r.unique);
    EXPECT_TRUE(r.uniform_is_solution);
    ASSERT_TRUE(r.solution.has_value());
    ASSERT_OK_AND_ASSIGN(RandomOrdering uniform,
                         UniformRandomOrdering(Expansion("ordered-pure-sets"),
                                               n));
    EXPECT_EQ(r.solution->probs, uniform.probs);
    EXPECT_EQ(r.min, r.max);
  }
  ASSERT_OK_AND_ASSIGN(PolytopeReport three,
                       ConsistencyPolytope(Expansion("ordered-pure-sets"), 3));
  // 1 + 1 + 2 + 6 orders on the sets of size 0..3.
  EXPECT_EQ(three.variables, 10);
  EXPECT_EQ(three.rank, 10);
}

TEST(PolytopeTest, OrderedGraphsAreNotUniquelyErgodicAtThree) {
  ASSERT_OK_AND_ASSIGN(PolytopeReport r,
                       ConsistencyPolytope(Expansion("ordered-graphs"), 3));
  EXPECT_TRUE(r.feasible);
  EXPECT_FALSE(r.unique);
  EXPECT_TRUE(r.uniform_is_solution);
  ASSERT_TRUE(r.solution.has_value());
  ASSERT_OK_AND_ASSIGN(ConsistencyReport c, IsConsistent(*r.solution));
  EXPECT_TRUE(c.pass);
  for (size_t v = 0; v < r.min.size(); ++v) EXPECT_LE(r.min[v], r.max[v]);
}

TEST(PolytopeTest, NonAmenableCasesAreInfeasible) {
  ASSERT_OK_AND_ASSIGN(PolytopeReport cyclic,
                       ConsistencyPolytope(Expansion("ordered-cyclic-orders"),
                                           3));
  EXPECT_FALSE(cyclic.feasible);
  EXPECT_GT(cyclic.rank, 0);
  ASSERT_OK_AND_ASSIGN(PolytopeReport sep,
                       ConsistencyPolytope(Expansion("ordered-separations"),
                                           4));
  EXPECT_FALSE(sep.feasible);
  EXPECT_FALSE(sep.solution.has_value());
}

TEST(PolytopeTest, GeneratorRowsDefineTheSamePolytope) {
  PolytopeOptions gens;
  gens.generators_only = true;
  for (const char* name :
       {"ordered-pure-sets", "ordered-graphs", "ordered-cyclic-orders"}) {
    ASSERT_OK_AND_ASSIGN(PolytopeReport full,
                         ConsistencyPolytope(Expansion(name), 3));
    ASSERT_OK_AND_ASSIGN(PolytopeReport g,
                         ConsistencyPolytope(Expansion(name), 3, gens));
    EXPECT_EQ(full.feasible, g.feasible) << name;
    EXPECT_EQ(full.unique, g.unique) << name;
    EXPECT_EQ(full.min, g.min) << name;
    EXPECT_EQ(full.max, g.max) << name;
    EXPECT_LE(g.equations, full.equations);
  }
}

TEST(PolytopeTest, VariableCapIsEnforced) {
  PolytopeOptions tiny;
  tiny.max_variables = 5;
  EXPECT_FALSE(
      ConsistencyPolytope(Expansion("ordered-pure-sets"), 3, tiny).ok());
}

TEST(CylinderTest, UniformPureSetMeasure) {
  ASSERT_OK_AND_ASSIGN(RandomOrdering ro,
                       UniformRandomOrdering(Expansion("ordered-pure-sets"), 3));
  ASSERT_OK_AND_ASSIGN(CylinderValue v,
                       CylinderMeasure(ro, PureSet(6), {4, 1, 5}));
  EXPECT_TRUE(v.admissible);
  EXPECT_EQ(v.measure, Rational(1, 6));
}

TEST(CylinderTest, InadmissibleOrderHasMeasureZero) {
  const OrderedExpansionSpec ex = Expansion("ordered-betweenness");
  ASSERT_OK_AND_ASSIGN(RandomOrdering ro, UniformRandomOrdering(ex, 3));
  Structure ambient(ex.base->signature(), 3);
  ambient.Add(0, {0, 1, 2});
  ambient.Add(0, {2, 1, 0});
  ASSERT_OK_AND_ASSIGN(CylinderValue bad, CylinderMeasure(ro, ambient,
                                                          {1, 0, 2}));
  EXPECT_FALSE(bad.admissible);
  EXPECT_EQ(bad.measure, 0);
  ASSERT_OK_AND_ASSIGN(CylinderValue good, CylinderMeasure(ro, ambient,
                                                           {2, 1, 0}));
  EXPECT_TRUE(good.admissible);
  EXPECT_EQ(good.measure, Rational(1, 2));
}

TEST(CylinderTest, FinitelyAdditiveOverOnePointRefinements) {
  // For a consistent ordering, U(<') is the disjoint union of the cylinders
  // of its one-point extensions by any fixed new element.
  for (const char* name : {"ordered-pure-sets", "ordered-graphs"}) {
    ASSERT_OK_AND_ASSIGN(RandomOrdering ro,
                         UniformRandomOrdering(Expansion(name), 4));
    const Structure ambient = std::string(name) == "ordered-graphs"
                                  ? GraphFromEdges(5, {{0, 1}, {1, 2}, {3, 4}})
                                  : PureSet(5);
    for (const Order& partial : oracle::Permutations(3)) {
      Order mapped;
      for (int x : partial) mapped.push_back(x + 1);  // elements 1..3
      ASSERT_OK_AND_ASSIGN(CylinderValue whole,
                           CylinderMeasure(ro, ambient, mapped));
      Rational sum = 0;
      for (size_t pos = 0; pos <= mapped.size(); ++pos) {
        Order finer = mapped;
        finer.insert(finer.begin() + pos, 4);
        ASSERT_OK_AND_ASSIGN(CylinderValue part,
                             CylinderMeasure(ro, ambient, finer));
        sum += part.measure;
      }
      EXPECT_EQ(sum, whole.measure) << name << " " << FormatOrder(mapped);
    }
  }
}

ConcentrationSetup PointSetup(Structure ambient, const Signature& ordered,
                              int levels) {
  ConcentrationSetup s;
  s.ambient = std::move(ambient);
  s.root = {0};
  s.b = Structure(ordered, 2);
  s.b.Add(*ordered.OrderIndex(), {0, 1});
  s.a = {0};
  s.n_max = levels;
  return s;
}

void CheckCover(const OrderedExpansionSpec& ex, const Structure& ambient) {
  ConcentrationSetup setup =
      PointSetup(ambient, ex.expansion->signature(), 4);
  if (std::optional<int> e = setup.b.signature().IndexOf("E")) {
    setup.b.Add(*e, {0, 1});
    setup.b.Add(*e, {1, 0});
  }
  ASSERT_OK_AND_ASSIGN(RandomOrdering ro, UniformRandomOrdering(ex, 5));
  ASSERT_OK_AND_ASSIGN(ConcentrationReport r,
                       ConcentrationExperiment(ex, ro, setup));
  ASSERT_TRUE(r.complete) << r.failure;
  ASSERT_EQ(r.levels.size(), 5u);
  EXPECT_TRUE(r.disjoint);
  EXPECT_TRUE(r.covers_bad);
  EXPECT_TRUE(r.non_increasing);
  EXPECT_TRUE(r.within_bound);
  EXPECT_TRUE(r.extensions_realized);
  for (int n = 1; n <= 4; ++n) {
    const CylinderCover& level = r.levels[n];
    EXPECT_EQ(level.bound, Rational(n, n + 1));
    ASSERT_TRUE(level.ratio.has_value());
    EXPECT_LE(*level.ratio, level.bound);
    EXPECT_EQ(level.total, Rational(1, n + 1));
  }

  // Independent recount over every ambient order: the bad orders are those
  // with the root element on top, each lies in exactly one cylinder of every
  // level, and cylinder masses are uniform counts.
  int64_t bad = 0;
  const int size = ambient.size();
  std::vector<Order> all = oracle::Permutations(size);
  for (const CylinderCover& level : r.levels) {
    for (const Cylinder& cyl : level.sets) {
      int64_t inside = 0;
      for (const Order& o : all) inside += Extends(o, cyl.order);
      EXPECT_EQ(cyl.measure, Rational(inside, all.size()));
    }
  }
  for (const Order& o : all) {
    if (o.back() != 0) continue;
    ++bad;
    for (const CylinderCover& level : r.levels) {
      int hits = 0;
      for (const Cylinder& cyl : level.sets) hits += Extends(o, cyl.order);
      EXPECT_EQ(hits, 1) << "level " << level.level;
    }
  }
  EXPECT_EQ(r.bad_orders, bad);
  EXPECT_EQ(r.ambient_orders, static_cast<int64_t>(all.size()));
}

TEST(ConcentrationTest, PureSetsMeetTheBoundExactly) {
  CheckCover(Expansion("ordered-pure-sets"), PureSet(6));
}

TEST(ConcentrationTest, OrderedCompleteGraphs) {
  CheckCover(Expansion("ordered-graphs"), CompleteGraph(6));
}

TEST(ConcentrationTest, SmallAmbientStopsWithAReason) {
  const OrderedExpansionSpec ex = Expansion("ordered-pure-sets");
  ConcentrationSetup setup =
      PointSetup(PureSet(4), ex.expansion->signature(), 4);
  ASSERT_OK_AND_ASSIGN(RandomOrdering ro, UniformRandomOrdering(ex, 5));
  ASSERT_OK_AND_ASSIGN(ConcentrationReport r,
                       ConcentrationExperiment(ex, ro, setup));
  EXPECT_FALSE(r.complete);
  EXPECT_NE(r.failure.find("ambient too small"), std::string::npos);
}

TEST(ConcentrationTest, RejectsBadEmbedding) {
  const OrderedExpansionSpec ex = Expansion("ordered-pure-sets");
  ConcentrationSetup setup =
      PointSetup(PureSet(6), ex.expansion->signature(), 2);
  setup.a = {5};
  ASSERT_OK_AND_ASSIGN(RandomOrdering ro, UniformRandomOrdering(ex, 3));
  EXPECT_FALSE(ConcentrationExperiment(ex, ro, setup).ok());
}

}  // namespace
}  // namespace ramseykit
