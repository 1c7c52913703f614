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


#ifndef RAMSEYKIT_ERGODIC_H_
#define RAMSEYKIT_ERGODIC_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ramseykit/embedding.h"
#include "ramseykit/exact_lp.h"
#include "ramseykit/expansion.h"
#include "ramseykit/structure.h"

namespace ramseykit {

// A distribution over the admissible orders of every canonical base member
// of size at most n. probs[i][j] is the mass of orders[i][j]; orders[i] is
// sorted lexicographically, as AdmissibleOrders returns it.
struct RandomOrdering {
  int n = 0;
  std::vector<Structure> members;
  std::vector<std::vector<Order>> orders;
  std::vector<std::vector<Rational>> probs;

  struct MemberRef {
    int index = -1;
    // s.Relabel(relabeling) == members[index].
    std::vector<int> relabeling;
  };
  // The member isomorphic to s, if s has at most n elements and is one.
  std::optional<MemberRef> Locate(const Structure& s) const;
  // Position of `order` in orders[member], or -1.
  int OrderIndex(int member, const Order& order) const;
};

// Members and admissible orders up to n with empty probability vectors.
absl::StatusOr<RandomOrdering> OrderingSkeleton(
    const OrderedExpansionSpec& spec, int n);

// Uniform mass on the admissible orders of each member. Fails, naming the
// member, when some member has no admissible order.
absl::StatusOr<RandomOrdering> UniformRandomOrdering(
    const OrderedExpansionSpec& spec, int n);

// Nonnegative vectors of the right length summing to exactly 1.
absl::Status ValidateRandomOrdering(const RandomOrdering& ro);

// "a,b,c" for a vector of rationals.
std::string FormatDistribution(const std::vector<Rational>& probs);

struct ConsistencyViolation {
  Structure a;
  Structure b;
  Embedding embedding;  // A -> B
  std::vector<Rational> expected;  // ro(A)
  std::vector<Rational> pushed;    // pushforward of ro(B)
  // Nonempty when the pushforward hits an inadmissible order of A.
  std::string detail;
};

struct ConsistencyReport {
  int checked_size = 0;
  bool pass = true;
  int64_t embeddings_checked = 0;
  std::optional<ConsistencyViolation> violation;
};

// For every pair of members A, B and every a in B^A, the pushforward of
// ro(B) along <^B -> a^{-1}(<^B restricted to im(a)) equals ro(A).
absl::StatusOr<ConsistencyReport> IsConsistent(const RandomOrdering& ro);

// The same check restricted to one-point extensions (|B| = |A| + 1) and
// automorphisms (B = A). Every embedding factors through these.
absl::StatusOr<ConsistencyReport> IsConsistentOnGenerators(
    const RandomOrdering& ro);

struct PolytopeOptions {
  int64_t max_variables = 4096;
  int64_t max_equations = 200000;
  // Use only the generator embeddings for the pushforward equalities.
  bool generators_only = false;
};

struct PolytopeReport {
  int n = 0;
  int variables = 0;
  int equations = 0;
  int rank = 0;
  bool feasible = false;
  // All coordinates have equal minimum and maximum over the polytope.
  bool unique = false;
  std::vector<Rational> min;
  std::vector<Rational> max;
  // The unique point when unique, otherwise a basic feasible point.
  std::optional<RandomOrdering> solution;
  // The uniform ordering exists and satisfies the system.
  bool uniform_is_solution = false;
};

// Consistent random orderings up to n as the exact polytope
// {simplex constraints, pushforward equalities}; feasibility by exact
// elimination and uniqueness by minimizing and maximizing each coordinate.
absl::StatusOr<PolytopeReport> ConsistencyPolytope(
    const OrderedExpansionSpec& spec, int n,
    const PolytopeOptions& options = {});

struct CylinderValue {
  Rational measure;
  // False when the order is not admissible on its domain; the measure is 0.
  bool admissible = true;
};

// mu(U(<')) for an order on a subset of `ambient`, given as ambient elements
// least first: the mass ro assigns to the transported order on the
// canonical member isomorphic to the induced substructure.
absl::StatusOr<CylinderValue> CylinderMeasure(const RandomOrdering& ro,
                                              const Structure& ambient,
                                              const Order& order);

struct Cylinder {
  Order order;  // ambient elements, least first
  Rational measure;
};

struct CylinderCover {
  int level = 0;
  std::vector<Cylinder> sets;
  Rational total;
  // Step into this level (level >= 1): total / previous total when the
  // previous total is positive, and the bound (|A|+n-1)/(|A|+n).
  std::optional<Rational> ratio;
  Rational bound;
  bool within_bound = true;
  // One-point extensions enumerated and discarded while building the level.
  int extensions = 0;
  int discarded = 0;
};

// The cover tower is built for orders on a finite ambient member in place of
// the infinite limit: an ambient order R extending the root is bad when no
// b: (B, <^B) -> (ambient, R) has b(a(i)) = root[i].
struct ConcentrationSetup {
  Structure ambient;  // base member
  Order root;         // order on A, as ambient elements least first
  Structure b;        // (B, <^B) in the expansion signature
  // a: (A, root) -> (B, <^B) where element i of A is root[i]. B must be
  // im(a) plus one point.
  Embedding a;
  int n_max = 0;
};

struct ConcentrationReport {
  std::vector<CylinderCover> levels;
  bool complete = true;
  std::string failure;  // "ambient too small at level n"
  int64_t ambient_orders = 0;
  int64_t bad_orders = 0;
  bool disjoint = true;
  bool covers_bad = true;
  bool non_increasing = true;
  bool within_bound = true;
  // Every admissible one-point extension extends to an admissible ambient
  // order (the finite form of reasonableness the construction relies on).
  bool extensions_realized = true;
  bool cylinder_warnings = false;
};

absl::StatusOr<ConcentrationReport> ConcentrationExperiment(
    const OrderedExpansionSpec& spec, const RandomOrdering& ro,
    const ConcentrationSetup& setup);

}  // namespace ramseykit

#endif  // RAMSEYKIT_ERGODIC_H_
