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


#include "ramseykit/ergodic.h"

#include <algorithm>
#include <functional>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "ramseykit/canonical.h"
#include "ramseykit/class_engine.h"
#include "ramseykit/named_structures.h"
#include "ramseykit/structure_io.h"

namespace ramseykit {
namespace {

// Pushforward of ro(B) along a: A -> B onto the orders of A. Returns the
// first inadmissible pulled-back order in `bad` when one occurs.
std::vector<Rational> Pushforward(const RandomOrdering& ro, int a_index,
                                  int b_index, const Embedding& e,
                                  std::optional<Order>& bad) {
  const int a_size = ro.members[a_index].size();
  std::vector<Rational> out(ro.orders[a_index].size());
  for (size_t j = 0; j < ro.orders[b_index].size(); ++j) {
    Order pulled = PullbackOrder(ro.orders[b_index][j], e, a_size);
    const int k = ro.OrderIndex(a_index, pulled);
    if (k < 0) {
      if (ro.probs[b_index][j] != 0 && !bad) bad = std::move(pulled);
      continue;
    }
    out[k] += ro.probs[b_index][j];
  }
  return out;
}

// Checks a single embedding; fills `report` on a violation.
bool CheckEmbedding(const RandomOrdering& ro, int ai, int bi,
                    const Embedding& e, ConsistencyReport& report) {
  ++report.embeddings_checked;
  std::optional<Order> bad;
  std::vector<Rational> pushed = Pushforward(ro, ai, bi, e, bad);
  if (!bad && pushed == ro.probs[ai]) return true;
  report.pass = false;
  ConsistencyViolation v{ro.members[ai], ro.members[bi], e, ro.probs[ai],
                         std::move(pushed), ""};
  if (bad) {
    v.detail = absl::StrCat("pushforward charges the inadmissible order ",
                            FormatOrder(*bad));
  }
  report.violation = std::move(v);
  return false;
}

absl::StatusOr<ConsistencyReport> CheckPairs(
    const RandomOrdering& ro,
    const std::function<bool(const Structure&, const Structure&)>& wanted) {
  if (absl::Status s = ValidateRandomOrdering(ro); !s.ok()) return s;
  ConsistencyReport report;
  report.checked_size = ro.n;
  for (size_t bi = 0; bi < ro.members.size(); ++bi) {
    for (size_t ai = 0; ai < ro.members.size(); ++ai) {
      const Structure& a = ro.members[ai];
      const Structure& b = ro.members[bi];
      if (a.size() > b.size() || !wanted(a, b)) continue;
      bool ok = true;
      EmbeddingSearch(a, b).ForEach([&](const Embedding& e) {
        ok = CheckEmbedding(ro, ai, bi, e, report);
        return ok;
      });
      if (!ok) return report;
    }
  }
  return report;
}

// The orders of `dom` (ambient elements) restricted from `order`.
Order Restrict(const Order& order, const std::vector<bool>& in_dom) {
  Order out;
  for (int x : order) {
    if (in_dom[x]) out.push_back(x);
  }
  return out;
}

std::vector<bool> DomainMask(const Order& order, int n) {
  std::vector<bool> mask(n, false);
  for (int x : order) mask[x] = true;
  return mask;
}

bool Extends(const Order& total, const Order& partial, int n) {
  return Restrict(total, DomainMask(partial, n)) == partial;
}

// Two cylinders are disjoint when their orders disagree on the common part
// of their domains.
bool Disjoint(const Order& x, const Order& y, int n) {
  std::vector<bool> both = DomainMask(x, n);
  const std::vector<bool> in_y = DomainMask(y, n);
  for (int i = 0; i < n; ++i) both[i] = both[i] && in_y[i];
  return Restrict(x, both) != Restrict(y, both);
}

}  // namespace

std::optional<RandomOrdering::MemberRef> RandomOrdering::Locate(
    const Structure& s) const {
  if (s.size() > n) return std::nullopt;
  CanonicalForm cf = Canonicalize(s);
  for (size_t i = 0; i < members.size(); ++i) {
    if (members[i] == cf.canon) {
      return MemberRef{static_cast<int>(i), std::move(cf.relabeling)};
    }
  }
  return std::nullopt;
}

int RandomOrdering::OrderIndex(int member, const Order& order) const {
  const std::vector<Order>& list = orders[member];
  auto it = std::lower_bound(list.begin(), list.end(), order);
  if (it == list.end() || *it != order) return -1;
  return static_cast<int>(it - list.begin());
}

absl::StatusOr<RandomOrdering> OrderingSkeleton(
    const OrderedExpansionSpec& spec, int n) {
  if (n < 0) return absl::InvalidArgumentError("n must be nonnegative");
  absl::StatusOr<std::vector<CanonicalForm>> members = Members(*spec.base, n);
  if (!members.ok()) return members.status();
  RandomOrdering ro;
  ro.n = n;
  for (const CanonicalForm& cf : *members) {
    absl::StatusOr<std::vector<Order>> orders =
        AdmissibleOrders(cf.canon, spec);
    if (!orders.ok()) return orders.status();
    ro.members.push_back(cf.canon);
    ro.orders.push_back(*std::move(orders));
    ro.probs.emplace_back();
  }
  return ro;
}

absl::StatusOr<RandomOrdering> UniformRandomOrdering(
    const OrderedExpansionSpec& spec, int n) {
  absl::StatusOr<RandomOrdering> ro = OrderingSkeleton(spec, n);
  if (!ro.ok()) return ro.status();
  for (size_t i = 0; i < ro->members.size(); ++i) {
    const size_t count = ro->orders[i].size();
    if (count == 0) {
      return absl::FailedPreconditionError(
          absl::StrCat("member [", FormatStructureLiteral(ro->members[i]), "]",
                       " has no admissible order in ", spec.name));
    }
    ro->probs[i].assign(count, Rational(1, static_cast<int64_t>(count)));
  }
  return ro;
}

absl::Status ValidateRandomOrdering(const RandomOrdering& ro) {
  if (ro.orders.size() != ro.members.size() ||
      ro.probs.size() != ro.members.size()) {
    return absl::InvalidArgumentError("member, order and mass lists differ");
  }
  for (size_t i = 0; i < ro.members.size(); ++i) {
    if (ro.probs[i].size() != ro.orders[i].size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("member ", i, " has ", ro.probs[i].size(),
                       " masses for ", ro.orders[i].size(), " orders"));
    }
    Rational sum = 0;
    for (const Rational& p : ro.probs[i]) {
      if (p < 0) {
        return absl::InvalidArgumentError(
            absl::StrCat("member ", i, " has a negative mass"));
      }
      sum += p;
    }
    if (sum != 1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "masses of member ", i, " sum to ", FormatRational(sum)));
    }
  }
  return absl::OkStatus();
}

std::string FormatDistribution(const std::vector<Rational>& probs) {
  return absl::StrJoin(probs, ",", [](std::string* out, const Rational& r) {
    out->append(FormatRational(r));
  });
}

absl::StatusOr<ConsistencyReport> IsConsistent(const RandomOrdering& ro) {
  return CheckPairs(ro, [](const Structure&, const Structure&) {
    return true;
  });
}

absl::StatusOr<ConsistencyReport> IsConsistentOnGenerators(
    const RandomOrdering& ro) {
  return CheckPairs(ro, [](const Structure& a, const Structure& b) {
    return b.size() == a.size() + 1 || a == b;
  });
}

absl::StatusOr<PolytopeReport> ConsistencyPolytope(
    const OrderedExpansionSpec& spec, int n, const PolytopeOptions& options) {
  absl::StatusOr<RandomOrdering> skeleton = OrderingSkeleton(spec, n);
  if (!skeleton.ok()) return skeleton.status();
  const RandomOrdering& ro = *skeleton;

  std::vector<int> offset;
  int vars = 0;
  for (const std::vector<Order>& orders : ro.orders) {
    offset.push_back(vars);
    vars += static_cast<int>(orders.size());
  }
  if (vars > options.max_variables) {
    return absl::ResourceExhaustedError(
        absl::StrCat("polytope has ", vars, " variables, over the budget of ",
                     options.max_variables));
  }

  LinearSystem system;
  system.num_vars = vars;
  for (size_t i = 0; i < ro.members.size(); ++i) {
    std::vector<std::pair<int, Rational>> terms;
    for (size_t j = 0; j < ro.orders[i].size(); ++j) {
      terms.emplace_back(offset[i] + j, 1);
    }
    system.AddRow(terms, 1);
  }
  for (size_t bi = 0; bi < ro.members.size(); ++bi) {
    for (size_t ai = 0; ai < ro.members.size(); ++ai) {
      const Structure& a = ro.members[ai];
      const Structure& b = ro.members[bi];
      if (a.size() > b.size()) continue;
      if (options.generators_only && b.size() != a.size() + 1 && !(a == b)) {
        continue;
      }
      for (const Embedding& e : EmbeddingSearch(a, b).All()) {
        // One equality per order of A; pulled-back inadmissible orders
        // must carry no mass.
        std::vector<std::vector<std::pair<int, Rational>>> rows(
            ro.orders[ai].size());
        std::vector<std::pair<int, Rational>> stray;
        for (size_t k = 0; k < ro.orders[ai].size(); ++k) {
          rows[k].emplace_back(offset[ai] + k, -1);
        }
        for (size_t j = 0; j < ro.orders[bi].size(); ++j) {
          const int k = ro.OrderIndex(
              ai, PullbackOrder(ro.orders[bi][j], e, a.size()));
          if (k < 0) {
            stray.emplace_back(offset[bi] + j, 1);
          } else {
            rows[k].emplace_back(offset[bi] + j, 1);
          }
        }
        if (!stray.empty()) rows.push_back(stray);
        for (const auto& row : rows) system.AddRow(row, 0);
        if (static_cast<int64_t>(system.rows.size()) > options.max_equations) {
          return absl::ResourceExhaustedError(absl::StrCat(
              "polytope exceeds the budget of ", options.max_equations,
              " equations"));
        }
      }
    }
  }

  PolytopeReport report;
  report.n = n;
  report.variables = vars;
  report.equations = static_cast<int>(system.rows.size());
  absl::StatusOr<ExactSimplex> lp = ExactSimplex::Create(system);
  if (!lp.ok()) return lp.status();
  report.rank = lp->rank();
  report.feasible = lp->feasible();

  absl::StatusOr<RandomOrdering> uniform = UniformRandomOrdering(spec, n);
  if (uniform.ok()) {
    absl::StatusOr<ConsistencyReport> c = IsConsistent(*uniform);
    if (!c.ok()) return c.status();
    report.uniform_is_solution = c->pass;
  }
  if (!report.feasible) return report;

  report.unique = true;
  for (int v = 0; v < vars; ++v) {
    std::vector<Rational> cost(vars);
    cost[v] = 1;
    absl::StatusOr<ExactSimplex::Optimum> lo = lp->Minimize(cost);
    if (!lo.ok()) return lo.status();
    cost[v] = -1;
    absl::StatusOr<ExactSimplex::Optimum> hi = lp->Minimize(cost);
    if (!hi.ok()) return hi.status();
    report.min.push_back(lo->value);
    report.max.push_back(-hi->value);
    if (report.min.back() != report.max.back()) report.unique = false;
  }
  const std::vector<Rational> point =
      report.unique ? report.min : lp->Point();
  RandomOrdering solution = ro;
  for (size_t i = 0; i < ro.members.size(); ++i) {
    solution.probs[i].assign(point.begin() + offset[i],
                             point.begin() + offset[i] +
                                 ro.orders[i].size());
  }
  report.solution = std::move(solution);
  return report;
}

absl::StatusOr<CylinderValue> CylinderMeasure(const RandomOrdering& ro,
                                              const Structure& ambient,
                                              const Order& order) {
  std::vector<bool> seen(ambient.size(), false);
  for (int x : order) {
    if (x < 0 || x >= ambient.size() || seen[x]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "order ", FormatOrder(order), " is not an order on a subset of [",
          ambient.size(), "]"));
    }
    seen[x] = true;
  }
  Subset dom(order.begin(), order.end());
  std::sort(dom.begin(), dom.end());
  absl::StatusOr<Induced> induced = InducedSubstructure(ambient, dom);
  if (!induced.ok()) return induced.status();
  std::optional<RandomOrdering::MemberRef> ref =
      ro.Locate(induced->structure);
  if (!ref) {
    return absl::OutOfRangeError(
        absl::StrCat("domain of ", FormatOrder(order),
                     " is not a base member of size at most ", ro.n));
  }
  // Ambient element -> induced element -> canonical element.
  Order moved;
  for (int x : order) {
    const int local = std::lower_bound(dom.begin(), dom.end(), x) - dom.begin();
    moved.push_back(ref->relabeling[local]);
  }
  CylinderValue out;
  const int k = ro.OrderIndex(ref->index, moved);
  if (k < 0) {
    out.admissible = false;
    out.measure = 0;
  } else {
    out.measure = ro.probs[ref->index][k];
  }
  return out;
}

absl::StatusOr<ConcentrationReport> ConcentrationExperiment(
    const OrderedExpansionSpec& spec, const RandomOrdering& ro,
    const ConcentrationSetup& setup) {
  const Structure& ambient = setup.ambient;
  const int size = ambient.size();
  const int a_size = static_cast<int>(setup.root.size());
  if (setup.n_max < 0) {
    return absl::InvalidArgumentError("n_max must be nonnegative");
  }
  absl::StatusOr<bool> in_base = spec.base->Contains(ambient);
  if (!in_base.ok()) return in_base.status();
  if (!*in_base) {
    return absl::InvalidArgumentError(
        absl::StrCat("ambient is not a member of ", spec.base->name()));
  }
  std::vector<bool> in_root = DomainMask({}, size);
  for (int x : setup.root) {
    if (x < 0 || x >= size || in_root[x]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "root ", FormatOrder(setup.root), " is not an order on a subset"));
    }
    in_root[x] = true;
  }
  if (!(setup.b.signature() == spec.expansion->signature())) {
    return absl::InvalidArgumentError(
        "B must carry the expansion signature");
  }
  absl::StatusOr<bool> b_in = spec.expansion->Contains(setup.b);
  if (!b_in.ok()) return b_in.status();
  if (!*b_in) {
    return absl::InvalidArgumentError(
        absl::StrCat("B is not a member of ", spec.expansion->name()));
  }
  if (setup.b.size() != a_size + 1) {
    return absl::InvalidArgumentError(
        "B must consist of im(a) and exactly one further point");
  }
  // (A, root) with element i = root[i].
  std::vector<int> perm(size, -1);
  for (int i = 0; i < a_size; ++i) perm[setup.root[i]] = i;
  for (int x = 0, next = a_size; x < size; ++x) {
    if (perm[x] < 0) perm[x] = next++;
  }
  absl::StatusOr<Induced> a_induced =
      InducedSubstructure(ambient.Relabel(perm), IdentityMap(a_size));
  if (!a_induced.ok()) return a_induced.status();
  const Structure a_ordered = WithNaturalOrder(a_induced->structure);
  if (!(a_ordered.signature() == setup.b.signature()) ||
      !IsEmbedding(a_ordered, setup.b, setup.a)) {
    return absl::InvalidArgumentError(
        "a is not an embedding of (A, root) into (B, <^B)");
  }
  int p = -1;
  {
    std::vector<bool> hit(setup.b.size(), false);
    for (int x : setup.a) hit[x] = true;
    for (int x = 0; x < setup.b.size(); ++x) {
      if (!hit[x]) p = x;
    }
  }
  if (a_size + setup.n_max > ro.n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "random ordering is defined up to size ", ro.n, " but level ",
        setup.n_max, " needs ", a_size + setup.n_max));
  }

  // Classify the admissible ambient orders extending the root.
  absl::StatusOr<std::vector<Order>> ambient_orders =
      AdmissibleOrders(ambient, spec);
  if (!ambient_orders.ok()) return ambient_orders.status();
  struct Classified {
    Order order;
    int witness = -1;  // b(p) when good
  };
  std::vector<Classified> extending;
  ConcentrationReport report;
  report.ambient_orders = static_cast<int64_t>(ambient_orders->size());
  std::vector<Order> bad;
  for (const Order& s : *ambient_orders) {
    if (!Extends(s, setup.root, size)) continue;
    const Structure ordered = WithOrder(ambient, s);
    std::vector<int> partial(setup.b.size(), -1);
    for (int i = 0; i < a_size; ++i) partial[setup.a[i]] = setup.root[i];
    std::optional<Embedding> b =
        EmbeddingSearch(setup.b, ordered).First(partial);
    Classified c{s, b ? (*b)[p] : -1};
    if (!b) bad.push_back(s);
    extending.push_back(std::move(c));
  }
  report.bad_orders = static_cast<int64_t>(bad.size());

  auto measure = [&](const Order& order) -> absl::StatusOr<Rational> {
    absl::StatusOr<CylinderValue> v = CylinderMeasure(ro, ambient, order);
    if (!v.ok()) return v.status();
    if (!v->admissible) report.cylinder_warnings = true;
    return v->measure;
  };
  auto meets_bad = [&](const Order& order) {
    return std::any_of(bad.begin(), bad.end(), [&](const Order& r) {
      return Extends(r, order, size);
    });
  };

  CylinderCover level0;
  absl::StatusOr<Rational> m0 = measure(setup.root);
  if (!m0.ok()) return m0.status();
  level0.sets.push_back({setup.root, *m0});
  level0.total = *m0;
  report.levels.push_back(std::move(level0));

  for (int n = 0; n < setup.n_max; ++n) {
    const CylinderCover& prev = report.levels.back();
    CylinderCover next;
    next.level = n + 1;
    next.bound = Rational(a_size + n, a_size + n + 1);
    for (const Cylinder& parent : prev.sets) {
      // The first good ambient order through the parent realizes b.
      const Classified* good = nullptr;
      for (const Classified& c : extending) {
        if (c.witness >= 0 && Extends(c.order, parent.order, size)) {
          good = &c;
          break;
        }
      }
      if (good == nullptr) {
        report.complete = false;
        report.failure =
            absl::StrCat("ambient too small at level ", n + 1);
        break;
      }
      const int q = good->witness;
      if (DomainMask(parent.order, size)[q]) {
        return absl::InternalError(absl::StrCat(
            "witness point ", q, " lies inside the retained cylinder ",
            FormatOrder(parent.order)));
      }
      std::vector<bool> grown = DomainMask(parent.order, size);
      grown[q] = true;
      const Order realized = Restrict(good->order, grown);
      Rational kept = 0;
      for (size_t pos = 0; pos <= parent.order.size(); ++pos) {
        Order child = parent.order;
        child.insert(child.begin() + pos, q);
        absl::StatusOr<Rational> mu = measure(child);
        if (!mu.ok()) return mu.status();
        Subset dom(child.begin(), child.end());
        std::sort(dom.begin(), dom.end());
        absl::StatusOr<Induced> sub = InducedSubstructure(ambient, dom);
        if (!sub.ok()) return sub.status();
        Order local;
        for (int x : child) {
          local.push_back(std::lower_bound(dom.begin(), dom.end(), x) -
                          dom.begin());
        }
        absl::StatusOr<bool> admissible =
            spec.expansion->Contains(WithOrder(sub->structure, local));
        if (!admissible.ok()) return admissible.status();
        if (!*admissible) continue;
        ++next.extensions;
        const bool realizable = std::any_of(
            extending.begin(), extending.end(),
            [&](const Classified& c) { return Extends(c.order, child, size); });
        if (!realizable) report.extensions_realized = false;
        if (child == realized || !meets_bad(child)) {
          ++next.discarded;
          continue;
        }
        kept += *mu;
        next.sets.push_back({std::move(child), *std::move(mu)});
      }
      if (kept * (a_size + n + 1) > parent.measure * (a_size + n)) {
        next.within_bound = false;
      }
    }
    if (!report.complete) break;
    for (const Cylinder& c : next.sets) next.total += c.measure;
    if (prev.total > 0) next.ratio = next.total / prev.total;
    if (next.total > next.bound * prev.total) next.within_bound = false;
    report.levels.push_back(std::move(next));
  }

  for (size_t i = 0; i < report.levels.size(); ++i) {
    const CylinderCover& level = report.levels[i];
    if (!level.within_bound) report.within_bound = false;
    if (i > 0 && level.total > report.levels[i - 1].total) {
      report.non_increasing = false;
    }
    for (size_t x = 0; x < level.sets.size(); ++x) {
      for (size_t y = x + 1; y < level.sets.size(); ++y) {
        if (!Disjoint(level.sets[x].order, level.sets[y].order, size)) {
          report.disjoint = false;
        }
      }
    }
    for (const Order& r : bad) {
      const bool covered =
          std::any_of(level.sets.begin(), level.sets.end(),
                      [&](const Cylinder& c) {
                        return Extends(r, c.order, size);
                      });
      if (!covered) report.covers_bad = false;
    }
  }
  return report;
}

}  // namespace ramseykit
