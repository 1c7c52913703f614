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

#include "ramseykit/expansion.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "ramseykit/named_structures.h"

namespace ramseykit {
namespace {

absl::Status CheckBase(const Structure& a, const OrderedExpansionSpec& spec) {
  if (!(a.signature() == spec.base->signature())) {
    return absl::InvalidArgumentError(absl::StrCat(
        "structure signature [", a.signature().ToString(),
        "] is not the base signature [", spec.base->signature().ToString(),
        "] of ", spec.name));
  }
  return absl::OkStatus();
}

// (a, order) up to isomorphism: ordered structures are rigid, so relabeling
// by rank is a complete invariant.
Structure OrderedType(const Structure& a, const Order& order) {
  return a.Relabel(Ranks(order));
}

std::vector<Order> AllOrders(int n) {
  std::vector<Order> out;
  Order o(n);
  std::iota(o.begin(), o.end(), 0);
  do {
    out.push_back(o);
  } while (std::next_permutation(o.begin(), o.end()));
  return out;
}

}  // namespace

absl::StatusOr<OrderedExpansionSpec> MakeOrderedExpansion(
    std::string name, std::shared_ptr<const ClassSpec> base,
    std::shared_ptr<const ClassSpec> expansion, int link_cap) {
  if (base == nullptr || expansion == nullptr) {
    return absl::InvalidArgumentError("missing base or expansion class");
  }
  const Signature& sig = expansion->signature();
  const std::optional<int> order = sig.OrderIndex();
  if (!order || *order != sig.size() - 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "expansion ", expansion->name(),
        " must end with a flagged order symbol '<'"));
  }
  if (!(sig.Without("<") == base->signature())) {
    return absl::InvalidArgumentError(absl::StrCat(
        "expansion signature [", sig.ToString(), "] is not base [",
        base->signature().ToString(), "] plus '<'"));
  }
  if (link_cap < 0) {
    return absl::InvalidArgumentError("link cap must be nonnegative");
  }
  return OrderedExpansionSpec{std::move(name), std::move(base),
                              std::move(expansion), link_cap};
}

absl::StatusOr<LinkReport> CertifyLink(const OrderedExpansionSpec& spec,
                                       int n) {
  LinkReport report;
  report.checked_size = n;
  for (int m = 0; m <= n; ++m) {
    absl::StatusOr<std::vector<Structure>> expanded =
        spec.expansion->MembersOfSize(m);
    if (!expanded.ok()) return expanded.status();
    for (const Structure& e : *expanded) {
      absl::StatusOr<bool> in =
          spec.base->Contains(ReductTo(e, spec.base->signature()));
      if (!in.ok()) return in.status();
      if (!*in) {
        report.reducts_in_base = false;
        if (!report.mismatch) report.mismatch = e;
      }
    }
    absl::StatusOr<std::vector<Structure>> base = spec.base->MembersOfSize(m);
    if (!base.ok()) return base.status();
    for (const Structure& a : *base) {
      absl::StatusOr<std::vector<Order>> orders = AdmissibleOrders(a, spec);
      if (!orders.ok()) return orders.status();
      if (orders->empty()) {
        report.base_covered = false;
        if (!report.mismatch) report.mismatch = a;
      }
    }
  }
  return report;
}

std::string FormatOrder(const Order& order) {
  return order.empty() ? "-" : absl::StrJoin(order, "<");
}

absl::StatusOr<Order> ParseOrder(std::string_view text, int n) {
  Order order;
  if (text != "-" && !text.empty()) {
    size_t start = 0;
    while (true) {
      const size_t end = text.find('<', start);
      const std::string piece(text.substr(start, end - start));
      int x = 0;
      if (!absl::SimpleAtoi(piece, &x)) {
        return absl::InvalidArgumentError(
            absl::StrCat("order element '", piece, "' is not an integer"));
      }
      order.push_back(x);
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
  }
  std::vector<bool> seen(n, false);
  for (int x : order) {
    if (x < 0 || x >= n || seen[x]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "order '", std::string(text), "' is not a permutation of [", n,
          "]"));
    }
    seen[x] = true;
  }
  if (static_cast<int>(order.size()) != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "order lists ", order.size(), " elements, expected ", n));
  }
  return order;
}

Order OrderOf(const Structure& s) {
  const int o = *s.signature().OrderIndex();
  std::vector<int> below(s.size(), 0);
  for (const Tuple& t : s.relation(o).Tuples()) ++below[t[1]];
  Order order(s.size());
  for (int x = 0; x < s.size(); ++x) order[below[x]] = x;
  return order;
}

std::vector<int> Ranks(const Order& order) {
  std::vector<int> rank(order.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  return rank;
}

Order PullbackOrder(const Order& target_order, const Embedding& e,
                    int source_size) {
  const std::vector<int> rank = Ranks(target_order);
  Order out(source_size);
  std::iota(out.begin(), out.end(), 0);
  std::sort(out.begin(), out.end(),
            [&](int x, int y) { return rank[e[x]] < rank[e[y]]; });
  return out;
}

absl::StatusOr<std::vector<Order>> AdmissibleOrders(
    const Structure& a, const OrderedExpansionSpec& spec) {
  if (absl::Status s = CheckBase(a, spec); !s.ok()) return s;
  if (a.size() > 10) {
    return absl::ResourceExhaustedError(
        absl::StrCat("admissible order enumeration over ", a.size(),
                     "! orders exceeds the budget"));
  }
  std::vector<Order> out;
  for (Order& o : AllOrders(a.size())) {
    absl::StatusOr<bool> in = spec.expansion->Contains(WithOrder(a, o));
    if (!in.ok()) return in.status();
    if (*in) out.push_back(std::move(o));
  }
  return out;
}

absl::StatusOr<ForgetfulReport> IsForgetful(const OrderedExpansionSpec& spec,
                                            int n) {
  ForgetfulReport report;
  report.checked_size = n;
  for (int m = 0; m <= n; ++m) {
    absl::StatusOr<std::vector<Structure>> base = spec.base->MembersOfSize(m);
    if (!base.ok()) return base.status();
    for (const Structure& a : *base) {
      absl::StatusOr<std::vector<Order>> orders = AdmissibleOrders(a, spec);
      if (!orders.ok()) return orders.status();
      if (orders->empty()) continue;
      const Structure first = OrderedType(a, orders->front());
      for (const Order& o : *orders) {
        if (OrderedType(a, o) == first) continue;
        report.pass = false;
        report.counterexamples.push_back(
            {a, WithOrder(a, orders->front()), WithOrder(a, o)});
        break;
      }
    }
  }
  return report;
}

absl::StatusOr<OrderingPropertyReport> CheckOrderingProperty(
    const OrderedExpansionSpec& spec, int n, int b_cap) {
  OrderingPropertyReport report;
  report.checked_size = n;
  report.b_cap = b_cap;
  for (int m = 0; m <= n; ++m) {
    absl::StatusOr<std::vector<Structure>> base = spec.base->MembersOfSize(m);
    if (!base.ok()) return base.status();
    for (const Structure& a : *base) {
      absl::StatusOr<std::vector<Order>> a_orders = AdmissibleOrders(a, spec);
      if (!a_orders.ok()) return a_orders.status();
      std::set<Structure, StructureLessFn> a_types;
      for (const Order& o : *a_orders) {
        a_types.insert(WithOrder(OrderedType(a, o), IdentityMap(m)));
      }
      OrderingPropertyReport::Entry entry{a, std::nullopt};
      for (int size = m; size <= b_cap && !entry.witness; ++size) {
        absl::StatusOr<std::vector<Structure>> bs =
            spec.base->MembersOfSize(size);
        if (!bs.ok()) return bs.status();
        for (const Structure& b : *bs) {
          absl::StatusOr<std::vector<Order>> b_orders =
              AdmissibleOrders(b, spec);
          if (!b_orders.ok()) return b_orders.status();
          if (b_orders->empty()) continue;
          std::set<Structure, StructureLessFn> b_types;
          for (const Order& o : *b_orders) {
            b_types.insert(WithOrder(OrderedType(b, o), IdentityMap(size)));
          }
          bool works = true;
          for (const Structure& bt : b_types) {
            for (const Structure& at : a_types) {
              if (!EmbeddingSearch(at, bt).First()) {
                works = false;
                break;
              }
            }
            if (!works) break;
          }
          if (works) {
            entry.witness = b;
            break;
          }
        }
      }
      if (!entry.witness) report.all_found = false;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

absl::StatusOr<ReasonableReport> CheckReasonable(
    const OrderedExpansionSpec& spec, int n) {
  ReasonableReport report;
  report.checked_size = n;
  for (int bm = 0; bm <= n; ++bm) {
    absl::StatusOr<std::vector<Structure>> bs = spec.base->MembersOfSize(bm);
    if (!bs.ok()) return bs.status();
    for (const Structure& b : *bs) {
      absl::StatusOr<std::vector<Order>> b_orders = AdmissibleOrders(b, spec);
      if (!b_orders.ok()) return b_orders.status();
      for (int am = 0; am <= bm; ++am) {
        absl::StatusOr<std::vector<Structure>> as =
            spec.base->MembersOfSize(am);
        if (!as.ok()) return as.status();
        for (const Structure& a : *as) {
          absl::StatusOr<std::vector<Order>> a_orders =
              AdmissibleOrders(a, spec);
          if (!a_orders.ok()) return a_orders.status();
          if (a_orders->empty()) continue;
          for (const Embedding& e : EmbeddingSearch(a, b).All()) {
            std::set<Order> reachable;
            for (const Order& ob : *b_orders) {
              reachable.insert(PullbackOrder(ob, e, am));
            }
            for (const Order& oa : *a_orders) {
              if (reachable.count(oa)) continue;
              report.pass = false;
              report.counterexample =
                  ReasonableReport::Counterexample{a, b, e, oa};
              return report;
            }
          }
        }
      }
    }
  }
  return report;
}

namespace {

struct CopyTable {
  // Per A: the copies of A in B as sorted subsets, with induced structures.
  std::vector<std::vector<Induced>> copies;
};

absl::StatusOr<CopyTable> BuildCopyTable(const Structure& b,
                                         const std::vector<Structure>& as) {
  CopyTable table;
  for (const Structure& a : as) {
    absl::StatusOr<std::vector<Subset>> copies = Copies(a, b);
    if (!copies.ok()) return copies.status();
    std::vector<Induced> induced;
    for (const Subset& s : *copies) {
      absl::StatusOr<Induced> in = InducedSubstructure(b, s);
      if (!in.ok()) return in.status();
      induced.push_back(*std::move(in));
    }
    table.copies.push_back(std::move(induced));
  }
  return table;
}

bool OrderForgetfulWith(const CopyTable& table, const Order& order) {
  for (const std::vector<Induced>& copies : table.copies) {
    std::optional<Structure> first;
    for (const Induced& c : copies) {
      const Order local =
          PullbackOrder(order, c.inclusion, c.structure.size());
      Structure type = OrderedType(c.structure, local);
      if (!first) {
        first = std::move(type);
      } else if (!(type == *first)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

absl::StatusOr<bool> IsOrderForgetful(const Structure& b,
                                      const std::vector<Structure>& as,
                                      const Order& order) {
  if (static_cast<int>(order.size()) != b.size()) {
    return absl::InvalidArgumentError("order length differs from |B|");
  }
  absl::StatusOr<CopyTable> table = BuildCopyTable(b, as);
  if (!table.ok()) return table.status();
  return OrderForgetfulWith(*table, order);
}

absl::StatusOr<OrderForgetfulResult> FindOrderForgetful(
    const Structure& b, const std::vector<Structure>& as) {
  absl::StatusOr<CopyTable> table = BuildCopyTable(b, as);
  if (!table.ok()) return table.status();
  const std::vector<Embedding> aut = Automorphisms(b);
  const int n = b.size();
  OrderForgetfulResult result;
  Order prefix;
  std::vector<bool> used(n, false);
  // Depth-first over prefixes in lexicographic order. A prefix is dropped
  // when some automorphism maps it to a lexicographically smaller sequence.
  std::function<bool()> dfs = [&]() -> bool {
    for (const Embedding& g : aut) {
      for (size_t i = 0; i < prefix.size(); ++i) {
        if (g[prefix[i]] != prefix[i]) {
          if (g[prefix[i]] < prefix[i]) return false;
          break;
        }
      }
    }
    if (static_cast<int>(prefix.size()) == n) {
      ++result.orders_examined;
      if (OrderForgetfulWith(*table, prefix)) {
        result.order = prefix;
        return true;
      }
      return false;
    }
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      used[x] = true;
      prefix.push_back(x);
      const bool done = dfs();
      prefix.pop_back();
      used[x] = false;
      if (done) return true;
    }
    return false;
  };
  dfs();
  return result;
}

absl::StatusOr<bool> RestrictionIsOrderForgetful(
    const Structure& small, const Structure& large,
    const Embedding& inclusion, const std::vector<Structure>& as,
    const Order& order) {
  if (!IsEmbedding(small, large, inclusion)) {
    return absl::InvalidArgumentError("inclusion is not an embedding");
  }
  return IsOrderForgetful(small, as, PullbackOrder(order, inclusion,
                                                   small.size()));
}

}  // namespace ramseykit
