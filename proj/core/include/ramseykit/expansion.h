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

#ifndef RAMSEYKIT_EXPANSION_H_
#define RAMSEYKIT_EXPANSION_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ramseykit/class_spec.h"
#include "ramseykit/embedding.h"
#include "ramseykit/structure.h"

namespace ramseykit {

// A linear order on [n] written as its elements from least to greatest.
using Order = std::vector<int>;

// A base class over L and an ordered class over L plus a flagged "<". The
// link between the two (reducts of expansion members are exactly the base
// members) is certified up to `link_cap` by CertifyLink, not assumed.
struct OrderedExpansionSpec {
  std::string name;
  std::shared_ptr<const ClassSpec> base;
  std::shared_ptr<const ClassSpec> expansion;
  int link_cap = 4;
};

absl::StatusOr<OrderedExpansionSpec> MakeOrderedExpansion(
    std::string name, std::shared_ptr<const ClassSpec> base,
    std::shared_ptr<const ClassSpec> expansion, int link_cap = 4);

struct LinkReport {
  int checked_size = 0;
  // Every expansion member has a base member as its reduct.
  bool reducts_in_base = true;
  // Every base member has at least one admissible order.
  bool base_covered = true;
  std::optional<Structure> mismatch;
};

absl::StatusOr<LinkReport> CertifyLink(const OrderedExpansionSpec& spec,
                                       int n);

// "0<2<1".
std::string FormatOrder(const Order& order);
absl::StatusOr<Order> ParseOrder(std::string_view text, int n);
// The order carried by the flagged "<" of s.
Order OrderOf(const Structure& s);
// Pullback of an order on the target along an embedding: the order on the
// source given by comparing images.
Order PullbackOrder(const Order& target_order, const Embedding& e,
                    int source_size);
// Position of each element in `order`.
std::vector<int> Ranks(const Order& order);

// Every order making (a, <) an expansion member, sorted lexicographically.
absl::StatusOr<std::vector<Order>> AdmissibleOrders(
    const Structure& a, const OrderedExpansionSpec& spec);

struct ForgetfulReport {
  int checked_size = 0;
  bool pass = true;
  // Pairs of non-isomorphic expansions with isomorphic reducts, one pair per
  // offending base member, as (canonical base member, order, order).
  struct Counterexample {
    Structure base;
    Structure first;
    Structure second;
  };
  std::vector<Counterexample> counterexamples;
};

absl::StatusOr<ForgetfulReport> IsForgetful(const OrderedExpansionSpec& spec,
                                            int n);

struct OrderingPropertyReport {
  int checked_size = 0;
  int b_cap = 0;
  struct Entry {
    Structure a;
    std::optional<Structure> witness;  // nullopt: not found up to b_cap
  };
  std::vector<Entry> entries;
  bool all_found = true;
};

absl::StatusOr<OrderingPropertyReport> CheckOrderingProperty(
    const OrderedExpansionSpec& spec, int n, int b_cap);

struct ReasonableReport {
  int checked_size = 0;
  bool pass = true;
  struct Counterexample {
    Structure a;
    Structure b;
    Embedding embedding;
    Order order_a;
  };
  std::optional<Counterexample> counterexample;
};

absl::StatusOr<ReasonableReport> CheckReasonable(
    const OrderedExpansionSpec& spec, int n);

// True when all copies of each A in B carry isomorphic induced orders.
absl::StatusOr<bool> IsOrderForgetful(const Structure& b,
                                      const std::vector<Structure>& as,
                                      const Order& order);

struct OrderForgetfulResult {
  std::optional<Order> order;  // nullopt: no order on B works
  int64_t orders_examined = 0;
};

// Lexicographically first order-forgetful order. Orders that are not
// lexicographically least in their Aut(B)-orbit are skipped.
absl::StatusOr<OrderForgetfulResult> FindOrderForgetful(
    const Structure& b, const std::vector<Structure>& as);

// Restriction consistency for nested ambients: if `order` is
// order-forgetful on `large`, then its pullback along `inclusion` (small into
// large) is order-forgetful on `small`. Returns the pullback verdict.
absl::StatusOr<bool> RestrictionIsOrderForgetful(
    const Structure& small, const Structure& large,
    const Embedding& inclusion, const std::vector<Structure>& as,
    const Order& order);

}  // namespace ramseykit

#endif  // RAMSEYKIT_EXPANSION_H_
