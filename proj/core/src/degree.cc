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

#include "ramseykit/degree.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ramseykit/canonical.h"
#include "ramseykit/named_structures.h"
#include "ramseykit/structure_io.h"

namespace ramseykit {
namespace {

std::vector<Order> AllOrders(int n) {
  std::vector<Order> out;
  Order o(n);
  std::iota(o.begin(), o.end(), 0);
  do {
    out.push_back(o);
  } while (std::next_permutation(o.begin(), o.end()));
  return out;
}

int CeilDiv(int a, int b) { return (a + b - 1) / b; }

// min over orders of B of the number of order types of A-copies in B.
int MinOrderTypes(const Structure& a, const Structure& b) {
  const std::vector<Subset> copies = *Copies(a, b);
  std::vector<Induced> induced;
  for (const Subset& s : copies) induced.push_back(*InducedSubstructure(b, s));
  int best = static_cast<int>(copies.size()) + 1;
  for (const Order& o : AllOrders(b.size())) {
    std::set<Structure, StructureLessFn> types;
    for (const Induced& in : induced) {
      const Order local = PullbackOrder(o, in.inclusion, a.size());
      types.insert(in.structure.Relabel(Ranks(local)));
    }
    best = std::min(best, static_cast<int>(types.size()));
  }
  return best;
}

// min over orders of B of the number of distinct pulled-back orders of A.
int MinPullbacks(const Structure& a, const Structure& b) {
  const std::vector<Embedding> maps = EmbeddingSearch(a, b).All();
  int best = static_cast<int>(maps.size()) + 1;
  for (const Order& o : AllOrders(b.size())) {
    std::set<Order> seen;
    for (const Embedding& e : maps) seen.insert(PullbackOrder(o, e, a.size()));
    best = std::min(best, static_cast<int>(seen.size()));
  }
  return best;
}

struct UpperSearch {
  std::optional<int> d;
  std::vector<DegreeWitness> witnesses;
  bool budget_hit = false;
};

// Smallest d in [from, k_cap) such that every (B, k) with d < k <= k_cap has
// a witness C of size at most c_cap.
absl::StatusOr<UpperSearch> SearchUpper(const ClassSpec& spec,
                                        const Structure& a,
                                        const std::vector<Structure>& bs,
                                        int from, ArrowMode mode,
                                        const DegreeCaps& caps,
                                        const ArrowOptions& options) {
  UpperSearch out;
  for (int d = std::max(from, 1); d < caps.k_cap; ++d) {
    std::vector<DegreeWitness> found;
    bool all = true;
    for (const Structure& b : bs) {
      for (int k = d + 1; k <= caps.k_cap && all; ++k) {
        absl::StatusOr<WitnessResult> w =
            FindWitness(spec, b, a, k, d, mode, caps.c_cap, options);
        if (absl::IsResourceExhausted(w.status())) {
          out.budget_hit = true;
          return out;
        }
        if (!w.ok()) return w.status();
        if (!w->witness) {
          all = false;
          break;
        }
        found.push_back({b, k, d, *w->witness});
      }
      if (!all) break;
    }
    if (all) {
      out.d = d;
      out.witnesses = std::move(found);
      return out;
    }
  }
  return out;
}

}  // namespace

int EmbeddingIndex::EmbeddingId(const Embedding& e) const {
  auto it = ids_.find(e);
  return it == ids_.end() ? -1 : it->second;
}

absl::StatusOr<EmbeddingIndex> IndexEmbeddings(const Structure& c,
                                               const Structure& a) {
  absl::StatusOr<std::vector<Embedding>> all = Embeddings(a, c);
  if (!all.ok()) return all.status();
  EmbeddingIndex idx;
  idx.ell = static_cast<int>(Automorphisms(a).size());
  idx.embeddings = *std::move(all);
  std::map<Subset, int> copy_id;
  for (const Embedding& e : idx.embeddings) {
    copy_id.emplace(Image(e), 0);
  }
  for (auto& [subset, id] : copy_id) {
    id = static_cast<int>(idx.copies.size());
    idx.copies.push_back(subset);
  }
  idx.per_copy.assign(idx.copies.size(), {});
  for (size_t i = 0; i < idx.embeddings.size(); ++i) {
    const Embedding& e = idx.embeddings[i];
    const int cid = copy_id.at(Image(e));
    idx.position.emplace_back(cid,
                              static_cast<int>(idx.per_copy[cid].size()));
    idx.per_copy[cid].push_back(e);
    idx.ids_.emplace(e, static_cast<int>(i));
  }
  return idx;
}

absl::StatusOr<std::vector<int>> EmbeddingIndexColoring(const Structure& c,
                                                        const Structure& a) {
  absl::StatusOr<EmbeddingIndex> idx = IndexEmbeddings(c, a);
  if (!idx.ok()) return idx.status();
  std::vector<int> out;
  for (const auto& [copy, j] : idx->position) out.push_back(j);
  return out;
}

absl::StatusOr<bool> SeesAllIndices(const Structure& c, const Structure& a,
                                    const std::vector<int>& coloring) {
  absl::StatusOr<EmbeddingIndex> idx = IndexEmbeddings(c, a);
  if (!idx.ok()) return idx.status();
  if (coloring.size() != idx->embeddings.size()) {
    return absl::InvalidArgumentError("coloring size mismatch");
  }
  const std::vector<Embedding> aut = Automorphisms(a);
  for (const Embedding& b : idx->embeddings) {
    std::set<int> seen;
    for (const Embedding& g : aut) {
      seen.insert(coloring[idx->EmbeddingId(Compose(b, g))]);
    }
    if (static_cast<int>(seen.size()) < idx->ell) return false;
  }
  return true;
}

absl::StatusOr<std::vector<int>> ConvertCopyToEmbedding(
    const std::vector<int>& copy_coloring, const Structure& c,
    const Structure& a) {
  absl::StatusOr<EmbeddingIndex> idx = IndexEmbeddings(c, a);
  if (!idx.ok()) return idx.status();
  if (copy_coloring.size() != idx->copies.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "copy coloring has ", copy_coloring.size(), " entries for ",
        idx->copies.size(), " copies"));
  }
  std::vector<int> out;
  for (const auto& [copy, j] : idx->position) {
    out.push_back(copy_coloring[copy] * idx->ell + j);
  }
  return out;
}

absl::StatusOr<std::vector<std::vector<int>>> ConvertEmbeddingToCopy(
    const std::vector<int>& embedding_coloring, const Structure& c,
    const Structure& a) {
  absl::StatusOr<EmbeddingIndex> idx = IndexEmbeddings(c, a);
  if (!idx.ok()) return idx.status();
  if (embedding_coloring.size() != idx->embeddings.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "embedding coloring has ", embedding_coloring.size(),
        " entries for ", idx->embeddings.size(), " embeddings"));
  }
  std::vector<std::vector<int>> out(idx->copies.size());
  for (size_t i = 0; i < idx->copies.size(); ++i) {
    for (const Embedding& e : idx->per_copy[i]) {
      out[i].push_back(embedding_coloring[idx->EmbeddingId(e)]);
    }
  }
  return out;
}

std::vector<int> EncodeTupleColoring(
    const std::vector<std::vector<int>>& tuples) {
  std::set<std::vector<int>> distinct(tuples.begin(), tuples.end());
  std::vector<int> out;
  for (const std::vector<int>& t : tuples) {
    out.push_back(
        static_cast<int>(std::distance(distinct.begin(), distinct.find(t))));
  }
  return out;
}

absl::StatusOr<ExpansionCount> CountExpansions(
    const Structure& a, const OrderedExpansionSpec& spec) {
  absl::StatusOr<std::vector<Order>> orders = AdmissibleOrders(a, spec);
  if (!orders.ok()) return orders.status();
  ExpansionCount out;
  out.labeled = static_cast<int>(orders->size());
  std::set<Structure, StructureLessFn> types;
  for (const Order& o : *orders) types.insert(a.Relabel(Ranks(o)));
  out.isomorphism_classes = static_cast<int>(types.size());
  out.warning = orders->empty();
  return out;
}

absl::StatusOr<DegreeRecord> DegreeBounds(
    const ClassSpec& spec, const Structure& a_in, const DegreeCaps& caps,
    const OrderedExpansionSpec* expansion, const ArrowOptions& options) {
  absl::StatusOr<bool> member = spec.Contains(a_in);
  if (!member.ok()) return member.status();
  if (!*member) {
    return absl::InvalidArgumentError(
        absl::StrCat("A is not a member of ", spec.name()));
  }
  if (caps.k_cap < 1 || caps.c_cap < 0 || caps.b_cap < 0) {
    return absl::InvalidArgumentError("caps must be positive");
  }
  DegreeRecord r;
  r.class_name = spec.name();
  r.a = Canonicalize(a_in).canon;
  r.hash = StructureDigest(r.a);
  r.caps = caps;
  const Structure& a = r.a;
  r.ell = static_cast<int>(Automorphisms(a).size());

  std::vector<Structure> bs;
  for (int m = a.size(); m <= std::max(caps.b_cap, a.size() + 1); ++m) {
    absl::StatusOr<std::vector<Structure>> level = spec.MembersOfSize(m);
    if (!level.ok()) return level.status();
    for (const Structure& b : *level) {
      if (EmbeddingSearch(a, b).First()) bs.push_back(b);
    }
  }

  r.copy_lower = 1;
  r.copy_lower_certificate = "trivial";
  r.emb_lower = r.ell;
  r.emb_lower_certificate = absl::StrCat(
      "embedding-index coloring: every b in C^A sees all ", r.ell, " indices");
  for (const Structure& b : bs) {
    const int types = MinOrderTypes(a, b);
    if (types > r.copy_lower) {
      r.copy_lower = types;
      r.copy_lower_certificate =
          absl::StrCat("order-type coloring: every order of B = [",
                       FormatStructureLiteral(b), "] shows ", types,
                       " types of A");
    }
    const int pulls = MinPullbacks(a, b);
    if (pulls > r.emb_lower) {
      r.emb_lower = pulls;
      r.emb_lower_certificate =
          absl::StrCat("pulled-back order coloring: every order of B = [",
                       FormatStructureLiteral(b), "] pulls back to ", pulls,
                       " orders of A");
    }
  }

  absl::StatusOr<UpperSearch> copy_up = SearchUpper(
      spec, a, bs, r.copy_lower, ArrowMode::kCopies, caps, options);
  if (!copy_up.ok()) return copy_up.status();
  r.budget_hit |= copy_up->budget_hit;
  if (copy_up->d) {
    r.copy_upper = copy_up->d;
    r.copy_upper_source = "witnesses";
    r.copy_witnesses = std::move(copy_up->witnesses);
  }
  absl::StatusOr<UpperSearch> emb_up = SearchUpper(
      spec, a, bs, r.emb_lower, ArrowMode::kEmbeddings, caps, options);
  if (!emb_up.ok()) return emb_up.status();
  r.budget_hit |= emb_up->budget_hit;
  if (emb_up->d) {
    r.emb_upper = emb_up->d;
    r.emb_upper_source = "witnesses";
    r.emb_witnesses = std::move(emb_up->witnesses);
  }

  // Transfers through "embedding degree <= d * ell iff copy degree <= d".
  if (r.copy_upper && (!r.emb_upper || *r.copy_upper * r.ell < *r.emb_upper)) {
    r.emb_upper = *r.copy_upper * r.ell;
    r.emb_upper_source = "copy upper bound times ell";
  }
  if (r.emb_upper &&
      (!r.copy_upper || CeilDiv(*r.emb_upper, r.ell) < *r.copy_upper)) {
    r.copy_upper = CeilDiv(*r.emb_upper, r.ell);
    r.copy_upper_source = "embedding upper bound over ell";
  }
  const int from_copy = (r.copy_lower - 1) * r.ell + 1;
  if (from_copy > r.emb_lower) {
    r.emb_lower = from_copy;
    r.emb_lower_certificate = "copy lower bound through the ell-factor law";
  }
  const int from_emb = CeilDiv(r.emb_lower, r.ell);
  if (from_emb > r.copy_lower) {
    r.copy_lower = from_emb;
    r.copy_lower_certificate =
        "embedding lower bound through the ell-factor law";
  }

  if (expansion != nullptr &&
      a.signature() == expansion->base->signature()) {
    absl::StatusOr<ExpansionCount> count = CountExpansions(a, *expansion);
    if (!count.ok()) return count.status();
    r.expansion_count = count->isomorphism_classes;
  }
  if (absl::Status s = CheckDegreeRecord(r); !s.ok()) return s;
  return r;
}

absl::Status CheckDegreeRecord(const DegreeRecord& r) {
  if (r.copy_upper && *r.copy_upper < r.copy_lower) {
    return absl::InternalError(absl::StrCat("copy bounds inverted: [",
                                            r.copy_lower, ",", *r.copy_upper,
                                            "]"));
  }
  if (r.emb_upper && *r.emb_upper < r.emb_lower) {
    return absl::InternalError(absl::StrCat("embedding bounds inverted: [",
                                            r.emb_lower, ",", *r.emb_upper,
                                            "]"));
  }
  if (r.emb_lower < r.ell) {
    return absl::InternalError("embedding lower bound below |Aut(A)|");
  }
  if (r.copy_upper && r.emb_lower > *r.copy_upper * r.ell) {
    return absl::InternalError(
        "embedding lower bound exceeds copy upper bound times ell");
  }
  if (r.emb_upper && (r.copy_lower - 1) * r.ell >= *r.emb_upper) {
    return absl::InternalError(
        "copy lower bound incompatible with embedding upper bound");
  }
  return absl::OkStatus();
}

std::string FormatDegreeLine(const DegreeRecord& r) {
  auto hi = [](const std::optional<int>& x) {
    return x ? absl::StrCat(*x) : std::string("?");
  };
  return absl::StrCat(
      "A=", HexDigest(r.hash), " copy=[", r.copy_lower, ",", hi(r.copy_upper),
      "] emb=[", r.emb_lower, ",", hi(r.emb_upper), "] exp=",
      r.expansion_count ? absl::StrCat(*r.expansion_count) : "n/a");
}

bool IsPowerOfTwo(int64_t x) { return x > 0 && (x & (x - 1)) == 0; }

AuditReport PowerOfTwoAudit(const std::vector<DegreeRecord>& records) {
  struct Sizes {
    std::map<int, int> lower;                 // max emb_lower per size
    std::map<int, std::optional<int>> exact;  // max exact degree per size
  };
  std::map<std::string, Sizes> by_class;
  for (const DegreeRecord& r : records) {
    Sizes& s = by_class[r.class_name];
    int& lower = s.lower[r.a.size()];
    lower = std::max(lower, r.emb_lower);
    std::optional<int>& slot = s.exact[r.a.size()];
    if (r.Exact()) slot = std::max(slot.value_or(0), *r.emb_upper);
  }
  AuditReport report;
  for (const auto& [name, sizes] : by_class) {
    AuditRow row;
    row.class_name = name;
    row.audited_up_to = sizes.lower.rbegin()->first;
    row.max_exact_by_size.assign(row.audited_up_to + 1, std::nullopt);
    for (const auto& [size, value] : sizes.exact) {
      row.max_exact_by_size[size] = value;
    }
    // Lower bounds still rising at the largest audited size mean the
    // supremum is not established.
    int below = 0;
    for (const auto& [size, lower] : sizes.lower) {
      if (size != row.audited_up_to) below = std::max(below, lower);
    }
    row.growing = sizes.lower.size() > 1 &&
                  sizes.lower.rbegin()->second > below;
    std::optional<int> best;
    for (const auto& [size, value] : sizes.exact) {
      if (value) best = std::max(best.value_or(0), *value);
    }
    if (!row.growing && best) {
      row.class_degree = best;
      row.flagged = !IsPowerOfTwo(*best);
    }
    if (row.flagged) report.pass = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace ramseykit
