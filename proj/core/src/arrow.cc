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

#include "ramseykit/arrow.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "ramseykit/embedding.h"

namespace ramseykit {
namespace {

using Object = std::vector<int>;

struct Problem {
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<std::vector<int>> edges;
  std::vector<std::vector<int>> incident;
  // perms[g][i]: index of the image of object i under automorphism g.
  std::vector<std::vector<int>> perms;
};

absl::Status CheckQuery(const ArrowQuery& q) {
  if (absl::Status s = CheckSameSignature(q.a, q.c); !s.ok()) return s;
  if (absl::Status s = CheckSameSignature(q.b, q.c); !s.ok()) return s;
  if (q.k < 1) return absl::InvalidArgumentError("k must be at least 1");
  if (q.d < 0) return absl::InvalidArgumentError("d must be nonnegative");
  if (q.k > 64) return absl::InvalidArgumentError("k above 64 unsupported");
  return absl::OkStatus();
}

Object MapObject(const Embedding& map, ArrowMode mode) {
  if (mode == ArrowMode::kEmbeddings) return map;
  Object image = map;
  std::sort(image.begin(), image.end());
  return image;
}

// Object images under automorphism g.
Object ApplyAut(const Embedding& g, const Object& obj, ArrowMode mode) {
  Object out(obj.size());
  for (size_t i = 0; i < obj.size(); ++i) out[i] = g[obj[i]];
  if (mode == ArrowMode::kCopies) std::sort(out.begin(), out.end());
  return out;
}

// Incremental coloring state with the d + 1 color requirement on edges.
class Solver {
 public:
  explicit Solver(const Problem& p)
      : p_(p),
        color_(p.n, -1),
        max_prefix_(p.n + 1, -1),
        cnt_(p.edges.size() * p.k, 0),
        distinct_(p.edges.size(), 0),
        uncolored_(p.edges.size(), 0) {
    for (size_t e = 0; e < p.edges.size(); ++e) {
      uncolored_[e] = static_cast<int>(p.edges[e].size());
    }
  }

  bool Assign(int v, int c) {
    color_[v] = c;
    max_prefix_[v + 1] = std::max(max_prefix_[v], c);
    for (int e : p_.incident[v]) {
      --uncolored_[e];
      if (cnt_[e * p_.k + c]++ == 0) ++distinct_[e];
    }
    for (int e : p_.incident[v]) {
      if (distinct_[e] + uncolored_[e] < p_.d + 1) {
        Unassign(v);
        return false;
      }
    }
    return true;
  }

  void Unassign(int v) {
    const int c = color_[v];
    for (int e : p_.incident[v]) {
      ++uncolored_[e];
      if (--cnt_[e * p_.k + c] == 0) --distinct_[e];
    }
    color_[v] = -1;
  }

  // False when some automorphism maps the first `len` colors to a
  // lexicographically smaller normalized prefix.
  bool LexLeader(int len) const {
    int remap[64];
    for (const std::vector<int>& perm : p_.perms) {
      std::fill(remap, remap + p_.k, -1);
      int next = 0;
      for (int i = 0; i < len; ++i) {
        const int j = perm[i];
        if (j >= len) break;
        int& m = remap[color_[j]];
        if (m < 0) m = next++;
        if (m < color_[i]) return false;
        if (m > color_[i]) break;
      }
    }
    return true;
  }

  int MaxColorBefore(int v) const { return max_prefix_[v]; }
  const std::vector<int>& colors() const { return color_; }

 private:
  const Problem& p_;
  std::vector<int> color_;
  std::vector<int> max_prefix_;
  std::vector<uint8_t> cnt_;
  std::vector<int> distinct_;
  std::vector<int> uncolored_;
};

struct TaskResult {
  bool found = false;
  bool exhausted = false;
  int64_t nodes = 0;
  std::vector<int> coloring;
};

class Explorer {
 public:
  // The search stops when `stop` is raised or a task with a smaller index
  // than `task` has succeeded.
  Explorer(const Problem& p, int64_t cap, const std::atomic<bool>* stop,
           const std::atomic<size_t>* best = nullptr, size_t task = 0)
      : p_(p), solver_(p), cap_(cap), stop_(stop), best_(best), task_(task) {}

  // Applies a prefix already known to be consistent.
  void Apply(const std::vector<int>& prefix) {
    for (size_t v = 0; v < prefix.size(); ++v) solver_.Assign(v, prefix[v]);
  }

  TaskResult Run(int from) {
    TaskResult r;
    r.found = Dfs(from);
    r.exhausted = exhausted_;
    r.nodes = nodes_;
    if (r.found) r.coloring = solver_.colors();
    return r;
  }

  // Children of the current prefix of length v that survive pruning.
  std::vector<int> Children(int v) {
    std::vector<int> out;
    const int limit = std::min(p_.k - 1, solver_.MaxColorBefore(v) + 1);
    for (int c = 0; c <= limit; ++c) {
      ++nodes_;
      if (!solver_.Assign(v, c)) continue;
      if (solver_.LexLeader(v + 1)) out.push_back(c);
      solver_.Unassign(v);
    }
    return out;
  }

  int64_t nodes() const { return nodes_; }

 private:
  bool Dfs(int v) {
    if (v == p_.n) return true;
    if (stop_ != nullptr && stop_->load(std::memory_order_relaxed)) {
      return false;
    }
    if (best_ != nullptr && best_->load(std::memory_order_relaxed) < task_) {
      return false;
    }
    const int limit = std::min(p_.k - 1, solver_.MaxColorBefore(v) + 1);
    for (int c = 0; c <= limit; ++c) {
      if (++nodes_ > cap_) {
        exhausted_ = true;
        return false;
      }
      if (!solver_.Assign(v, c)) continue;
      if (solver_.LexLeader(v + 1) && Dfs(v + 1)) return true;
      solver_.Unassign(v);
      if (exhausted_) return false;
    }
    return false;
  }

  const Problem& p_;
  Solver solver_;
  int64_t cap_;
  const std::atomic<bool>* stop_;
  const std::atomic<size_t>* best_;
  size_t task_;
  int64_t nodes_ = 0;
  bool exhausted_ = false;
};

constexpr size_t kMinTasks = 64;

struct SearchOutcome {
  ArrowVerdict verdict = ArrowVerdict::kHolds;
  std::vector<int> coloring;
  int64_t nodes = 0;
  int tasks = 0;
};

SearchOutcome Search(const Problem& p, const ArrowOptions& options) {
  SearchOutcome out;
  // Split into prefixes of one fixed depth; the split never depends on the
  // thread count, so neither do the node totals.
  std::vector<std::vector<int>> prefixes = {{}};
  int depth = 0;
  int64_t gen_nodes = 0;
  while (depth < p.n && prefixes.size() < kMinTasks && !prefixes.empty()) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& prefix : prefixes) {
      Explorer ex(p, options.budget, nullptr);
      ex.Apply(prefix);
      for (int c : ex.Children(depth)) {
        next.push_back(prefix);
        next.back().push_back(c);
      }
      gen_nodes += ex.nodes();
    }
    prefixes = std::move(next);
    ++depth;
  }
  out.tasks = static_cast<int>(prefixes.size());
  if (gen_nodes > options.budget) {
    out.verdict = ArrowVerdict::kUndecided;
    out.nodes = gen_nodes;
    return out;
  }

  const int64_t cap = options.budget - gen_nodes;
  const size_t t = prefixes.size();
  std::vector<TaskResult> results(t);
  std::vector<bool> done(t, false);
  std::atomic<size_t> next_task{0};
  std::atomic<size_t> best{t};
  std::atomic<bool> abort{false};
  std::mutex mu;
  size_t frontier = 0;
  int64_t frontier_nodes = gen_nodes;

  auto worker = [&]() {
    while (!abort.load()) {
      const size_t i = next_task.fetch_add(1);
      if (i >= t || i > best.load()) return;
      Explorer ex(p, cap, &abort, &best, i);
      ex.Apply(prefixes[i]);
      TaskResult r = ex.Run(depth);
      std::lock_guard<std::mutex> lock(mu);
      if (r.found) {
        size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
      results[i] = std::move(r);
      done[i] = true;
      while (frontier < t && done[frontier]) {
        frontier_nodes += results[frontier].nodes;
        if (results[frontier].found) break;
        if (frontier_nodes > options.budget) {
          abort.store(true);
          break;
        }
        ++frontier;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(options.threads, t));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  int64_t total = gen_nodes;
  for (size_t i = 0; i < t; ++i) {
    total += results[i].nodes;
    if (total > options.budget || results[i].exhausted) {
      out.verdict = ArrowVerdict::kUndecided;
      out.nodes = std::min(total, options.budget + 1);
      return out;
    }
    if (results[i].found) {
      out.verdict = ArrowVerdict::kFails;
      out.coloring = std::move(results[i].coloring);
      out.nodes = total;
      return out;
    }
  }
  out.verdict = ArrowVerdict::kHolds;
  out.nodes = total;
  return out;
}

}  // namespace

const char* ArrowModeName(ArrowMode mode) {
  return mode == ArrowMode::kCopies ? "copies" : "embeddings";
}

absl::StatusOr<ArrowMode> ParseArrowMode(std::string_view name) {
  if (name == "copies") return ArrowMode::kCopies;
  if (name == "embeddings") return ArrowMode::kEmbeddings;
  return absl::InvalidArgumentError(absl::StrCat(
      "mode must be 'copies' or 'embeddings', got '", std::string(name), "'"));
}

const char* ArrowVerdictName(ArrowVerdict v) {
  switch (v) {
    case ArrowVerdict::kHolds:
      return "holds";
    case ArrowVerdict::kFails:
      return "fails";
    case ArrowVerdict::kUndecided:
      return "undecided";
  }
  return "undecided";
}

absl::StatusOr<std::vector<std::vector<int>>> ArrowObjects(
    const Structure& a, const Structure& c, ArrowMode mode) {
  if (mode == ArrowMode::kCopies) return Copies(a, c);
  return Embeddings(a, c);
}

absl::StatusOr<ArrowCertificate> CheckArrow(const ArrowQuery& q,
                                            const ArrowOptions& options) {
  if (absl::Status s = CheckQuery(q); !s.ok()) return s;
  if (options.budget < 1) {
    return absl::InvalidArgumentError("budget must be at least 1");
  }
  ArrowCertificate cert;
  cert.stats.budget = options.budget;
  absl::StatusOr<std::vector<Object>> objects = ArrowObjects(q.a, q.c, q.mode);
  if (!objects.ok()) return objects.status();
  cert.objects = *std::move(objects);

  Problem p;
  p.n = static_cast<int>(cert.objects.size());
  p.k = q.k;
  p.d = q.d;
  std::map<Object, int> index;
  for (int i = 0; i < p.n; ++i) index.emplace(cert.objects[i], i);

  const std::vector<Embedding> inner = EmbeddingSearch(q.a, q.b).All();
  std::set<std::vector<int>> edges;
  std::set<Subset> seen_images;
  EmbeddingSearch(q.b, q.c).ForEach([&](const Embedding& b) {
    if (q.mode == ArrowMode::kCopies && !seen_images.insert(
            MapObject(b, ArrowMode::kCopies)).second) {
      return true;
    }
    std::vector<int> edge;
    for (const Embedding& e : inner) {
      edge.push_back(index.at(MapObject(Compose(b, e), q.mode)));
    }
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    edges.insert(std::move(edge));
    return true;
  });

  if (edges.empty()) {
    cert.verdict = ArrowVerdict::kFails;
    cert.coloring.assign(p.n, 0);
    cert.reason = "B does not embed into C";
    return cert;
  }
  for (const std::vector<int>& e : edges) {
    if (static_cast<int>(e.size()) <= q.d) {
      cert.verdict = ArrowVerdict::kHolds;
      cert.reason = "some B-object of C contains at most d A-objects";
      return cert;
    }
  }
  if (q.d >= q.k) {
    cert.verdict = ArrowVerdict::kHolds;
    cert.reason = "d >= k";
    return cert;
  }

  p.edges.assign(edges.begin(), edges.end());
  p.incident.assign(p.n, {});
  for (size_t e = 0; e < p.edges.size(); ++e) {
    for (int v : p.edges[e]) p.incident[v].push_back(static_cast<int>(e));
  }
  int64_t aut_seen = 0;
  cert.stats.aut_complete = true;
  EmbeddingSearch(q.c, q.c).ForEach([&](const Embedding& g) {
    if (aut_seen >= options.symmetry_cap) {
      cert.stats.aut_complete = false;
      return false;
    }
    ++aut_seen;
    if (g == IdentityMap(q.c.size())) return true;
    std::vector<int> perm(p.n);
    for (int i = 0; i < p.n; ++i) {
      perm[i] = index.at(ApplyAut(g, cert.objects[i], q.mode));
    }
    p.perms.push_back(std::move(perm));
    return true;
  });
  cert.stats.aut_used = aut_seen;

  SearchOutcome outcome = Search(p, options);
  cert.verdict = outcome.verdict;
  cert.coloring = std::move(outcome.coloring);
  cert.stats.nodes = outcome.nodes;
  cert.stats.tasks = outcome.tasks;
  return cert;
}

absl::StatusOr<bool> VerifyBadColoring(const ArrowQuery& q,
                                       const std::vector<int>& coloring) {
  if (absl::Status s = CheckQuery(q); !s.ok()) return s;
  absl::StatusOr<std::vector<Object>> objects = ArrowObjects(q.a, q.c, q.mode);
  if (!objects.ok()) return objects.status();
  if (coloring.size() != objects->size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "coloring has ", coloring.size(), " entries for ", objects->size(),
        " objects"));
  }
  for (int c : coloring) {
    if (c < 0 || c >= q.k) {
      return absl::InvalidArgumentError(
          absl::StrCat("color ", c, " outside [0, ", q.k, ")"));
    }
  }
  std::map<Object, int> color;
  for (size_t i = 0; i < objects->size(); ++i) {
    color.emplace((*objects)[i], coloring[i]);
  }
  const std::vector<Embedding> inner = EmbeddingSearch(q.a, q.b).All();
  bool bad = true;
  EmbeddingSearch(q.b, q.c).ForEach([&](const Embedding& b) {
    std::set<int> used;
    for (const Embedding& e : inner) {
      used.insert(color.at(MapObject(Compose(b, e), q.mode)));
    }
    if (static_cast<int>(used.size()) <= q.d) bad = false;
    return bad;
  });
  return bad;
}

std::string FormatCertificate(const ArrowQuery& q,
                              const ArrowCertificate& cert) {
  std::string out = absl::StrCat("verdict: ", ArrowVerdictName(cert.verdict),
                                 "\n");
  absl::StrAppend(&out, "query: mode=", ArrowModeName(q.mode), " k=", q.k,
                  " d=", q.d, " |C|=", q.c.size(), " |B|=", q.b.size(),
                  " |A|=", q.a.size(), "\n");
  absl::StrAppend(&out, "objects: ", cert.objects.size(), "\n");
  absl::StrAppend(&out, "stats: nodes=", cert.stats.nodes,
                  " budget=", cert.stats.budget,
                  " aut_used=", cert.stats.aut_used,
                  " aut_complete=", cert.stats.aut_complete ? 1 : 0,
                  " tasks=", cert.stats.tasks, "\n");
  if (!cert.reason.empty()) absl::StrAppend(&out, "reason: ", cert.reason, "\n");
  if (cert.verdict == ArrowVerdict::kFails) {
    absl::StrAppend(&out, "coloring:\n");
    const bool copies = q.mode == ArrowMode::kCopies;
    for (size_t i = 0; i < cert.objects.size(); ++i) {
      absl::StrAppend(&out, "  ", copies ? "{" : "(",
                      absl::StrJoin(cert.objects[i], ","), copies ? "}" : ")",
                      " -> ", cert.coloring[i], "\n");
    }
  }
  return out;
}

absl::StatusOr<bool> ModesAgreeOnRigid(const ArrowQuery& q,
                                       const ArrowOptions& options) {
  if (Automorphisms(q.a).size() != 1) {
    return absl::FailedPreconditionError("A is not rigid");
  }
  ArrowQuery copies = q;
  copies.mode = ArrowMode::kCopies;
  ArrowQuery embeddings = q;
  embeddings.mode = ArrowMode::kEmbeddings;
  absl::StatusOr<ArrowCertificate> x = CheckArrow(copies, options);
  if (!x.ok()) return x.status();
  absl::StatusOr<ArrowCertificate> y = CheckArrow(embeddings, options);
  if (!y.ok()) return y.status();
  if (x->verdict == ArrowVerdict::kUndecided ||
      y->verdict == ArrowVerdict::kUndecided) {
    return absl::ResourceExhaustedError("undecided: budget");
  }
  return x->verdict == y->verdict;
}

absl::StatusOr<WitnessResult> FindWitness(const ClassSpec& spec,
                                          const Structure& b,
                                          const Structure& a, int k, int d,
                                          ArrowMode mode, int cap,
                                          const ArrowOptions& options) {
  for (const Structure* s : {&b, &a}) {
    absl::StatusOr<bool> in = spec.Contains(*s);
    if (!in.ok()) return in.status();
    if (!*in) {
      return absl::InvalidArgumentError(
          absl::StrCat("structure is not a member of ", spec.name()));
    }
  }
  WitnessResult result;
  result.cap = cap;
  for (int m = b.size(); m <= cap; ++m) {
    absl::StatusOr<std::vector<Structure>> level = spec.MembersOfSize(m);
    if (!level.ok()) return level.status();
    for (const Structure& c : *level) {
      ++result.members_checked;
      absl::StatusOr<ArrowCertificate> cert =
          CheckArrow({c, b, a, k, d, mode}, options);
      if (!cert.ok()) return cert.status();
      result.nodes += cert->stats.nodes;
      if (cert->verdict == ArrowVerdict::kUndecided) {
        return absl::ResourceExhaustedError(absl::StrCat(
            "undecided: budget ", options.budget, " exhausted on a member of "
            "size ", m));
      }
      if (cert->verdict == ArrowVerdict::kHolds) {
        result.witness = c;
        return result;
      }
    }
  }
  return result;
}

WitnessOracle SearchOracle(const ClassSpec& spec, int cap,
                           const ArrowOptions& options) {
  return [&spec, cap, options](const Structure& b, const Structure& a,
                               int k) -> absl::StatusOr<std::optional<Structure>> {
    absl::StatusOr<WitnessResult> r =
        FindWitness(spec, b, a, k, 1, ArrowMode::kCopies, cap, options);
    if (!r.ok()) return r.status();
    return r->witness;
  };
}

absl::StatusOr<ChainResult> ChainWitness(const Structure& b,
                                         const std::vector<ChainPart>& parts,
                                         const WitnessOracle& oracle,
                                         int samples, uint64_t seed) {
  ChainResult result;
  result.chain.push_back(b);
  for (size_t i = 0; i < parts.size(); ++i) {
    absl::StatusOr<std::optional<Structure>> next =
        oracle(result.chain.back(), parts[i].a, parts[i].k);
    std::string sizes;
    for (const Structure& s : result.chain) {
      absl::StrAppend(&sizes, sizes.empty() ? "" : ", ", s.size());
    }
    if (!next.ok()) {
      return absl::Status(next.status().code(),
                          absl::StrCat("oracle failed at step ", i,
                                       " (partial chain sizes: ", sizes,
                                       "): ", next.status().message()));
    }
    if (!next->has_value()) {
      return absl::NotFoundError(
          absl::StrCat("oracle found no witness at step ", i,
                       " (partial chain sizes: ", sizes, ")"));
    }
    result.chain.push_back(**std::move(next));
  }

  const Structure& c = result.chain.back();
  // Per part: the A_i-copies of C, and for each B-copy the indices of the
  // A_i-copies inside it.
  std::vector<int> object_counts;
  std::vector<std::vector<std::vector<int>>> inside;
  absl::StatusOr<std::vector<Subset>> b_copies = Copies(b, c);
  if (!b_copies.ok()) return b_copies.status();
  std::vector<Embedding> b_maps;
  for (const Subset& s : *b_copies) {
    b_maps.push_back(*EmbeddingSearch(b, c).First({}, ToMask(s)));
  }
  for (const ChainPart& part : parts) {
    absl::StatusOr<std::vector<Subset>> copies = Copies(part.a, c);
    if (!copies.ok()) return copies.status();
    std::map<Subset, int> index;
    for (size_t j = 0; j < copies->size(); ++j) index.emplace((*copies)[j], j);
    const std::vector<Embedding> inner = EmbeddingSearch(part.a, b).All();
    std::vector<std::vector<int>> per_copy;
    for (const Embedding& bm : b_maps) {
      std::set<int> ids;
      for (const Embedding& e : inner) {
        ids.insert(index.at(MapObject(Compose(bm, e), ArrowMode::kCopies)));
      }
      per_copy.emplace_back(ids.begin(), ids.end());
    }
    object_counts.push_back(static_cast<int>(copies->size()));
    inside.push_back(std::move(per_copy));
  }

  std::mt19937_64 rng(seed);
  result.samples = samples;
  for (int s = 0; s < samples; ++s) {
    std::vector<std::vector<int>> chi(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
      std::uniform_int_distribution<int> dist(0, parts[i].k - 1);
      chi[i].resize(object_counts[i]);
      for (int& x : chi[i]) x = dist(rng);
    }
    bool verified = false;
    for (size_t bc = 0; bc < b_maps.size() && !verified; ++bc) {
      bool constant = true;
      for (size_t i = 0; i < parts.size() && constant; ++i) {
        const std::vector<int>& ids = inside[i][bc];
        for (int id : ids) {
          if (chi[i][id] != chi[i][ids.front()]) {
            constant = false;
            break;
          }
        }
      }
      verified = constant;
    }
    if (verified) ++result.samples_verified;
  }
  return result;
}

}  // namespace ramseykit
