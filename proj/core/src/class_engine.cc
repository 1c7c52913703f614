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

#include "ramseykit/class_engine.h"

#include <algorithm>
#include <map>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ramseykit {
namespace {

// Embeddings of a into b that are lexicographically least among their
// post-compositions with automorphisms of b.
std::vector<Embedding> OrbitRepresentatives(const Structure& a,
                                            const Structure& b) {
  const std::vector<Embedding> aut = Automorphisms(b);
  std::vector<Embedding> reps;
  for (const Embedding& e : EmbeddingSearch(a, b).All()) {
    bool least = true;
    for (const Embedding& g : aut) {
      if (Compose(g, e) < e) {
        least = false;
        break;
      }
    }
    if (least) reps.push_back(e);
  }
  return reps;
}

// The embedding e of `from` into c with e o via = target, if any.
std::optional<Embedding> Factor(const Structure& from, const Structure& c,
                                const Embedding& via,
                                const Embedding& target) {
  std::vector<int> partial(from.size(), -1);
  for (size_t x = 0; x < via.size(); ++x) partial[via[x]] = target[x];
  return EmbeddingSearch(from, c).First(partial);
}

std::optional<std::pair<Embedding, Embedding>> AmalgamIn(
    const Structure& c, const AmalgamationProblem& p) {
  std::optional<std::pair<Embedding, Embedding>> found;
  EmbeddingSearch(p.b0, c).ForEach([&](const Embedding& e0) {
    std::optional<Embedding> e1 = Factor(p.b1, c, p.a1, Compose(e0, p.a0));
    if (!e1) return true;
    found.emplace(e0, *std::move(e1));
    return false;
  });
  return found;
}

}  // namespace

const char* SearchVerdictName(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::kPass:
      return "pass";
    case SearchVerdict::kRefuted:
      return "fail";
    case SearchVerdict::kUnknownUpToCap:
      return "unknown-up-to-cap";
  }
  return "unknown";
}

absl::StatusOr<std::vector<CanonicalForm>> Members(const ClassSpec& spec,
                                                   int n) {
  if (n < 0 || n > kMaxUniverse) {
    return absl::OutOfRangeError(
        absl::StrCat("size ", n, " exceeds the cap of ", kMaxUniverse));
  }
  std::vector<CanonicalForm> out;
  for (int m = 0; m <= n; ++m) {
    absl::StatusOr<std::vector<Structure>> level = spec.MembersOfSize(m);
    if (!level.ok()) return level.status();
    for (const Structure& s : *level) {
      out.push_back({s, IdentityMap(m), StructureDigest(s)});
    }
  }
  return out;
}

absl::StatusOr<std::optional<Amalgam>> FindAmalgam(
    const ClassSpec& spec, const AmalgamationProblem& problem, int cap) {
  if (!IsEmbedding(problem.a, problem.b0, problem.a0) ||
      !IsEmbedding(problem.a, problem.b1, problem.a1)) {
    return absl::InvalidArgumentError("a0 or a1 is not an embedding");
  }
  const int lo = std::max(problem.b0.size(), problem.b1.size());
  const int hi = std::min(
      cap, problem.b0.size() + problem.b1.size() - problem.a.size());
  for (int m = lo; m <= hi; ++m) {
    absl::StatusOr<std::vector<Structure>> level = spec.MembersOfSize(m);
    if (!level.ok()) return level.status();
    for (const Structure& c : *level) {
      if (auto found = AmalgamIn(c, problem)) {
        return Amalgam{c, std::move(found->first), std::move(found->second)};
      }
    }
  }
  return std::optional<Amalgam>();
}

absl::StatusOr<std::optional<JointEmbedding>> FindJointEmbedding(
    const ClassSpec& spec, const Structure& b0, const Structure& b1,
    int cap) {
  const int hi = std::min(cap, b0.size() + b1.size());
  for (int m = std::max(b0.size(), b1.size()); m <= hi; ++m) {
    absl::StatusOr<std::vector<Structure>> level = spec.MembersOfSize(m);
    if (!level.ok()) return level.status();
    for (const Structure& c : *level) {
      std::optional<Embedding> e0 = EmbeddingSearch(b0, c).First();
      if (!e0) continue;
      std::optional<Embedding> e1 = EmbeddingSearch(b1, c).First();
      if (!e1) continue;
      return JointEmbedding{c, *std::move(e0), *std::move(e1)};
    }
  }
  return std::optional<JointEmbedding>();
}

absl::StatusOr<ClassReport> CheckJepAp(const ClassSpec& spec, int n,
                                       int witness_cap) {
  if (n < 0 || witness_cap < n || witness_cap > kMaxUniverse) {
    return absl::InvalidArgumentError(absl::StrCat(
        "need 0 <= n <= witness_cap <= ", kMaxUniverse, ", got n=", n,
        " witness_cap=", witness_cap));
  }
  ClassReport report;
  report.checked_size = n;
  report.witness_cap = witness_cap;
  std::vector<Structure> small;
  for (int m = 0; m <= n; ++m) {
    absl::StatusOr<std::vector<Structure>> level = spec.MembersOfSize(m);
    if (!level.ok()) return level.status();
    report.member_counts.push_back(static_cast<int>(level->size()));
    small.insert(small.end(), level->begin(), level->end());
  }

  for (size_t i = 0; i < small.size() && report.jep == SearchVerdict::kPass;
       ++i) {
    for (size_t j = i; j < small.size(); ++j) {
      absl::StatusOr<std::optional<JointEmbedding>> joint =
          FindJointEmbedding(spec, small[i], small[j], witness_cap);
      if (!joint.ok()) return joint.status();
      if (joint->has_value()) continue;
      report.jep = witness_cap >= small[i].size() + small[j].size()
                       ? SearchVerdict::kRefuted
                       : SearchVerdict::kUnknownUpToCap;
      report.jep_counterexample.emplace(small[i], small[j]);
      break;
    }
  }

  for (const Structure& a : small) {
    for (size_t i = 0; i < small.size(); ++i) {
      const std::vector<Embedding> a0s = OrbitRepresentatives(a, small[i]);
      if (a0s.empty()) continue;
      for (size_t j = i; j < small.size(); ++j) {
        const std::vector<Embedding> a1s = OrbitRepresentatives(a, small[j]);
        for (const Embedding& a0 : a0s) {
          for (const Embedding& a1 : a1s) {
            AmalgamationProblem p{a, small[i], small[j], a0, a1};
            absl::StatusOr<std::optional<Amalgam>> found =
                FindAmalgam(spec, p, witness_cap);
            if (!found.ok()) return found.status();
            if (found->has_value()) continue;
            report.ap = witness_cap >= p.b0.size() + p.b1.size() - a.size()
                            ? SearchVerdict::kRefuted
                            : SearchVerdict::kUnknownUpToCap;
            report.ap_counterexample = std::move(p);
            return report;
          }
        }
      }
    }
  }
  return report;
}

absl::StatusOr<std::pair<Embedding, Embedding>> AmalgamateViaArrow(
    const Structure& c, const AmalgamationProblem& problem,
    const JointEmbedding& joint) {
  const AmalgamationProblem& p = problem;
  if (!IsEmbedding(p.a, p.b0, p.a0) || !IsEmbedding(p.a, p.b1, p.a1)) {
    return absl::InvalidArgumentError("a0 or a1 is not an embedding");
  }
  if (!IsEmbedding(p.b0, joint.b, joint.b0) ||
      !IsEmbedding(p.b1, joint.b, joint.b1)) {
    return absl::InvalidArgumentError(
        "joint witness does not embed both B0 and B1");
  }
  if (absl::Status s = CheckSameSignature(p.a, c); !s.ok()) return s;

  // chi(a) as a bit set over {0, 1}.
  std::map<Embedding, int> chi;
  EmbeddingSearch(p.a, c).ForEach([&](const Embedding& a) {
    int color = 0;
    if (Factor(p.b0, c, p.a0, a)) color |= 1;
    if (Factor(p.b1, c, p.a1, a)) color |= 2;
    chi.emplace(a, color);
    return true;
  });

  const std::vector<Embedding> in_b = EmbeddingSearch(p.a, joint.b).All();
  std::optional<Embedding> mono;
  EmbeddingSearch(joint.b, c).ForEach([&](const Embedding& b) {
    int color = -1;
    for (const Embedding& e : in_b) {
      const int ce = chi.at(Compose(b, e));
      if (color >= 0 && ce != color) return true;
      color = ce;
    }
    mono = b;
    return false;
  });
  if (!mono) {
    return absl::FailedPreconditionError(
        "witness not Ramsey enough: no copy of B in C is monochromatic for "
        "the factorization coloring");
  }
  Embedding e0 = Compose(*mono, joint.b0);
  std::optional<Embedding> e1 = Factor(p.b1, c, p.a1, Compose(e0, p.a0));
  if (!e1) {
    return absl::InternalError(
        "monochromatic class does not contain both factorizations");
  }
  return std::make_pair(std::move(e0), *std::move(e1));
}

}  // namespace ramseykit
