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


#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "cache.h"
#include "ramseykit/arrow.h"
#include "ramseykit/canonical.h"
#include "ramseykit/class_engine.h"
#include "ramseykit/class_spec_io.h"
#include "ramseykit/degree.h"
#include "ramseykit/embedding.h"
#include "ramseykit/ergodic.h"
#include "ramseykit/expansion.h"
#include "ramseykit/named_structures.h"
#include "ramseykit/presets.h"
#include "ramseykit/structure_io.h"

#ifndef RAMSEYKIT_VERSION
#define RAMSEYKIT_VERSION "unknown"
#endif

#define RK_CONCAT_INNER(a, b) a##b
#define RK_CONCAT(a, b) RK_CONCAT_INNER(a, b)
#define RK_ASSIGN_OR_RETURN_IMPL(tmp, lhs, expr) \
  auto tmp = (expr);                             \
  if (!tmp.ok()) return tmp.status();            \
  lhs = *std::move(tmp)
#define ASSIGN_OR_RETURN(lhs, expr) \
  RK_ASSIGN_OR_RETURN_IMPL(RK_CONCAT(status_or_, __LINE__), lhs, expr)

namespace ramseykit::cli {
namespace {

namespace fs = std::filesystem;

using Fields = std::vector<std::pair<std::string, std::string>>;

int ExitFor(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kResourceExhausted:
      return kExitUndecided;
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kOutOfRange:
    case absl::StatusCode::kFailedPrecondition:
      return kExitInput;
    default:
      return kExitInternal;
  }
}

std::string TextDigest(const std::string& text) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return HexDigest(h);
}

void AddLines(std::vector<std::string>& out, const std::string& text) {
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    if (!line.empty()) out.emplace_back(line);
  }
}

std::string OneLine(const Structure& s) { return FormatStructureLiteral(s); }

std::string Join(const std::vector<int>& v) { return absl::StrJoin(v, ","); }

int Cap(const RunConfig& c, int fallback) {
  return c.cap > 0 ? c.cap : fallback;
}

ArrowOptions Options(const RunConfig& c) {
  ArrowOptions o;
  o.budget = c.budget;
  o.threads = c.threads;
  return o;
}

absl::StatusOr<std::shared_ptr<const ClassSpec>> ResolveClass(
    const std::string& arg, ResultRecord& rec) {
  if (arg.empty()) return absl::InvalidArgumentError("--class is required");
  std::shared_ptr<const ClassSpec> spec;
  absl::StatusOr<std::shared_ptr<const ClassSpec>> preset = PresetClass(arg);
  if (preset.ok()) {
    spec = *preset;
  } else {
    std::error_code ec;
    if (!fs::is_regular_file(arg, ec)) {
      return absl::NotFoundError(absl::StrCat(
          "unknown class ", arg, "; presets: ",
          absl::StrJoin(PresetClassNames(), ", ")));
    }
    ASSIGN_OR_RETURN(std::string text, ReadFile(arg));
    absl::StatusOr<std::shared_ptr<const ClassSpec>> parsed =
        ParseClassSpec(text);
    if (!parsed.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat(arg, ": ", std::string(parsed.status().message())));
    }
    spec = *parsed;
  }
  rec.input_hashes.emplace_back("class", TextDigest(FormatClassSpec(*spec)));
  return spec;
}

absl::StatusOr<OrderedExpansionSpec> ResolveExpansion(const std::string& arg,
                                                      ResultRecord& rec) {
  if (arg.empty()) return absl::InvalidArgumentError("--class is required");
  absl::StatusOr<OrderedExpansionSpec> ex = PresetExpansion(arg);
  if (!ex.ok()) {
    for (const std::string& name : PresetExpansionNames()) {
      absl::StatusOr<OrderedExpansionSpec> cand = PresetExpansion(name);
      if (cand.ok() && cand->base->name() == arg) {
        ex = cand;
        break;
      }
    }
  }
  if (!ex.ok()) {
    return absl::NotFoundError(absl::StrCat(
        "unknown order expansion ", arg, "; expansions: ",
        absl::StrJoin(PresetExpansionNames(), ", ")));
  }
  rec.input_hashes.emplace_back(
      "class", TextDigest(absl::StrCat(FormatClassSpec(*ex->base), "\n",
                                       FormatClassSpec(*ex->expansion))));
  return ex;
}

// A short name, a literal over one of `signatures`, or a file path.
absl::StatusOr<Structure> ResolveStructure(
    const std::string& arg, const std::string& label,
    const std::vector<const Signature*>& signatures, ResultRecord& rec) {
  if (arg.empty()) {
    return absl::InvalidArgumentError(absl::StrCat("--", label,
                                                   " is required"));
  }
  std::optional<Structure> s;
  std::error_code ec;
  if (arg.find("size:") != std::string::npos && !fs::exists(arg, ec)) {
    if (signatures.empty()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "--", label, ": a literal needs a class for its signature"));
    }
    absl::Status first;
    for (const Signature* sig : signatures) {
      absl::StatusOr<Structure> lit = ParseStructureLiteral(*sig, arg);
      if (lit.ok()) {
        s = *std::move(lit);
        break;
      }
      if (first.ok()) first = lit.status();
    }
    if (!s) {
      return absl::InvalidArgumentError(
          absl::StrCat("--", label, ": ", std::string(first.message())));
    }
  } else if (absl::StatusOr<Structure> named = NamedStructure(arg);
             named.ok()) {
    s = *std::move(named);
  } else if (fs::is_regular_file(arg, ec)) {
    ASSIGN_OR_RETURN(std::string text, ReadFile(arg));
    absl::StatusOr<Structure> parsed = ParseStructure(text);
    if (!parsed.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat(arg, ": ", std::string(parsed.status().message())));
    }
    s = *std::move(parsed);
  } else {
    return absl::NotFoundError(absl::StrCat(
        "--", label, ": ", arg, " is neither a structure name nor a file"));
  }
  if (!signatures.empty() &&
      std::none_of(signatures.begin(), signatures.end(),
                   [&](const Signature* sig) {
                     return s->signature() == *sig;
                   })) {
    return absl::InvalidArgumentError(absl::StrCat(
        "--", label, " has signature [", s->signature().ToString(),
        "], expected [", signatures.front()->ToString(), "]"));
  }
  rec.input_hashes.emplace_back(label, HexDigest(StructureDigest(*s)));
  return *std::move(s);
}

absl::StatusOr<std::vector<int>> ParseInts(const std::string& text,
                                           char separator,
                                           const std::string& label) {
  std::vector<int> out;
  if (text.empty() || text == "-") return out;
  for (absl::string_view piece : absl::StrSplit(text, separator)) {
    int v = 0;
    if (!absl::SimpleAtoi(piece, &v) || v < 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "--", label, ": '", std::string(piece), "' is not an element"));
    }
    out.push_back(v);
  }
  return out;
}

void SetVerdict(ResultRecord& rec, std::string verdict) {
  rec.verdict = std::move(verdict);
}

// ---- core-model ------------------------------------------------------------

absl::Status RunEnumerate(const RunConfig& c, ResultRecord& rec) {
  ASSIGN_OR_RETURN(std::shared_ptr<const ClassSpec> spec,
                   ResolveClass(c.class_name, rec));
  const int n = Cap(c, 4);
  ASSIGN_OR_RETURN(std::vector<CanonicalForm> members, Members(*spec, n));
  std::vector<int> counts(n + 1, 0);
  for (const CanonicalForm& m : members) {
    ++counts[m.canon.size()];
    rec.certificate.push_back(absl::StrCat(
        "member size=", m.canon.size(), " hash=", HexDigest(m.hash), " ",
        OneLine(m.canon)));
  }
  SetVerdict(rec, "ok");
  rec.fields.emplace_back("class", spec->name());
  rec.fields.emplace_back("n", absl::StrCat(n));
  rec.fields.emplace_back("counts", Join(counts));
  rec.fields.emplace_back("members", absl::StrCat(members.size()));
  return absl::OkStatus();
}

std::vector<const Signature*> ClassSignature(
    const std::shared_ptr<const ClassSpec>& spec) {
  if (spec == nullptr) return {};
  return {&spec->signature()};
}

absl::Status RunAut(const RunConfig& c, ResultRecord& rec) {
  std::shared_ptr<const ClassSpec> spec;
  if (!c.class_name.empty()) {
    ASSIGN_OR_RETURN(spec, ResolveClass(c.class_name, rec));
  }
  ASSIGN_OR_RETURN(Structure a,
                   ResolveStructure(c.a, "A", ClassSignature(spec), rec));
  const std::vector<Embedding> auts = Automorphisms(a);
  const CanonicalForm cf = Canonicalize(a);
  SetVerdict(rec, "ok");
  rec.fields.emplace_back("size", absl::StrCat(a.size()));
  rec.fields.emplace_back("automorphisms", absl::StrCat(auts.size()));
  rec.fields.emplace_back("canonical_hash", HexDigest(cf.hash));
  rec.fields.emplace_back("canonical", OneLine(cf.canon));
  for (const Embedding& e : auts) rec.certificate.push_back(Join(e));
  return absl::OkStatus();
}

absl::Status RunEmbeddings(const RunConfig& c, ResultRecord& rec) {
  std::shared_ptr<const ClassSpec> spec;
  if (!c.class_name.empty()) {
    ASSIGN_OR_RETURN(spec, ResolveClass(c.class_name, rec));
  }
  ASSIGN_OR_RETURN(Structure b,
                   ResolveStructure(c.b, "B", ClassSignature(spec), rec));
  ASSIGN_OR_RETURN(Structure a,
                   ResolveStructure(c.a, "A", {&b.signature()}, rec));
  ASSIGN_OR_RETURN(std::vector<Embedding> embs, Embeddings(a, b));
  ASSIGN_OR_RETURN(std::vector<Subset> copies, Copies(a, b));
  SetVerdict(rec, "ok");
  rec.fields.emplace_back("embeddings", absl::StrCat(embs.size()));
  rec.fields.emplace_back("copies", absl::StrCat(copies.size()));
  rec.fields.emplace_back("automorphisms_of_A",
                          absl::StrCat(Automorphisms(a).size()));
  for (const Embedding& e : embs) rec.certificate.push_back(Join(e));
  return absl::OkStatus();
}

// ---- arrow-search ----------------------------------------------------------

absl::Status RunArrow(const RunConfig& c, ResultRecord& rec) {
  std::shared_ptr<const ClassSpec> spec;
  if (!c.class_name.empty()) {
    ASSIGN_OR_RETURN(spec, ResolveClass(c.class_name, rec));
  }
  ArrowQuery q;
  ASSIGN_OR_RETURN(q.c, ResolveStructure(c.c, "C", ClassSignature(spec), rec));
  ASSIGN_OR_RETURN(q.b, ResolveStructure(c.b, "B", {&q.c.signature()}, rec));
  ASSIGN_OR_RETURN(q.a, ResolveStructure(c.a, "A", {&q.c.signature()}, rec));
  ASSIGN_OR_RETURN(q.mode, ParseArrowMode(c.mode));
  q.k = c.k;
  q.d = c.d;
  ASSIGN_OR_RETURN(ArrowCertificate cert, CheckArrow(q, Options(c)));
  SetVerdict(rec, ArrowVerdictName(cert.verdict));
  rec.budget_used = cert.stats.nodes;
  if (cert.verdict == ArrowVerdict::kFails) {
    ASSIGN_OR_RETURN(bool verified, VerifyBadColoring(q, cert.coloring));
    rec.fields.emplace_back("coloring_verified", verified ? "1" : "0");
  }
  if (cert.verdict == ArrowVerdict::kUndecided) rec.exit_code = kExitUndecided;
  AddLines(rec.certificate, FormatCertificate(q, cert));
  return absl::OkStatus();
}

absl::Status RunWitness(const RunConfig& c, ResultRecord& rec) {
  ASSIGN_OR_RETURN(std::shared_ptr<const ClassSpec> spec,
                   ResolveClass(c.class_name, rec));
  ASSIGN_OR_RETURN(Structure b,
                   ResolveStructure(c.b, "B", ClassSignature(spec), rec));
  ASSIGN_OR_RETURN(Structure a,
                   ResolveStructure(c.a, "A", ClassSignature(spec), rec));
  ASSIGN_OR_RETURN(ArrowMode mode, ParseArrowMode(c.mode));
  const int cap = Cap(c, 6);
  ASSIGN_OR_RETURN(WitnessResult w, FindWitness(*spec, b, a, c.k, c.d, mode,
                                                cap, Options(c)));
  rec.budget_used = w.nodes;
  SetVerdict(rec, w.witness ? "found" : "not-found-up-to-cap");
  rec.fields.emplace_back("cap", absl::StrCat(w.cap));
  rec.fields.emplace_back("members_checked", absl::StrCat(w.members_checked));
  if (w.witness) {
    rec.fields.emplace_back("witness_size", absl::StrCat(w.witness->size()));
    rec.fields.emplace_back("witness", OneLine(*w.witness));
  }
  return absl::OkStatus();
}

absl::Status RunChain(const RunConfig& c, ResultRecord& rec) {
  ASSIGN_OR_RETURN(std::shared_ptr<const ClassSpec> spec,
                   ResolveClass(c.class_name, rec));
  ASSIGN_OR_RETURN(Structure b,
                   ResolveStructure(c.b, "B", ClassSignature(spec), rec));
  if (c.parts.empty()) {
    return absl::InvalidArgumentError("chain needs at least one --part A:k");
  }
  std::vector<ChainPart> parts;
  for (size_t i = 0; i < c.parts.size(); ++i) {
    const std::string& p = c.parts[i];
    const size_t colon = p.rfind(':');
    int k = 0;
    if (colon == std::string::npos ||
        !absl::SimpleAtoi(p.substr(colon + 1), &k) || k < 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("--part '", p, "' is not of the form A:k"));
    }
    ChainPart part;
    ASSIGN_OR_RETURN(part.a,
                     ResolveStructure(p.substr(0, colon),
                                      absl::StrCat("part", i),
                                      ClassSignature(spec), rec));
    part.k = k;
    parts.push_back(std::move(part));
  }
  const int cap = Cap(c, 12);
  absl::StatusOr<ChainResult> chain =
      ChainWitness(b, parts, SearchOracle(*spec, cap, Options(c)), c.samples,
                   c.seed);
  if (!chain.ok() && chain.status().code() == absl::StatusCode::kNotFound) {
    SetVerdict(rec, "not-found-up-to-cap");
    rec.fields.emplace_back("cap", absl::StrCat(cap));
    rec.fields.emplace_back("detail", std::string(chain.status().message()));
    return absl::OkStatus();
  }
  if (!chain.ok()) return chain.status();
  SetVerdict(rec, "found");
  std::vector<int> sizes;
  for (const Structure& s : chain->chain) sizes.push_back(s.size());
  rec.fields.emplace_back("cap", absl::StrCat(cap));
  rec.fields.emplace_back("sizes", Join(sizes));
  rec.fields.emplace_back("seed", absl::StrCat(c.seed));
  rec.fields.emplace_back("samples", absl::StrCat(chain->samples));
  rec.fields.emplace_back("samples_verified",
                          absl::StrCat(chain->samples_verified));
  for (size_t i = 0; i < chain->chain.size(); ++i) {
    rec.certificate.push_back(
        absl::StrCat("chain[", i, "] ", OneLine(chain->chain[i])));
  }
  return absl::OkStatus();
}

// ---- degree-lab ------------------------------------------------------------

std::string Bound(const std::optional<int>& v) {
  return v ? absl::StrCat(*v) : "?";
}

void DegreeFields(const DegreeRecord& r, Fields& fields) {
  fields.emplace_back("class", r.class_name);
  fields.emplace_back("A", OneLine(r.a));
  fields.emplace_back("ell", absl::StrCat(r.ell));
  fields.emplace_back("copy_lower", absl::StrCat(r.copy_lower));
  fields.emplace_back("copy_upper", Bound(r.copy_upper));
  fields.emplace_back("emb_lower", absl::StrCat(r.emb_lower));
  fields.emplace_back("emb_upper", Bound(r.emb_upper));
  fields.emplace_back("exp", Bound(r.expansion_count));
  fields.emplace_back("budget_hit", r.budget_hit ? "1" : "0");
}

absl::Status RunDegree(const RunConfig& c, ResultRecord& rec) {
  // An expansion preset name selects its base class plus the expansion
  // unless A already carries the order.
  std::shared_ptr<const ClassSpec> spec;
  std::optional<OrderedExpansionSpec> expansion;
  if (absl::StatusOr<OrderedExpansionSpec> ex = PresetExpansion(c.class_name);
      ex.ok()) {
    expansion = *ex;
    spec = ex->base;
    rec.input_hashes.emplace_back("class",
                                  TextDigest(FormatClassSpec(*ex->expansion)));
  } else {
    ASSIGN_OR_RETURN(spec, ResolveClass(c.class_name, rec));
    if (c.expansions) {
      for (const std::string& name : PresetExpansionNames()) {
        absl::StatusOr<OrderedExpansionSpec> cand = PresetExpansion(name);
        if (cand.ok() && cand->base->name() == spec->name()) {
          expansion = *cand;
          break;
        }
      }
    }
  }
  const DegreeCaps caps{c.b_cap, c.c_cap, c.k_cap};
  const OrderedExpansionSpec* ex_ptr = expansion ? &*expansion : nullptr;

  if (!c.a.empty()) {
    std::vector<const Signature*> sigs = {&spec->signature()};
    if (expansion) sigs.push_back(&expansion->expansion->signature());
    ASSIGN_OR_RETURN(Structure a, ResolveStructure(c.a, "A", sigs, rec));
    if (expansion && a.signature() == expansion->expansion->signature()) {
      spec = expansion->expansion;
      ex_ptr = nullptr;
    }
    ASSIGN_OR_RETURN(bool member, spec->Contains(a));
    if (!member) {
      return absl::InvalidArgumentError(
          absl::StrCat("A is not a member of ", spec->name()));
    }
    ASSIGN_OR_RETURN(DegreeRecord r,
                     DegreeBounds(*spec, a, caps, ex_ptr, Options(c)));
    if (absl::Status s = CheckDegreeRecord(r); !s.ok()) return s;
    SetVerdict(rec, r.Exact() ? "exact" : "bounds");
    DegreeFields(r, rec.fields);
    if (ex_ptr == nullptr && c.expansions) {
      rec.fields.emplace_back("exp_note", "no order expansion for this class");
    }
    rec.certificate.push_back(FormatDegreeLine(r));
    rec.certificate.push_back(
        absl::StrCat("copy_lower_certificate: ", r.copy_lower_certificate));
    rec.certificate.push_back(
        absl::StrCat("emb_lower_certificate: ", r.emb_lower_certificate));
    if (!r.copy_upper_source.empty()) {
      rec.certificate.push_back(
          absl::StrCat("copy_upper_source: ", r.copy_upper_source));
    }
    if (!r.emb_upper_source.empty()) {
      rec.certificate.push_back(
          absl::StrCat("emb_upper_source: ", r.emb_upper_source));
    }
    return absl::OkStatus();
  }

  // Whole table up to --cap plus the power-of-two audit.
  const int n = Cap(c, 3);
  ASSIGN_OR_RETURN(std::vector<CanonicalForm> members, Members(*spec, n));
  std::vector<DegreeRecord> records;
  for (const CanonicalForm& m : members) {
    ASSIGN_OR_RETURN(DegreeRecord r,
                     DegreeBounds(*spec, m.canon, caps, ex_ptr, Options(c)));
    rec.certificate.push_back(FormatDegreeLine(r));
    records.push_back(std::move(r));
  }
  const AuditReport audit = PowerOfTwoAudit(records);
  for (const AuditRow& row : audit.rows) {
    rec.fields.emplace_back("class", row.class_name);
    rec.fields.emplace_back("audited_up_to", absl::StrCat(row.audited_up_to));
    rec.fields.emplace_back(
        "class_degree", row.growing ? "growing" : Bound(row.class_degree));
    rec.fields.emplace_back("flagged", row.flagged ? "1" : "0");
  }
  SetVerdict(rec, audit.pass ? "audit-pass" : "audit-flagged");
  return absl::OkStatus();
}

// ---- expansion-lab ---------------------------------------------------------

absl::Status RunExpansion(const RunConfig& c, ResultRecord& rec) {
  ASSIGN_OR_RETURN(OrderedExpansionSpec ex,
                   ResolveExpansion(c.class_name, rec));
  const std::string& sub = c.subcommand;
  rec.fields.emplace_back("expansion", ex.name);
  if (sub == "admissible") {
    ASSIGN_OR_RETURN(Structure a, ResolveStructure(
                                      c.a, "A", {&ex.base->signature()}, rec));
    ASSIGN_OR_RETURN(std::vector<Order> orders, AdmissibleOrders(a, ex));
    ASSIGN_OR_RETURN(ExpansionCount count, CountExpansions(a, ex));
    SetVerdict(rec, orders.empty() ? "empty" : "ok");
    rec.fields.emplace_back("admissible", absl::StrCat(orders.size()));
    rec.fields.emplace_back("isomorphism_classes",
                            absl::StrCat(count.isomorphism_classes));
    for (const Order& o : orders) rec.certificate.push_back(FormatOrder(o));
    return absl::OkStatus();
  }
  if (sub == "forgetful") {
    const int n = Cap(c, 4);
    ASSIGN_OR_RETURN(ForgetfulReport r, IsForgetful(ex, n));
    SetVerdict(rec, r.pass ? "pass" : "fail");
    rec.fields.emplace_back("n", absl::StrCat(r.checked_size));
    for (const ForgetfulReport::Counterexample& ce : r.counterexamples) {
      rec.certificate.push_back(
          absl::StrCat("base ", OneLine(ce.base), " | first ",
                       FormatOrder(OrderOf(ce.first)), " | second ",
                       FormatOrder(OrderOf(ce.second))));
    }
    return absl::OkStatus();
  }
  if (sub == "ordering-property") {
    const int n = Cap(c, 3);
    ASSIGN_OR_RETURN(OrderingPropertyReport r,
                     CheckOrderingProperty(ex, n, c.b_cap));
    SetVerdict(rec, r.all_found ? "pass" : "not-found-up-to-cap");
    rec.fields.emplace_back("n", absl::StrCat(r.checked_size));
    rec.fields.emplace_back("b_cap", absl::StrCat(r.b_cap));
    for (const OrderingPropertyReport::Entry& e : r.entries) {
      rec.certificate.push_back(absl::StrCat(
          "A ", OneLine(e.a), " -> ",
          e.witness ? absl::StrCat("B ", OneLine(*e.witness))
                    : std::string("not found up to cap")));
    }
    return absl::OkStatus();
  }
  if (sub == "reasonable") {
    const int n = Cap(c, 4);
    ASSIGN_OR_RETURN(ReasonableReport r, CheckReasonable(ex, n));
    SetVerdict(rec, r.pass ? "pass" : "fail");
    rec.fields.emplace_back("n", absl::StrCat(r.checked_size));
    if (r.counterexample) {
      const ReasonableReport::Counterexample& ce = *r.counterexample;
      rec.certificate.push_back(absl::StrCat("A ", OneLine(ce.a)));
      rec.certificate.push_back(absl::StrCat("B ", OneLine(ce.b)));
      rec.certificate.push_back(absl::StrCat("embedding ", Join(ce.embedding)));
      rec.certificate.push_back(
          absl::StrCat("order_on_A ", FormatOrder(ce.order_a)));
    }
    return absl::OkStatus();
  }
  if (sub == "order-forgetful") {
    ASSIGN_OR_RETURN(Structure b, ResolveStructure(
                                      c.b, "B", {&ex.base->signature()}, rec));
    if (c.as.empty()) {
      return absl::InvalidArgumentError("order-forgetful needs --A");
    }
    std::vector<Structure> as;
    for (size_t i = 0; i < c.as.size(); ++i) {
      ASSIGN_OR_RETURN(Structure a,
                       ResolveStructure(c.as[i], absl::StrCat("A", i),
                                        {&b.signature()}, rec));
      as.push_back(std::move(a));
    }
    ASSIGN_OR_RETURN(OrderForgetfulResult r, FindOrderForgetful(b, as));
    SetVerdict(rec, r.order ? "found" : "none");
    rec.fields.emplace_back("orders_examined",
                            absl::StrCat(r.orders_examined));
    if (r.order) rec.fields.emplace_back("order", FormatOrder(*r.order));
    return absl::OkStatus();
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown expansion subcommand ", sub));
}

// ---- ergodic-lab -----------------------------------------------------------

void DistributionLines(const RandomOrdering& ro,
                       std::vector<std::string>& out) {
  for (size_t i = 0; i < ro.members.size(); ++i) {
    std::vector<std::string> orders;
    for (const Order& o : ro.orders[i]) orders.push_back(FormatOrder(o));
    out.push_back(absl::StrCat("member ", OneLine(ro.members[i]), " orders ",
                               absl::StrJoin(orders, " "), " probs ",
                               FormatDistribution(ro.probs[i])));
  }
}

void ViolationLines(const ConsistencyViolation& v,
                    std::vector<std::string>& out) {
  out.push_back(absl::StrCat("violation A ", OneLine(v.a)));
  out.push_back(absl::StrCat("violation B ", OneLine(v.b)));
  out.push_back(absl::StrCat("violation embedding ", Join(v.embedding)));
  out.push_back(
      absl::StrCat("violation expected ", FormatDistribution(v.expected)));
  out.push_back(
      absl::StrCat("violation pushforward ", FormatDistribution(v.pushed)));
  if (!v.detail.empty()) out.push_back(absl::StrCat("violation ", v.detail));
}

absl::Status RunErgodic(const RunConfig& c, ResultRecord& rec) {
  ASSIGN_OR_RETURN(OrderedExpansionSpec ex,
                   ResolveExpansion(c.class_name, rec));
  const std::string& sub = c.subcommand;
  rec.fields.emplace_back("expansion", ex.name);
  if (sub == "uniform") {
    const int n = Cap(c, 3);
    ASSIGN_OR_RETURN(RandomOrdering ro, UniformRandomOrdering(ex, n));
    SetVerdict(rec, "ok");
    rec.fields.emplace_back("n", absl::StrCat(n));
    DistributionLines(ro, rec.certificate);
    return absl::OkStatus();
  }
  if (sub == "consistent-check") {
    const int n = Cap(c, 4);
    ASSIGN_OR_RETURN(RandomOrdering ro, UniformRandomOrdering(ex, n));
    ASSIGN_OR_RETURN(ConsistencyReport r, c.generators
                                              ? IsConsistentOnGenerators(ro)
                                              : IsConsistent(ro));
    SetVerdict(rec, r.pass ? "pass" : "fail");
    rec.fields.emplace_back("n", absl::StrCat(n));
    rec.fields.emplace_back("scope", c.generators ? "generators" : "all");
    rec.fields.emplace_back("embeddings_checked",
                            absl::StrCat(r.embeddings_checked));
    if (r.violation) ViolationLines(*r.violation, rec.certificate);
    return absl::OkStatus();
  }
  if (sub == "polytope") {
    const int n = Cap(c, 3);
    PolytopeOptions options;
    options.generators_only = c.generators;
    ASSIGN_OR_RETURN(PolytopeReport r, ConsistencyPolytope(ex, n, options));
    SetVerdict(rec, r.feasible ? "feasible" : "infeasible");
    rec.fields.emplace_back("n", absl::StrCat(n));
    rec.fields.emplace_back("variables", absl::StrCat(r.variables));
    rec.fields.emplace_back("equations", absl::StrCat(r.equations));
    rec.fields.emplace_back("rank", absl::StrCat(r.rank));
    rec.fields.emplace_back("unique", r.unique ? "1" : "0");
    rec.fields.emplace_back("uniform_is_solution",
                            r.uniform_is_solution ? "1" : "0");
    if (r.feasible) {
      for (size_t v = 0; v < r.min.size(); ++v) {
        rec.certificate.push_back(absl::StrCat("x", v, " in [",
                                               FormatRational(r.min[v]), ",",
                                               FormatRational(r.max[v]), "]"));
      }
      if (r.solution) DistributionLines(*r.solution, rec.certificate);
    }
    return absl::OkStatus();
  }
  if (sub == "cylinder") {
    ASSIGN_OR_RETURN(Structure ambient,
                     ResolveStructure(c.ambient, "ambient",
                                      {&ex.base->signature()}, rec));
    ASSIGN_OR_RETURN(std::vector<int> order,
                     ParseInts(c.order, '<', "order"));
    const int n = Cap(c, static_cast<int>(order.size()));
    ASSIGN_OR_RETURN(RandomOrdering ro, UniformRandomOrdering(ex, n));
    ASSIGN_OR_RETURN(CylinderValue v, CylinderMeasure(ro, ambient, order));
    SetVerdict(rec, "ok");
    rec.fields.emplace_back("order", FormatOrder(order));
    rec.fields.emplace_back("measure", FormatRational(v.measure));
    rec.fields.emplace_back("admissible", v.admissible ? "1" : "0");
    if (!v.admissible) {
      rec.fields.emplace_back("warning", "order is not admissible");
    }
    return absl::OkStatus();
  }
  if (sub == "concentrate") {
    ConcentrationSetup setup;
    ASSIGN_OR_RETURN(setup.ambient,
                     ResolveStructure(c.ambient, "ambient",
                                      {&ex.base->signature()}, rec));
    ASSIGN_OR_RETURN(setup.b,
                     ResolveStructure(c.b, "B",
                                      {&ex.expansion->signature()}, rec));
    ASSIGN_OR_RETURN(setup.root, ParseInts(c.root, '<', "root"));
    ASSIGN_OR_RETURN(setup.a, ParseInts(c.embedding, ',', "a"));
    setup.n_max = c.levels;
    const int n = static_cast<int>(setup.root.size()) + c.levels;
    ASSIGN_OR_RETURN(RandomOrdering ro, UniformRandomOrdering(ex, n));
    ASSIGN_OR_RETURN(ConcentrationReport r,
                     ConcentrationExperiment(ex, ro, setup));
    SetVerdict(rec, r.complete ? "complete" : "incomplete");
    if (!r.complete) {
      rec.fields.emplace_back("failure", r.failure);
      rec.exit_code = kExitInput;
    }
    rec.fields.emplace_back("measure", "uniform");
    rec.fields.emplace_back("ambient_orders", absl::StrCat(r.ambient_orders));
    rec.fields.emplace_back("bad_orders", absl::StrCat(r.bad_orders));
    rec.fields.emplace_back("disjoint", r.disjoint ? "1" : "0");
    rec.fields.emplace_back("covers_bad", r.covers_bad ? "1" : "0");
    rec.fields.emplace_back("non_increasing", r.non_increasing ? "1" : "0");
    rec.fields.emplace_back("within_bound", r.within_bound ? "1" : "0");
    rec.fields.emplace_back("extensions_realized",
                            r.extensions_realized ? "1" : "0");
    rec.fields.emplace_back("note",
                            "bad orders are evaluated on the finite ambient");
    for (const CylinderCover& level : r.levels) {
      rec.certificate.push_back(absl::StrCat(
          "level ", level.level, " sets ", level.sets.size(), " total ",
          FormatRational(level.total), " ratio ",
          level.ratio ? FormatRational(*level.ratio) : std::string("-"),
          " bound ", level.level > 0 ? FormatRational(level.bound) : "-",
          " extensions ", level.extensions, " discarded ", level.discarded));
      for (const Cylinder& cyl : level.sets) {
        rec.certificate.push_back(absl::StrCat("  U(", FormatOrder(cyl.order),
                                               ") ",
                                               FormatRational(cyl.measure)));
      }
    }
    return absl::OkStatus();
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown ergodic subcommand ", sub));
}

absl::Status Dispatch(const RunConfig& c, ResultRecord& rec) {
  if (c.command == "enumerate") return RunEnumerate(c, rec);
  if (c.command == "aut") return RunAut(c, rec);
  if (c.command == "embeddings") return RunEmbeddings(c, rec);
  if (c.command == "arrow") return RunArrow(c, rec);
  if (c.command == "witness") return RunWitness(c, rec);
  if (c.command == "chain") return RunChain(c, rec);
  if (c.command == "degree") return RunDegree(c, rec);
  if (c.command == "expansion") return RunExpansion(c, rec);
  if (c.command == "ergodic") return RunErgodic(c, rec);
  return absl::InvalidArgumentError(
      absl::StrCat("unknown command ", c.command));
}

// argv without the options that cannot change a result.
std::string EchoLine(int argc, const char* const* argv) {
  static const std::vector<std::string> kValued = {"--threads", "--cache-dir",
                                                   "--format"};
  std::vector<std::string> words;
  for (int i = 1; i < argc; ++i) {
    const std::string w = argv[i];
    if (w == "--timing") continue;
    bool skip = false;
    for (const std::string& opt : kValued) {
      if (w == opt) {
        ++i;
        skip = true;
      } else if (w.rfind(opt + "=", 0) == 0) {
        skip = true;
      }
    }
    if (!skip) words.push_back(w);
  }
  return absl::StrJoin(words, " ");
}

std::string Sanitize(std::string v) {
  std::replace(v.begin(), v.end(), '\n', ' ');
  return v;
}

}  // namespace

const char* ToolVersion() { return RAMSEYKIT_VERSION; }

std::string ValidateConfig(const RunConfig& c) {
  if (c.cap < 0) return "--cap must be positive";
  if (c.b_cap < 1 || c.c_cap < 1 || c.k_cap < 1) {
    return "--b-cap, --c-cap and --k-cap must be positive";
  }
  if (c.budget < 1) return "--budget must be at least 1";
  if (c.threads < 1) return "--threads must be at least 1";
  if (c.k < 1 || c.d < 1) return "--k and --d must be positive";
  if (c.samples < 0 || c.levels < 0) {
    return "--samples and --levels must be nonnegative";
  }
  return "";
}

ResultRecord Run(const RunConfig& config) {
  ResultRecord rec;
  rec.command = config.echo.empty()
                    ? absl::StrCat(config.command, config.subcommand.empty()
                                                       ? ""
                                                       : " ",
                                   config.subcommand)
                    : config.echo;
  rec.version = ToolVersion();
  absl::Status status;
  if (std::string bad = ValidateConfig(config); !bad.empty()) {
    status = absl::InvalidArgumentError(bad);
  } else if (config.command == "catalog") {
    ResultRecord cat = RunCatalog(config);
    cat.command = rec.command;
    cat.version = rec.version;
    return cat;
  } else {
    status = Dispatch(config, rec);
  }
  if (!status.ok()) {
    ResultRecord err;
    err.command = rec.command;
    err.version = rec.version;
    err.verdict = "error";
    err.fields.emplace_back("error", std::string(status.message()));
    err.exit_code = ExitFor(status);
    return err;
  }
  return rec;
}

std::string Render(const ResultRecord& r, OutputFormat format, bool timing) {
  const bool machine = format == OutputFormat::kMachine;
  const std::string sep = machine ? "=" : ": ";
  std::string out;
  auto line = [&](const std::string& k, const std::string& v) {
    absl::StrAppend(&out, k, sep, Sanitize(v), "\n");
  };
  line("command", r.command);
  line("verdict", r.verdict);
  for (const auto& [k, v] : r.fields) line(k, v);
  if (!r.certificate.empty()) {
    if (machine) {
      for (const std::string& c : r.certificate) line("certificate", c);
    } else {
      out += "certificate:\n";
      for (const std::string& c : r.certificate) {
        absl::StrAppend(&out, "  ", c, "\n");
      }
    }
  }
  for (const auto& [k, v] : r.input_hashes) line(absl::StrCat("input.", k), v);
  if (r.budget_used > 0) line("budget_used", absl::StrCat(r.budget_used));
  line("version", r.version);
  line("exit_code", absl::StrCat(r.exit_code));
  if (timing) {
    line("elapsed_ms", absl::StrCat(r.elapsed_ms));
    line("cache", r.cache_hit ? "hit" : "miss");
  }
  return out;
}

std::string SerializeRecord(const ResultRecord& r) {
  std::string out;
  auto line = [&](const std::string& k, const std::string& v) {
    absl::StrAppend(&out, k, "=", Sanitize(v), "\n");
  };
  line("command", r.command);
  line("verdict", r.verdict);
  for (const auto& [k, v] : r.fields) line(absl::StrCat("field.", k), v);
  for (const std::string& c : r.certificate) line("certificate", c);
  for (const auto& [k, v] : r.input_hashes) line(absl::StrCat("input.", k), v);
  line("budget_used", absl::StrCat(r.budget_used));
  line("version", r.version);
  line("exit_code", absl::StrCat(r.exit_code));
  return out;
}

bool ParseRecord(const std::string& text, ResultRecord& r) {
  r = ResultRecord();
  bool saw_exit = false;
  for (absl::string_view raw : absl::StrSplit(text, '\n')) {
    if (raw.empty()) continue;
    const size_t eq = raw.find('=');
    if (eq == absl::string_view::npos) return false;
    const std::string key(raw.substr(0, eq));
    const std::string value(raw.substr(eq + 1));
    if (key == "command") {
      r.command = value;
    } else if (key == "verdict") {
      r.verdict = value;
    } else if (key == "certificate") {
      r.certificate.push_back(value);
    } else if (key == "budget_used") {
      if (!absl::SimpleAtoi(value, &r.budget_used)) return false;
    } else if (key == "version") {
      r.version = value;
    } else if (key == "exit_code") {
      if (!absl::SimpleAtoi(value, &r.exit_code)) return false;
      saw_exit = true;
    } else if (key.rfind("field.", 0) == 0) {
      r.fields.emplace_back(key.substr(6), value);
    } else if (key.rfind("input.", 0) == 0) {
      r.input_hashes.emplace_back(key.substr(6), value);
    } else {
      return false;
    }
  }
  return saw_exit && !r.verdict.empty();
}

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  RunConfig config;
  CLI::App app{"Finite structural Ramsey theory toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ToolVersion());

  std::string format = "human";
  app.add_option("--cap", config.cap, "Size cap (command default if 0)");
  app.add_option("--budget", config.budget, "Search node budget");
  app.add_option("--threads", config.threads, "Worker threads");
  app.add_option("--seed", config.seed, "Seed for randomized sampling");
  app.add_option("--cache-dir", config.cache_dir,
                 "Result cache directory (RAMSEYKIT_CACHE if unset)");
  app.add_option("--format", format, "human or machine")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_flag("--timing", config.timing, "Print elapsed time and cache use");

  auto class_opt = [&](CLI::App* sub) {
    sub->add_option("--class", config.class_name,
                     "Preset name or class file");
  };
  auto caps = [&](CLI::App* sub) {
    sub->add_option("--b-cap", config.b_cap, "Largest B searched");
    sub->add_option("--c-cap", config.c_cap, "Largest C searched");
    sub->add_option("--k-cap", config.k_cap, "Largest number of colors");
  };
  std::vector<CLI::App*> subs;
  auto add = [&](CLI::App* parent, const std::string& name,
                 const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    subs.push_back(sub);
    return sub;
  };

  CLI::App* enumerate = add(&app, "enumerate", "Members up to --cap");
  class_opt(enumerate);
  CLI::App* aut = add(&app, "aut", "Automorphisms of A");
  class_opt(aut);
  aut->add_option("--A", config.a, "Structure");
  CLI::App* embeddings = add(&app, "embeddings", "Embeddings of A into B");
  class_opt(embeddings);
  embeddings->add_option("--A", config.a, "Structure");
  embeddings->add_option("--B", config.b, "Structure");
  CLI::App* arrow = add(&app, "arrow", "Decide C -> (B)^A_{k,d}");
  class_opt(arrow);
  arrow->add_option("--C", config.c, "Structure");
  arrow->add_option("--B", config.b, "Structure");
  arrow->add_option("--A", config.a, "Structure");
  arrow->add_option("--k", config.k, "Colors");
  arrow->add_option("--d", config.d, "Allowed colors per B-copy");
  arrow->add_option("--mode", config.mode, "copies or embeddings");
  CLI::App* witness = add(&app, "witness", "Smallest C with C -> (B)^A_k,d");
  class_opt(witness);
  witness->add_option("--B", config.b, "Structure");
  witness->add_option("--A", config.a, "Structure");
  witness->add_option("--k", config.k, "Colors");
  witness->add_option("--d", config.d, "Allowed colors per B-copy");
  witness->add_option("--mode", config.mode, "copies or embeddings");
  CLI::App* chain = add(&app, "chain", "Iterated witnesses for several A");
  class_opt(chain);
  chain->add_option("--B", config.b, "Structure");
  chain->add_option("--part", config.parts, "A:k, repeatable");
  chain->add_option("--samples", config.samples, "Colorings to verify");
  CLI::App* degree = add(&app, "degree", "Ramsey degree bounds");
  class_opt(degree);
  degree->add_option("--A", config.a, "Structure (all members if omitted)");
  degree->add_flag("--expansions", config.expansions,
                   "Count order expansions of A");
  caps(degree);

  CLI::App* expansion = add(&app, "expansion", "Order expansion checks");
  expansion->require_subcommand(1);
  for (const char* name : {"admissible", "forgetful", "ordering-property",
                           "reasonable", "order-forgetful"}) {
    CLI::App* sub = add(expansion, name, name);
    class_opt(sub);
    if (std::string(name) == "admissible") {
      sub->add_option("--A", config.a, "Structure");
    }
    if (std::string(name) == "ordering-property") caps(sub);
    if (std::string(name) == "order-forgetful") {
      sub->add_option("--B", config.b, "Structure");
      sub->add_option("--A", config.as, "Structures, repeatable");
    }
  }
  CLI::App* ergodic = add(&app, "ergodic", "Random orderings and measures");
  ergodic->require_subcommand(1);
  for (const char* name :
       {"uniform", "consistent-check", "polytope", "cylinder", "concentrate"}) {
    CLI::App* sub = add(ergodic, name, name);
    class_opt(sub);
    const std::string n(name);
    if (n == "consistent-check" || n == "polytope") {
      sub->add_flag("--generators", config.generators,
                    "Only one-point extensions and automorphisms");
    }
    if (n == "cylinder") {
      sub->add_option("--ambient", config.ambient, "Base structure");
      sub->add_option("--order", config.order, "Order on a subset, 0<2<1");
    }
    if (n == "concentrate") {
      sub->add_option("--ambient", config.ambient, "Base structure");
      sub->add_option("--root", config.root, "Order on A, as 0<1");
      sub->add_option("--B", config.b, "Ordered structure");
      sub->add_option("--a", config.embedding, "Map A -> B, as 0,1");
      sub->add_option("--levels", config.levels, "n_max");
    }
  }
  CLI::App* catalog = add(&app, "catalog", "Run a preset suite");
  catalog->add_option("suite", config.suite, "Suite name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitVerdict : kExitInput;
  }

  config.format =
      format == "machine" ? OutputFormat::kMachine : OutputFormat::kHuman;
  for (CLI::App* sub : subs) {
    if (!sub->parsed()) continue;
    if (sub->get_parent() == &app) {
      config.command = sub->get_name();
    } else {
      config.subcommand = sub->get_name();
    }
  }
  config.echo = EchoLine(argc, argv);

  std::string cache_dir = config.cache_dir;
  if (cache_dir.empty()) {
    if (const char* env = std::getenv("RAMSEYKIT_CACHE")) cache_dir = env;
  }
  std::string warning;
  const ResultCache cache = ResultCache::Open(cache_dir, &warning);
  if (!warning.empty()) err << "warning: " << warning << "\n";
  const bool cacheable = cache.enabled() && config.command != "catalog";
  const std::string key = cacheable ? CacheKey(config) : "";

  const auto start = std::chrono::steady_clock::now();
  ResultRecord record;
  std::optional<ResultRecord> hit =
      cacheable ? cache.Load(key) : std::nullopt;
  if (hit) {
    record = *std::move(hit);
    record.command = config.echo;
    record.cache_hit = true;
  } else {
    record = Run(config);
    if (cacheable && (record.exit_code == kExitVerdict ||
                      record.exit_code == kExitUndecided)) {
      if (absl::Status s = cache.Store(key, record); !s.ok()) {
        err << "warning: " << s.message() << "\n";
      }
    }
  }
  record.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (record.verdict == "error") {
    for (const auto& [k, v] : record.fields) {
      if (k == "error") err << "error: " << v << "\n";
    }
    return record.exit_code;
  }
  out << Render(record, config.format, config.timing);
  return record.exit_code;
}

}  // namespace ramseykit::cli
