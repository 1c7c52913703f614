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


#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "cli.h"
#include "ramseykit/arrow.h"
#include "ramseykit/class_engine.h"
#include "ramseykit/degree.h"
#include "ramseykit/expansion.h"
#include "ramseykit/named_structures.h"
#include "ramseykit/presets.h"
#include "ramseykit/structure_io.h"

namespace ramseykit::cli {
namespace {

// One table row: what was run, what came out, and the expected outcome when
// one is known ("" otherwise).
struct Row {
  std::string name;
  std::string got;
  std::string expected;
};

class Table {
 public:
  void Add(std::string name, std::string got, std::string expected = "") {
    rows_.push_back({std::move(name), std::move(got), std::move(expected)});
  }
  void AddError(std::string name, const absl::Status& status) {
    Add(std::move(name),
        absl::StrCat("error(", std::string(status.message()), ")"), "ok");
  }

  ResultRecord Finish() const {
    ResultRecord rec;
    int mismatches = 0;
    for (const Row& r : rows_) {
      const bool match = r.expected.empty() || r.expected == r.got;
      if (!match) ++mismatches;
      rec.certificate.push_back(absl::StrCat(
          r.name, " | ", r.got, " | expected ",
          r.expected.empty() ? "-" : r.expected, " | ",
          match ? "ok" : "MISMATCH"));
    }
    rec.verdict = mismatches == 0 ? "pass" : "mismatch";
    rec.fields.emplace_back("rows", absl::StrCat(rows_.size()));
    rec.fields.emplace_back("mismatches", absl::StrCat(mismatches));
    return rec;
  }

 private:
  std::vector<Row> rows_;
};

ArrowOptions Options(const RunConfig& c) {
  ArrowOptions o;
  o.budget = c.budget;
  o.threads = c.threads;
  return o;
}

void ArrowRow(Table& t, const std::string& name, const ArrowQuery& q,
              const ArrowOptions& options, const std::string& expected) {
  absl::StatusOr<ArrowCertificate> cert = CheckArrow(q, options);
  if (!cert.ok()) {
    t.AddError(name, cert.status());
    return;
  }
  std::string got = ArrowVerdictName(cert->verdict);
  if (cert->verdict == ArrowVerdict::kFails) {
    absl::StatusOr<bool> ok = VerifyBadColoring(q, cert->coloring);
    got = absl::StrCat(got, ok.ok() && *ok ? "+verified" : "+unverified");
  }
  t.Add(name, got, expected);
}

void RamseyBasics(const RunConfig& c, Table& t) {
  const ArrowOptions o = Options(c);
  const Structure k2 = CompleteGraph(2);
  const Structure k3 = CompleteGraph(3);
  ArrowRow(t, "arrow K6 -> (K3)^K2_{2,1}", {CompleteGraph(6), k3, k2, 2, 1},
           o, "holds");
  ArrowRow(t, "arrow K5 -> (K3)^K2_{2,1}", {CompleteGraph(5), k3, k2, 2, 1},
           o, "fails+verified");
  ArrowRow(t, "arrow chain6 -> (chain3)^chain2_{2,1}",
           {Chain(6), Chain(3), Chain(2), 2, 1}, o, "holds");
  ArrowRow(t, "arrow chain5 -> (chain3)^chain2_{2,1}",
           {Chain(5), Chain(3), Chain(2), 2, 1}, o, "fails+verified");
  ArrowRow(t, "arrow chain6 -> (chain3)^chain2_{2,1} embeddings",
           {Chain(6), Chain(3), Chain(2), 2, 1, ArrowMode::kEmbeddings}, o,
           "holds");

  absl::StatusOr<std::shared_ptr<const ClassSpec>> orders =
      PresetClass("linear-orders");
  if (orders.ok()) {
    absl::StatusOr<WitnessResult> w = FindWitness(
        **orders, Chain(3), Chain(2), 2, 1, ArrowMode::kCopies, 7, o);
    if (!w.ok()) {
      t.AddError("witness linear-orders chain3 chain2 k=2", w.status());
    } else {
      t.Add("witness linear-orders chain3 chain2 k=2",
            w->witness ? absl::StrCat("size ", w->witness->size())
                       : "not found",
            "size 6");
    }
  }
  absl::StatusOr<std::shared_ptr<const ClassSpec>> graphs =
      PresetClass("graphs");
  if (graphs.ok()) {
    absl::StatusOr<WitnessResult> w = FindWitness(
        **graphs, k3, k2, 2, 1, ArrowMode::kCopies, 6, o);
    if (!w.ok()) {
      t.AddError("witness graphs K3 K2 k=2", w.status());
    } else {
      t.Add("witness graphs K3 K2 k=2",
            w->witness ? absl::StrCat("size ", w->witness->size())
                       : "not found",
            "size 6");
    }
  }

  const int n = c.cap > 0 ? c.cap : 3;
  for (const char* name : {"graphs", "triangle-free", "linear-orders",
                           "tournaments", "equivalences"}) {
    absl::StatusOr<std::shared_ptr<const ClassSpec>> spec = PresetClass(name);
    if (!spec.ok()) {
      t.AddError(name, spec.status());
      continue;
    }
    absl::StatusOr<ClassReport> r = CheckJepAp(**spec, n, 2 * n);
    if (!r.ok()) {
      t.AddError(absl::StrCat("jep/ap ", name), r.status());
      continue;
    }
    t.Add(absl::StrCat("jep/ap ", name, " n=", n),
          absl::StrCat("jep=", SearchVerdictName(r->jep),
                       " ap=", SearchVerdictName(r->ap)),
          "jep=pass ap=pass");
    t.Add(absl::StrCat("members ", name, " n=", n),
          absl::StrJoin(r->member_counts, ","));
  }
}

void Forgetful(const RunConfig& c, Table& t) {
  const int n = c.cap > 0 ? c.cap : 4;
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"ordered-pure-sets", "pass"},   {"ordered-betweenness", "pass"},
      {"ordered-cyclic-orders", "pass"}, {"ordered-separations", "pass"},
      {"ordered-graphs", "fail"},      {"ordered-digraphs", "fail"},
      {"ordered-equivalences", "fail"}, {"convex-equivalences", "fail"},
      {"ordered-tournaments", "fail"}};
  for (const std::string& name : PresetExpansionNames()) {
    absl::StatusOr<OrderedExpansionSpec> ex = PresetExpansion(name);
    if (!ex.ok()) {
      t.AddError(name, ex.status());
      continue;
    }
    absl::StatusOr<ForgetfulReport> r = IsForgetful(*ex, n);
    if (!r.ok()) {
      t.AddError(absl::StrCat("forgetful ", name), r.status());
      continue;
    }
    std::string want;
    for (const auto& [k, v] : expected) {
      if (k == name) want = v;
    }
    std::string got = r->pass ? "pass" : "fail";
    if (!r->pass && !r->counterexamples.empty()) {
      const ForgetfulReport::Counterexample& ce = r->counterexamples.front();
      t.Add(absl::StrCat("forgetful ", name, " n=", n), got, want);
      t.Add(absl::StrCat("  first counterexample ", name),
            absl::StrCat(FormatStructureLiteral(ce.base), " orders ",
                         FormatOrder(OrderOf(ce.first)), " vs ",
                         FormatOrder(OrderOf(ce.second))));
      continue;
    }
    t.Add(absl::StrCat("forgetful ", name, " n=", n), got, want);
  }
  absl::StatusOr<OrderedExpansionSpec> eo =
      PresetExpansion("edge-ordered-digraphs");
  if (eo.ok()) {
    absl::StatusOr<std::vector<Order>> orders =
        AdmissibleOrders(DirectedCycle(3), *eo);
    if (!orders.ok()) {
      t.AddError("admissible dc3", orders.status());
    } else {
      t.Add("admissible orders of dc3 in edge-ordered-digraphs",
            absl::StrCat(orders->size()), "0");
    }
  }
  absl::StatusOr<OrderedExpansionSpec> og = PresetExpansion("ordered-graphs");
  if (og.ok()) {
    absl::StatusOr<ExpansionCount> count = CountExpansions(PathGraph(3), *og);
    if (count.ok()) {
      t.Add("expansions of P3 in ordered-graphs",
            absl::StrCat(count->isomorphism_classes), "3");
    }
  }
}

void PowerOfTwo(const RunConfig& c, Table& t) {
  const int n = c.cap > 0 ? c.cap : 3;
  const DegreeCaps caps{c.b_cap, c.c_cap, c.k_cap};
  std::vector<DegreeRecord> records;
  for (const char* name :
       {"linear-orders", "betweenness", "pure-sets", "cyclic-orders",
        "separations", "complete-graphs", "graphs"}) {
    absl::StatusOr<std::shared_ptr<const ClassSpec>> spec = PresetClass(name);
    if (!spec.ok()) {
      t.AddError(name, spec.status());
      continue;
    }
    std::optional<OrderedExpansionSpec> ex;
    for (const std::string& en : PresetExpansionNames()) {
      absl::StatusOr<OrderedExpansionSpec> cand = PresetExpansion(en);
      if (cand.ok() && cand->base->name() == name) {
        ex = *cand;
        break;
      }
    }
    absl::StatusOr<std::vector<CanonicalForm>> members = Members(**spec, n);
    if (!members.ok()) {
      t.AddError(name, members.status());
      continue;
    }
    for (const CanonicalForm& m : *members) {
      absl::StatusOr<DegreeRecord> r = DegreeBounds(
          **spec, m.canon, caps, ex ? &*ex : nullptr, Options(c));
      if (!r.ok()) {
        t.AddError(absl::StrCat("degree ", name), r.status());
        continue;
      }
      t.Add(absl::StrCat("degree ", name), FormatDegreeLine(*r));
      records.push_back(*std::move(r));
    }
  }
  const AuditReport audit = PowerOfTwoAudit(records);
  for (const AuditRow& row : audit.rows) {
    t.Add(absl::StrCat("audit ", row.class_name),
          row.growing ? "growing"
                      : absl::StrCat("degree ", row.class_degree
                                                    ? *row.class_degree
                                                    : -1),
          "");
    t.Add(absl::StrCat("audit ", row.class_name, " flagged"),
          row.flagged ? "1" : "0", "0");
  }
  t.Add("audit", audit.pass ? "pass" : "fail", "pass");
}

}  // namespace

std::vector<std::string> CatalogSuites() {
  return {"ramsey-basics", "forgetful", "power-of-two"};
}

ResultRecord RunCatalog(const RunConfig& config) {
  Table table;
  if (config.suite == "ramsey-basics") {
    RamseyBasics(config, table);
  } else if (config.suite == "forgetful") {
    Forgetful(config, table);
  } else if (config.suite == "power-of-two") {
    PowerOfTwo(config, table);
  } else {
    ResultRecord err;
    err.verdict = "error";
    err.fields.emplace_back(
        "error", absl::StrCat("unknown suite ", config.suite, "; suites: ",
                              absl::StrJoin(CatalogSuites(), ", ")));
    err.exit_code = kExitInput;
    return err;
  }
  ResultRecord rec = table.Finish();
  rec.fields.insert(rec.fields.begin(), {"suite", config.suite});
  return rec;
}

}  // namespace ramseykit::cli
