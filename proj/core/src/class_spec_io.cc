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

#include "ramseykit/class_spec_io.h"

#include <optional>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "ramseykit/presets.h"
#include "ramseykit/structure_io.h"

namespace ramseykit {
namespace {

absl::Status ErrorAt(int line, int column, const std::string& message) {
  return absl::InvalidArgumentError(
      absl::StrCat("line ", line, ", column ", column, ": ", message));
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Column (1-based) of `part` inside `line`, both views of the same buffer.
int ColumnOf(std::string_view line, std::string_view part) {
  return static_cast<int>(part.data() - line.data()) + 1;
}

absl::StatusOr<std::vector<Axiom>> ParseAxioms(std::string_view line,
                                               std::string_view body,
                                               int line_no) {
  std::vector<Axiom> axioms;
  size_t start = 0;
  while (start <= body.size()) {
    size_t end = body.find(',', start);
    if (end == std::string_view::npos) end = body.size();
    std::string_view item = Trim(body.substr(start, end - start));
    start = end + 1;
    if (item.empty()) {
      if (end == body.size()) break;
      continue;
    }
    const size_t open = item.find('(');
    if (open == std::string_view::npos || item.back() != ')') {
      return ErrorAt(line_no, ColumnOf(line, item),
                     absl::StrCat("expected kind(relation), got '",
                                  std::string(item), "'"));
    }
    absl::StatusOr<AxiomKind> kind = ParseAxiomKind(Trim(item.substr(0, open)));
    if (!kind.ok()) {
      return ErrorAt(line_no, ColumnOf(line, item),
                     std::string(kind.status().message()));
    }
    axioms.push_back(
        {*kind,
         std::string(Trim(item.substr(open + 1, item.size() - open - 2)))});
    if (end == body.size()) break;
  }
  return axioms;
}

}  // namespace

absl::StatusOr<std::shared_ptr<const ClassSpec>> ParseClassSpec(
    std::string_view text) {
  std::string name = "custom";
  std::optional<Signature> sig;
  std::vector<Axiom> axioms;
  std::vector<std::pair<int, std::string>> forbidden_lines;
  bool in_forbidden = false;
  bool any = false;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const size_t hash = line.find('#');
    std::string_view body = Trim(hash == std::string_view::npos
                                     ? line
                                     : line.substr(0, hash));
    if (body.empty()) {
      if (end == text.size()) break;
      continue;
    }
    any = true;
    if (in_forbidden && body.substr(0, 5) == "size:") {
      forbidden_lines.emplace_back(line_no, std::string(body));
      continue;
    }
    in_forbidden = false;
    const size_t colon = body.find(':');
    if (colon == std::string_view::npos) {
      return ErrorAt(line_no, ColumnOf(line, body), "expected 'key: value'");
    }
    const std::string_view key = Trim(body.substr(0, colon));
    const std::string_view value = Trim(body.substr(colon + 1));
    if (key == "preset") {
      absl::StatusOr<std::shared_ptr<const ClassSpec>> preset =
          PresetClass(value);
      if (!preset.ok()) {
        return ErrorAt(line_no, ColumnOf(line, value),
                       std::string(preset.status().message()));
      }
      return preset;
    } else if (key == "name") {
      name = std::string(value);
    } else if (key == "signature") {
      absl::StatusOr<Signature> parsed =
          ParseSignature(value, line_no, ColumnOf(line, value));
      if (!parsed.ok()) return parsed.status();
      sig = *std::move(parsed);
    } else if (key == "axioms") {
      absl::StatusOr<std::vector<Axiom>> parsed =
          ParseAxioms(line, value, line_no);
      if (!parsed.ok()) return parsed.status();
      axioms.insert(axioms.end(), parsed->begin(), parsed->end());
    } else if (key == "forbidden") {
      in_forbidden = true;
      if (!value.empty()) {
        forbidden_lines.emplace_back(line_no, std::string(value));
      }
    } else {
      return ErrorAt(line_no, ColumnOf(line, key),
                     absl::StrCat("unknown key '", std::string(key), "'"));
    }
    if (end == text.size()) break;
  }
  if (!any) return ErrorAt(1, 1, "empty class file");
  if (!sig) return ErrorAt(line_no, 1, "missing 'signature:' line");
  std::vector<Structure> forbidden;
  for (const auto& [line, literal] : forbidden_lines) {
    absl::StatusOr<Structure> s = ParseStructureLiteral(*sig, literal, line);
    if (!s.ok()) return s.status();
    forbidden.push_back(*std::move(s));
  }
  absl::StatusOr<ClassSpec> spec = ClassSpec::Create(
      std::move(name), *std::move(sig), std::move(axioms),
      std::move(forbidden));
  if (!spec.ok()) return spec.status();
  return std::make_shared<const ClassSpec>(*std::move(spec));
}

std::string FormatClassSpec(const ClassSpec& spec) {
  std::vector<std::string> axioms;
  for (const Axiom& ax : spec.axioms()) {
    axioms.push_back(absl::StrCat(AxiomKindName(ax.kind), "(", ax.relation,
                                  ")"));
  }
  std::string out = absl::StrCat("name: ", spec.name(), "\nsignature: ",
                                 spec.signature().ToString(), "\n");
  if (spec.reduct()) {
    absl::StrAppend(&out, "# reduct of ", spec.reduct()->source->name(),
                    "\n");
    return out;
  }
  absl::StrAppend(&out, "axioms: ", absl::StrJoin(axioms, ", "), "\n");
  if (!spec.forbidden().empty()) {
    absl::StrAppend(&out, "forbidden:\n");
    for (const Structure& f : spec.forbidden()) {
      absl::StrAppend(&out, "  ", FormatStructureLiteral(f), "\n");
    }
  }
  return out;
}

}  // namespace ramseykit
