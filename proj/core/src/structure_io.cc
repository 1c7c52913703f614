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

#include "ramseykit/structure_io.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace ramseykit {
namespace {

absl::Status ErrorAt(int line, int column, const std::string& message) {
  return absl::InvalidArgumentError(
      absl::StrCat("line ", line, ", column ", column, ": ", message));
}

// Character scanner over one line that tracks 1-based columns.
class Cursor {
 public:
  Cursor(std::string_view text, int line, int column_offset)
      : text_(text), line_(line), offset_(column_offset) {}

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool Done() {
    SkipSpace();
    return pos_ >= text_.size();
  }
  bool Consume(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  absl::StatusOr<int> Integer() {
    SkipSpace();
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) return Error("expected a non-negative integer");
    if (pos_ - start > 6) return Error("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  // Relation names: identifiers or a run of symbol characters such as "<".
  absl::StatusOr<std::string> Name() {
    SkipSpace();
    const size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '<' || c == '>' || c == '-' || c == '~' || c == '=') {
        ++pos_;
      } else {
        break;
      }
    }
    if (start == pos_) return Error("expected a relation name");
    return std::string(text_.substr(start, pos_ - start));
  }
  absl::Status Error(const std::string& message) const {
    return ErrorAt(line_, column(), message);
  }
  int column() const { return offset_ + static_cast<int>(pos_) + 1; }
  std::string_view Rest() const { return text_.substr(pos_); }

 private:
  std::string_view text_;
  int line_;
  int offset_;
  size_t pos_ = 0;
};

std::vector<std::string_view> SplitOn(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
}

std::string_view StripComment(std::string_view line) {
  const size_t hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

// Parses "(a,b) (c,d) ..." into tuples of the expected arity.
absl::Status ParseTuples(Cursor& cur, int arity, int size,
                         std::vector<Tuple>* out) {
  while (!cur.Done()) {
    if (!cur.Consume('(')) return cur.Error("expected '('");
    Tuple t;
    while (true) {
      const int col = cur.column();
      absl::StatusOr<int> x = cur.Integer();
      if (!x.ok()) return x.status();
      if (*x >= size) {
        return cur.Error(absl::StrCat("entry ", *x, " outside universe [0, ",
                                      size, ") at column ", col));
      }
      t.push_back(*x);
      if (cur.Consume(',')) continue;
      if (cur.Consume(')')) break;
      return cur.Error("expected ',' or ')'");
    }
    if (static_cast<int>(t.size()) != arity) {
      return cur.Error(absl::StrCat("tuple has ", t.size(),
                                    " entries, relation arity is ", arity));
    }
    out->push_back(std::move(t));
  }
  return absl::OkStatus();
}

// Parses one "name: tuples" clause into `relations`.
absl::Status ParseRelationClause(const Signature& sig, Cursor& cur, int size,
                                 std::vector<std::vector<Tuple>>* relations,
                                 std::vector<bool>* seen) {
  const int col = cur.column();
  absl::StatusOr<std::string> name = cur.Name();
  if (!name.ok()) return name.status();
  const std::optional<int> index = sig.IndexOf(*name);
  if (!index) {
    return cur.Error(
        absl::StrCat("unknown relation '", *name, "' (column ", col, ")"));
  }
  if ((*seen)[*index]) {
    return cur.Error(absl::StrCat("relation '", *name, "' listed twice"));
  }
  (*seen)[*index] = true;
  if (!cur.Consume(':')) return cur.Error("expected ':'");
  return ParseTuples(cur, sig.symbol(*index).arity, size,
                     &(*relations)[*index]);
}

std::string FormatTuples(const Structure& s, int r) {
  std::vector<std::string> parts;
  for (const Tuple& t : s.relation(r).Tuples()) {
    parts.push_back(absl::StrCat("(", absl::StrJoin(t, ","), ")"));
  }
  return absl::StrJoin(parts, " ");
}

}  // namespace

absl::StatusOr<Signature> ParseSignature(std::string_view text, int line,
                                         int column) {
  std::vector<RelationSymbol> symbols;
  Cursor cur(text, line, column - 1);
  while (!cur.Done()) {
    absl::StatusOr<std::string> name = cur.Name();
    if (!name.ok()) return name.status();
    if (!cur.Consume('/')) return cur.Error("expected '/' after name");
    absl::StatusOr<int> arity = cur.Integer();
    if (!arity.ok()) return arity.status();
    RelationSymbol sym{*name, *arity, false};
    if (cur.Consume(',')) {
      absl::StatusOr<std::string> flag = cur.Name();
      if (!flag.ok()) return flag.status();
      if (*flag != "order") {
        return cur.Error(absl::StrCat("unknown flag '", *flag, "'"));
      }
      sym.is_order = true;
    }
    symbols.push_back(std::move(sym));
  }
  absl::StatusOr<Signature> sig = Signature::Create(std::move(symbols));
  if (!sig.ok()) return ErrorAt(line, column, std::string(sig.status().message()));
  return sig;
}

absl::StatusOr<Structure> ParseStructure(std::string_view text) {
  std::vector<std::string_view> lines = SplitOn(text, '\n');
  std::optional<Signature> sig;
  std::optional<int> size;
  std::vector<std::vector<Tuple>> relations;
  std::vector<bool> seen;
  int last_line = 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    std::string_view body = StripComment(lines[i]);
    Cursor cur(body, line, 0);
    if (cur.Done()) continue;
    last_line = line;
    if (!sig) {
      absl::StatusOr<std::string> key = cur.Name();
      if (!key.ok() || *key != "signature" || !cur.Consume(':')) {
        return ErrorAt(line, 1, "expected 'signature:' line first");
      }
      const int col = cur.column();
      absl::StatusOr<Signature> parsed = ParseSignature(cur.Rest(), line, col);
      if (!parsed.ok()) return parsed.status();
      sig = *std::move(parsed);
      relations.assign(sig->size(), {});
      seen.assign(sig->size(), false);
      continue;
    }
    if (!size) {
      absl::StatusOr<std::string> key = cur.Name();
      if (!key.ok() || *key != "size" || !cur.Consume(':')) {
        return ErrorAt(line, 1, "expected 'size:' line after signature");
      }
      absl::StatusOr<int> n = cur.Integer();
      if (!n.ok()) return n.status();
      if (*n > kMaxUniverse) {
        return cur.Error(
            absl::StrCat("size exceeds the cap of ", kMaxUniverse));
      }
      if (!cur.Done()) return cur.Error("trailing characters after size");
      size = *n;
      continue;
    }
    if (absl::Status st =
            ParseRelationClause(*sig, cur, *size, &relations, &seen);
        !st.ok()) {
      return st;
    }
  }
  if (!sig) return ErrorAt(1, 1, "empty input: missing 'signature:' line");
  if (!size) return ErrorAt(last_line + 1, 1, "missing 'size:' line");
  absl::StatusOr<Structure> s = Structure::Create(*sig, *size, relations);
  if (!s.ok()) return ErrorAt(last_line, 1, std::string(s.status().message()));
  return s;
}

std::string FormatStructure(const Structure& s) {
  std::string out =
      absl::StrCat("signature: ", s.signature().ToString(), "\n",
                   "size: ", s.size(), "\n");
  for (int r = 0; r < s.signature().size(); ++r) {
    absl::StrAppend(&out, s.signature().symbol(r).name, ": ",
                    FormatTuples(s, r), "\n");
  }
  return out;
}

absl::StatusOr<Structure> ParseStructureLiteral(const Signature& signature,
                                                std::string_view literal,
                                                int line) {
  std::vector<std::string_view> clauses = SplitOn(literal, ';');
  std::optional<int> size;
  std::vector<std::vector<Tuple>> relations(signature.size());
  std::vector<bool> seen(signature.size(), false);
  int offset = 0;
  for (std::string_view clause : clauses) {
    Cursor cur(clause, line, offset);
    offset += static_cast<int>(clause.size()) + 1;
    if (cur.Done()) continue;
    if (!size) {
      absl::StatusOr<std::string> key = cur.Name();
      if (!key.ok() || *key != "size" || !cur.Consume(':')) {
        return cur.Error("structure literal must start with 'size:'");
      }
      absl::StatusOr<int> n = cur.Integer();
      if (!n.ok()) return n.status();
      if (*n > kMaxUniverse) return cur.Error("size exceeds the cap");
      size = *n;
      continue;
    }
    if (absl::Status st =
            ParseRelationClause(signature, cur, *size, &relations, &seen);
        !st.ok()) {
      return st;
    }
  }
  if (!size) return ErrorAt(line, 1, "structure literal without 'size:'");
  absl::StatusOr<Structure> s = Structure::Create(signature, *size, relations);
  if (!s.ok()) return ErrorAt(line, 1, std::string(s.status().message()));
  return s;
}

std::string FormatStructureLiteral(const Structure& s) {
  std::string out = absl::StrCat("size: ", s.size());
  for (int r = 0; r < s.signature().size(); ++r) {
    if (s.relation(r).Count() == 0) continue;
    absl::StrAppend(&out, "; ", s.signature().symbol(r).name, ": ",
                    FormatTuples(s, r));
  }
  return out;
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace ramseykit
