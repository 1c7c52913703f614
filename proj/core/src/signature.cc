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

#include "ramseykit/signature.h"

#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ramseykit {

absl::StatusOr<Signature> Signature::Create(
    std::vector<RelationSymbol> symbols) {
  std::set<std::string> seen;
  for (const RelationSymbol& s : symbols) {
    if (s.name.empty()) {
      return absl::InvalidArgumentError("relation symbol with empty name");
    }
    if (s.arity < 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("relation ", s.name, " has arity ", s.arity));
    }
    if (!seen.insert(s.name).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate relation symbol ", s.name));
    }
    if (s.is_order && (s.name != "<" || s.arity != 2)) {
      return absl::InvalidArgumentError(
          "only the binary symbol < may carry the order flag");
    }
  }
  return Signature(std::move(symbols));
}

std::optional<int> Signature::IndexOf(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<int> Signature::OrderIndex() const {
  for (int i = 0; i < size(); ++i) {
    if (symbols_[i].is_order) return i;
  }
  return std::nullopt;
}

absl::StatusOr<Signature> Signature::With(RelationSymbol symbol) const {
  std::vector<RelationSymbol> symbols = symbols_;
  symbols.push_back(std::move(symbol));
  return Create(std::move(symbols));
}

Signature Signature::Without(std::string_view name) const {
  std::vector<RelationSymbol> symbols;
  for (const RelationSymbol& s : symbols_) {
    if (s.name != name) symbols.push_back(s);
  }
  return Signature(std::move(symbols));
}

std::string Signature::ToString() const {
  std::string out;
  for (const RelationSymbol& s : symbols_) {
    if (!out.empty()) out += ' ';
    absl::StrAppend(&out, s.name, "/", s.arity, s.is_order ? ",order" : "");
  }
  return out;
}

}  // namespace ramseykit
