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

#ifndef RAMSEYKIT_SIGNATURE_H_
#define RAMSEYKIT_SIGNATURE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace ramseykit {

// A relation symbol of a finite relational language. The symbol named "<"
// may carry the order flag, in which case every structure over the signature
// interprets it as a strict linear order.
struct RelationSymbol {
  std::string name;
  int arity = 2;
  bool is_order = false;

  bool operator==(const RelationSymbol&) const = default;
};

class Signature {
 public:
  Signature() = default;

  // Validates uniqueness of names, positive arities, and that an order flag
  // only appears on a binary symbol named "<".
  static absl::StatusOr<Signature> Create(std::vector<RelationSymbol> symbols);

  const std::vector<RelationSymbol>& symbols() const { return symbols_; }
  int size() const { return static_cast<int>(symbols_.size()); }
  const RelationSymbol& symbol(int i) const { return symbols_[i]; }

  std::optional<int> IndexOf(std::string_view name) const;
  // Index of the flagged order symbol, if any.
  std::optional<int> OrderIndex() const;

  // Returns a copy with `symbol` appended.
  absl::StatusOr<Signature> With(RelationSymbol symbol) const;
  // Returns a copy without the named symbol (no-op if absent).
  Signature Without(std::string_view name) const;

  // "E/2 </2,order", the form used by the text formats.
  std::string ToString() const;

  bool operator==(const Signature&) const = default;

 private:
  explicit Signature(std::vector<RelationSymbol> symbols)
      : symbols_(std::move(symbols)) {}

  std::vector<RelationSymbol> symbols_;
};

}  // namespace ramseykit

#endif  // RAMSEYKIT_SIGNATURE_H_
