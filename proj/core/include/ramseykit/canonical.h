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

#ifndef RAMSEYKIT_CANONICAL_H_
#define RAMSEYKIT_CANONICAL_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ramseykit/structure.h"

namespace ramseykit {

// Canonical representative of an isomorphism class. `relabeling` maps the
// input onto `canon` (canon = input.Relabel(relabeling)); two structures are
// isomorphic iff their canon fields compare equal.
struct CanonicalForm {
  Structure canon;
  std::vector<int> relabeling;
  uint64_t hash = 0;
};

// Iterated color refinement, then individualization over the first
// non-singleton cell; the leaf with the lexicographically least relational
// encoding wins. Branches on vertices whose transposition is an automorphism
// are explored once.
CanonicalForm Canonicalize(const Structure& a);

bool Isomorphic(const Structure& a, const Structure& b);

// 64-bit FNV-1a digest of the structure exactly as labeled. Apply to a
// canonical form to get an isomorphism-invariant hash.
uint64_t StructureDigest(const Structure& a);

// Sixteen lowercase hex digits.
std::string HexDigest(uint64_t digest);

}  // namespace ramseykit

#endif  // RAMSEYKIT_CANONICAL_H_
