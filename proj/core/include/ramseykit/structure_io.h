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

#ifndef RAMSEYKIT_STRUCTURE_IO_H_
#define RAMSEYKIT_STRUCTURE_IO_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "ramseykit/structure.h"

namespace ramseykit {

// Structure text format:
//
//   signature: E/2 </2,order
//   size: 3
//   E: (0,1) (1,0)
//   <: (0,1) (0,2) (1,2)
//
// Whitespace is insignificant, '#' starts a comment, and relations without a
// line are empty. Errors carry "line L, column C" diagnostics.
absl::StatusOr<Structure> ParseStructure(std::string_view text);
std::string FormatStructure(const Structure& s);

// "E/2 </2,order" (the part after "signature:").
absl::StatusOr<Signature> ParseSignature(std::string_view text,
                                         int line = 1, int column = 1);

// One-line literal over a known signature: "size: 3; E: (0,1) (1,0)".
absl::StatusOr<Structure> ParseStructureLiteral(const Signature& signature,
                                                std::string_view literal,
                                                int line = 1);
std::string FormatStructureLiteral(const Structure& s);

absl::StatusOr<std::string> ReadFile(const std::string& path);

}  // namespace ramseykit

#endif  // RAMSEYKIT_STRUCTURE_IO_H_
