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

#ifndef RAMSEYKIT_CLASS_SPEC_IO_H_
#define RAMSEYKIT_CLASS_SPEC_IO_H_

#include <memory>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "ramseykit/class_spec.h"

namespace ramseykit {

// Class file format:
//
//   name: triangle-free
//   signature: E/2
//   axioms: irreflexive(E), symmetric(E)
//   forbidden:
//     size: 3; E: (0,1) (1,0) (0,2) (2,0) (1,2) (2,1)
//
// A `preset: <name>` line replaces everything else. Lines after
// `forbidden:` that start with "size:" are structure literals.
absl::StatusOr<std::shared_ptr<const ClassSpec>> ParseClassSpec(
    std::string_view text);
std::string FormatClassSpec(const ClassSpec& spec);

}  // namespace ramseykit

#endif  // RAMSEYKIT_CLASS_SPEC_IO_H_
