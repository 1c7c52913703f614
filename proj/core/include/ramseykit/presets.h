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

#ifndef RAMSEYKIT_PRESETS_H_
#define RAMSEYKIT_PRESETS_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "ramseykit/class_spec.h"
#include "ramseykit/expansion.h"

namespace ramseykit {

// Built-in classes. Each name resolves to one shared instance per process,
// so member enumeration is cached across callers.
std::vector<std::string> PresetClassNames();
absl::StatusOr<std::shared_ptr<const ClassSpec>> PresetClass(
    std::string_view name);

// Built-in order expansions, keyed by the name of the ordered class.
std::vector<std::string> PresetExpansionNames();
absl::StatusOr<OrderedExpansionSpec> PresetExpansion(std::string_view name);

}  // namespace ramseykit

#endif  // RAMSEYKIT_PRESETS_H_
