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

#ifndef RAMSEYKIT_NAMED_STRUCTURES_H_
#define RAMSEYKIT_NAMED_STRUCTURES_H_

#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "ramseykit/structure.h"

namespace ramseykit {

Signature GraphSignature();    // E/2
Signature OrderSignature();    // </2,order
Signature OrderedGraphSignature();  // E/2 </2,order
Signature EmptySignature();

Structure GraphFromEdges(int n, const std::vector<std::pair<int, int>>& edges);
Structure DigraphFromArcs(int n, const std::vector<std::pair<int, int>>& arcs);
Structure CompleteGraph(int n);
Structure EmptyGraph(int n);
Structure PathGraph(int n);   // 0-1-...-(n-1)
Structure CycleGraph(int n);
Structure DirectedCycle(int n);
Structure Chain(int n);       // 0 < 1 < ... < n-1
Structure PureSet(int n);

// Adds the flagged order 0 < 1 < ... < n-1 (or the given sequence, least
// first) to a structure whose signature lacks "<".
Structure WithOrder(const Structure& s, const std::vector<int>& sequence);
Structure WithNaturalOrder(const Structure& s);

// Short names used on the command line: k<n>, e<n>, p<n>, c<n> (graphs),
// dc<n> (directed cycle), chain<n>, set<n>.
absl::StatusOr<Structure> NamedStructure(std::string_view name);

}  // namespace ramseykit

#endif  // RAMSEYKIT_NAMED_STRUCTURES_H_
