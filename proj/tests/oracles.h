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


// Brute-force reference implementations. They share no search code with the
// library: maps are enumerated as plain permutations or injections and every
// tuple of every relation is compared.

#ifndef RAMSEYKIT_TESTS_ORACLES_H_
#define RAMSEYKIT_TESTS_ORACLES_H_

#include <cstdint>
#include <vector>

#include "ramseykit/structure.h"

namespace ramseykit::oracle {

// Every tuple of length `arity` over [n], lexicographically.
std::vector<std::vector<int>> AllTuples(int n, int arity);

// True when `map` is injective and preserves and reflects every relation.
bool IsEmbedding(const Structure& a, const Structure& b,
                 const std::vector<int>& map);

// All injections [|a|] -> [|b|] that are embeddings, lexicographic.
std::vector<std::vector<int>> Embeddings(const Structure& a,
                                         const Structure& b);

std::vector<std::vector<int>> Automorphisms(const Structure& a);

// Isomorphism by trying every permutation.
bool Isomorphic(const Structure& a, const Structure& b);

// Number of isomorphism classes among `structures`.
int CountIsoClasses(const std::vector<Structure>& structures);

// Every labeled graph on n vertices.
std::vector<Structure> AllGraphs(int n);
// Every labeled tournament on n vertices.
std::vector<Structure> AllTournaments(int n);

// Sorted images of the embeddings of a into b, deduplicated.
std::vector<std::vector<int>> Copies(const Structure& a, const Structure& b);

// Exhaustive arrow check over all k^|objects| colorings: true when every
// coloring has some copy (or embedding) of B whose A-objects use at most d
// colors. `bad` receives the first bad coloring in lexicographic order.
bool Arrow(const Structure& c, const Structure& b, const Structure& a, int k,
           int d, bool embeddings, std::vector<int>* bad = nullptr);

// Every linear order of [n] as a sequence, lexicographic.
std::vector<std::vector<int>> Permutations(int n);

}  // namespace ramseykit::oracle

#endif  // RAMSEYKIT_TESTS_ORACLES_H_
