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


#ifndef RAMSEYKIT_EXACT_LP_H_
#define RAMSEYKIT_EXACT_LP_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "boost/multiprecision/cpp_int.hpp"

namespace ramseykit {

using Rational = boost::multiprecision::cpp_rational;

// "p/q", with q = 1 written out.
std::string FormatRational(const Rational& r);

// The program {x >= 0 : rows * x = rhs}.
struct LinearSystem {
  int num_vars = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;

  // Appends a row given as (variable, coefficient) pairs.
  void AddRow(const std::vector<std::pair<int, Rational>>& terms,
              Rational value);
};

// Exact simplex over the rationals with Bland's rule. Construction removes
// linearly dependent rows and runs phase one; every later Minimize starts
// from the stored feasible basis.
class ExactSimplex {
 public:
  static absl::StatusOr<ExactSimplex> Create(const LinearSystem& system);

  bool feasible() const { return feasible_; }
  // Rank of the constraint matrix.
  int rank() const { return rank_; }
  int num_vars() const { return num_vars_; }
  // A basic feasible point; empty when infeasible.
  std::vector<Rational> Point() const;

  struct Optimum {
    Rational value;
    std::vector<Rational> x;
    int64_t pivots = 0;
  };
  // FailedPrecondition when infeasible, OutOfRange when unbounded.
  absl::StatusOr<Optimum> Minimize(const std::vector<Rational>& cost) const;

  // Pivots spent in phase one.
  int64_t pivots() const { return pivots_; }

 private:
  ExactSimplex() = default;

  using Table = std::vector<std::vector<Rational>>;

  static void Pivot(Table& t, int row, int col);
  // Runs Bland iterations on `t` whose last row holds reduced costs and
  // whose last column holds values. Columns >= `limit` never enter.
  // Returns false when unbounded.
  static bool Iterate(Table& t, std::vector<int>& basis, int limit,
                      int64_t& pivots);

  bool feasible_ = false;
  int num_vars_ = 0;
  int rank_ = 0;
  // Rows of the reduced tableau (constraint part only), plus the rhs column.
  Table table_;
  std::vector<int> basis_;
  int64_t pivots_ = 0;
};

}  // namespace ramseykit

#endif  // RAMSEYKIT_EXACT_LP_H_
