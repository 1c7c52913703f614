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


#include "ramseykit/exact_lp.h"

#include <utility>

#include "absl/strings/str_cat.h"

namespace ramseykit {

std::string FormatRational(const Rational& r) {
  return absl::StrCat(boost::multiprecision::numerator(r).str(), "/",
                      boost::multiprecision::denominator(r).str());
}

void LinearSystem::AddRow(const std::vector<std::pair<int, Rational>>& terms,
                          Rational value) {
  std::vector<Rational> row(num_vars);
  for (const auto& [var, coeff] : terms) row[var] += coeff;
  rows.push_back(std::move(row));
  rhs.push_back(std::move(value));
}

void ExactSimplex::Pivot(Table& t, int row, int col) {
  const Rational p = t[row][col];
  for (Rational& v : t[row]) v /= p;
  for (size_t i = 0; i < t.size(); ++i) {
    if (static_cast<int>(i) == row || t[i][col] == 0) continue;
    const Rational f = t[i][col];
    for (size_t j = 0; j < t[i].size(); ++j) {
      if (t[row][j] != 0) t[i][j] -= f * t[row][j];
    }
  }
}

bool ExactSimplex::Iterate(Table& t, std::vector<int>& basis, int limit,
                           int64_t& pivots) {
  const int m = static_cast<int>(basis.size());
  const int rhs = static_cast<int>(t[0].size()) - 1;
  while (true) {
    int enter = -1;
    for (int j = 0; j < limit; ++j) {
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return true;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (leave < 0) return false;
    Pivot(t, leave, enter);
    basis[leave] = enter;
    ++pivots;
  }
}

absl::StatusOr<ExactSimplex> ExactSimplex::Create(const LinearSystem& system) {
  const int n = system.num_vars;
  if (system.rows.size() != system.rhs.size()) {
    return absl::InvalidArgumentError("row and rhs counts differ");
  }
  Table m;
  for (size_t i = 0; i < system.rows.size(); ++i) {
    if (static_cast<int>(system.rows[i].size()) != n) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", i, " has ", system.rows[i].size(),
                       " coefficients, expected ", n));
    }
    m.push_back(system.rows[i]);
    m.back().push_back(system.rhs[i]);
  }

  ExactSimplex out;
  out.num_vars_ = n;

  // Gauss-Jordan elimination drops dependent rows and detects 0 = c.
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (size_t i = rank; i < m.size(); ++i) {
      if (m[i][col] != 0) {
        pivot = static_cast<int>(i);
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const Rational p = m[rank][col];
    for (Rational& v : m[rank]) v /= p;
    for (size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) == rank || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (int j = col; j <= n; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  out.rank_ = rank;
  for (size_t i = rank; i < m.size(); ++i) {
    if (m[i][n] != 0) return out;  // infeasible
  }
  m.resize(rank);

  // Phase one with one artificial variable per row.
  Table t(rank + 1, std::vector<Rational>(n + rank + 1));
  std::vector<int> basis(rank);
  for (int i = 0; i < rank; ++i) {
    const bool flip = m[i][n] < 0;
    for (int j = 0; j < n; ++j) t[i][j] = flip ? -m[i][j] : m[i][j];
    t[i][n + rank] = flip ? -m[i][n] : m[i][n];
    t[i][n + i] = 1;
    basis[i] = n + i;
    for (int j = 0; j < n; ++j) t[rank][j] -= t[i][j];
    t[rank][n + rank] -= t[i][n + rank];
  }
  Iterate(t, basis, n + rank, out.pivots_);
  if (t[rank][n + rank] != 0) return out;

  // Artificials left in the basis sit at zero; swap them for real columns.
  for (int i = 0; i < rank; ++i) {
    if (basis[i] < n) continue;
    for (int j = 0; j < n; ++j) {
      if (t[i][j] != 0) {
        Pivot(t, i, j);
        basis[i] = j;
        ++out.pivots_;
        break;
      }
    }
  }
  out.feasible_ = true;
  for (int i = 0; i < rank; ++i) {
    if (basis[i] >= n) continue;  // unreachable after elimination
    std::vector<Rational> row(t[i].begin(), t[i].begin() + n);
    row.push_back(t[i][n + rank]);
    out.table_.push_back(std::move(row));
    out.basis_.push_back(basis[i]);
  }
  return out;
}

std::vector<Rational> ExactSimplex::Point() const {
  if (!feasible_) return {};
  std::vector<Rational> x(num_vars_);
  for (size_t i = 0; i < basis_.size(); ++i) x[basis_[i]] = table_[i].back();
  return x;
}

absl::StatusOr<ExactSimplex::Optimum> ExactSimplex::Minimize(
    const std::vector<Rational>& cost) const {
  if (!feasible_) return absl::FailedPreconditionError("program is infeasible");
  if (static_cast<int>(cost.size()) != num_vars_) {
    return absl::InvalidArgumentError(absl::StrCat(
        "cost has ", cost.size(), " entries, expected ", num_vars_));
  }
  const int m = static_cast<int>(basis_.size());
  Table t = table_;
  std::vector<Rational> z(cost);
  z.push_back(0);
  for (int i = 0; i < m; ++i) {
    const Rational& cb = cost[basis_[i]];
    if (cb == 0) continue;
    for (int j = 0; j <= num_vars_; ++j) z[j] -= cb * t[i][j];
  }
  t.push_back(std::move(z));
  std::vector<int> basis = basis_;
  Optimum out;
  if (!Iterate(t, basis, num_vars_, out.pivots)) {
    return absl::OutOfRangeError("objective is unbounded below");
  }
  out.value = -t[m][num_vars_];
  out.x.assign(num_vars_, 0);
  for (int i = 0; i < m; ++i) out.x[basis[i]] = t[i][num_vars_];
  return out;
}

}  // namespace ramseykit
