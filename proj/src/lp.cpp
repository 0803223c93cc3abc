// Copyright 2026 The Authors.
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

#include "fairdiv/lp.hpp"

#include <optional>
#include <stdexcept>

namespace fairdiv {

namespace {

class Tableau {
 public:
  // Rows [A | I | b] with b >= 0; the identity block holds the artificials.
  explicit Tableau(const LinearProgram& lp)
      : rows_(lp.b.size()), vars_(lp.c.size()), width_(vars_ + rows_ + 1) {
    t_.assign(rows_, std::vector<Rational>(width_));
    basis_.resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (lp.a[r].size() != vars_) {
        throw std::invalid_argument("lp: constraint row has wrong length");
      }
      bool flip = lp.b[r].sign() < 0;
      for (std::size_t j = 0; j < vars_; ++j) {
        t_[r][j] = flip ? -lp.a[r][j] : lp.a[r][j];
      }
      t_[r][vars_ + r] = 1;
      t_[r][rhs()] = flip ? -lp.b[r] : lp.b[r];
      basis_[r] = vars_ + r;
    }
  }

  std::size_t rhs() const { return width_ - 1; }

  // Phase 1: maximize -sum(artificials). Returns false if infeasible.
  bool phase_one() {
    objective_.assign(width_, Rational(0));
    for (std::size_t r = 0; r < t_.size(); ++r) {
      for (std::size_t j = 0; j < vars_; ++j) objective_[j] += t_[r][j];
      objective_[rhs()] += t_[r][rhs()];
    }
    run(width_ - 1);
    if (!objective_[rhs()].is_zero()) return false;
    drive_out_artificials();
    return true;
  }

  // Phase 2 on the original objective. Returns false if unbounded.
  bool phase_two(const std::vector<Rational>& c) {
    objective_.assign(width_, Rational(0));
    for (std::size_t j = 0; j < vars_; ++j) objective_[j] = c[j];
    for (std::size_t r = 0; r < t_.size(); ++r) {
      const std::size_t b = basis_[r];
      if (b >= vars_ || c[b].is_zero()) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!t_[r][j].is_zero()) objective_[j] -= c[b] * t_[r][j];
      }
    }
    return run(vars_);
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(vars_);
    for (std::size_t r = 0; r < t_.size(); ++r) {
      if (basis_[r] < vars_) x[basis_[r]] = t_[r][rhs()];
    }
    return x;
  }

 private:
  // Simplex iterations over columns [0, allowed). Returns false if unbounded.
  bool run(std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (objective_[j].is_positive()) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < t_.size(); ++r) {
        const Rational& coef = t_[r][*entering];
        if (!coef.is_positive()) continue;
        Rational ratio = t_[r][rhs()] / coef;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = Rational(1) / t_[row][col];
    for (auto& v : t_[row]) {
      if (!v.is_zero()) v *= inv;
    }
    auto eliminate = [&](std::vector<Rational>& target) {
      if (target[col].is_zero()) return;
      Rational factor = target[col];
      for (std::size_t j = 0; j < width_; ++j) {
        if (!t_[row][j].is_zero()) target[j] -= factor * t_[row][j];
      }
    };
    for (std::size_t r = 0; r < t_.size(); ++r) {
      if (r != row) eliminate(t_[r]);
    }
    eliminate(objective_);
    basis_[row] = col;
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < t_.size();) {
      if (basis_[r] < vars_) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < vars_ && !col; ++j) {
        if (!t_[r][j].is_zero()) col = j;
      }
      if (col) {
        pivot(r, *col);
        ++r;
      } else {
        // Redundant equality.
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  std::size_t rows_;
  std::size_t vars_;
  std::size_t width_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> objective_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  if (lp.a.size() != lp.b.size()) {
    throw std::invalid_argument("lp: row count mismatch");
  }
  Tableau tableau(lp);
  LpResult result;
  if (!tableau.phase_one()) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  if (!tableau.phase_two(lp.c)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.x = tableau.solution();
  for (std::size_t j = 0; j < lp.c.size(); ++j) {
    if (!lp.c[j].is_zero() && !result.x[j].is_zero()) {
      result.objective += lp.c[j] * result.x[j];
    }
  }
  return result;
}

}  // namespace fairdiv
