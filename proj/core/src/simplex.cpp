#include "skewbisub/detail/simplex.hpp"

#include <optional>

#include "skewbisub/errors.hpp"

namespace skewbisub::detail {

namespace {

class Tableau {
 public:
  // Columns [0, structural) are the original variables, followed by one
  // artificial per row and finally the right-hand side.
  Tableau(const std::vector<std::vector<Rational>>& A,
          const std::vector<Rational>& b, std::size_t structural)
      : structural_(structural), rows_(A.size()) {
    const std::size_t m = A.size();
    width_ = structural_ + m + 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (A[i].size() != structural_) {
        throw InvalidArgument("simplex: ragged constraint matrix");
      }
      auto& row = rows_[i];
      row.assign(width_, Rational(0));
      const bool flip = sgn(b[i]) < 0;
      for (std::size_t j = 0; j < structural_; ++j) {
        row[j] = flip ? Rational(-A[i][j]) : A[i][j];
      }
      row[structural_ + i] = 1;
      row[width_ - 1] = flip ? Rational(-b[i]) : b[i];
      basis_.push_back(structural_ + i);
    }
    objective_.assign(width_, Rational(0));
  }

  // Phase-1 objective: the sum of artificials, expressed in reduced costs.
  void set_phase_one_objective() {
    objective_.assign(width_, Rational(0));
    for (const auto& row : rows_) {
      for (std::size_t j = 0; j < structural_; ++j) objective_[j] -= row[j];
      objective_[width_ - 1] -= row[width_ - 1];
    }
  }

  void set_objective(const std::vector<Rational>& c) {
    objective_.assign(width_, Rational(0));
    for (std::size_t j = 0; j < structural_; ++j) objective_[j] = c[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t bj = basis_[i];
      if (bj >= structural_ || sgn(c[bj]) == 0) continue;
      const Rational cb = c[bj];
      for (std::size_t j = 0; j < width_; ++j) {
        objective_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Runs Bland's-rule pivots over columns [0, allowed). Returns false when
  // the objective is unbounded below.
  bool optimize(std::size_t allowed) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(objective_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      const std::size_t col = *entering;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][col]) <= 0) continue;
        Rational ratio = rows_[i][width_ - 1] / rows_[i][col];
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, col);
    }
  }

  // Pivots basic artificials out where possible and drops redundant rows.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < structural_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < structural_; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  Rational objective_value() const { return -objective_[width_ - 1]; }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(structural_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = rows_[i][width_ - 1];
    }
    return x;
  }

 private:
  void pivot(std::size_t r, std::size_t col) {
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[col];
    for (auto& v : prow) v *= inv;
    auto eliminate = [&](std::vector<Rational>& row) {
      if (sgn(row[col]) == 0) return;
      const Rational factor = row[col];
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(prow[j]) != 0) row[j] -= factor * prow[j];
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(objective_);
    basis_[r] = col;
  }

  std::size_t structural_;
  std::size_t width_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> objective_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_standard_form(const std::vector<std::vector<Rational>>& A,
                             const std::vector<Rational>& b,
                             const std::vector<Rational>& c) {
  if (A.size() != b.size()) {
    throw InvalidArgument("simplex: row count mismatch between A and b");
  }
  Tableau tableau(A, b, c.size());

  tableau.set_phase_one_objective();
  tableau.optimize(c.size());
  LpResult result;
  if (sgn(tableau.objective_value()) != 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  tableau.expel_artificials();

  tableau.set_objective(c);
  if (!tableau.optimize(c.size())) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.objective = tableau.objective_value();
  result.solution = tableau.solution();
  return result;
}

}  // namespace skewbisub::detail
