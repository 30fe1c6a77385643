#pragma once

// Dense two-phase primal simplex over exact rationals with Bland's rule.
// Internal scaffolding for the convex-closure oracle; not a general LP API.

#include <cstddef>
#include <vector>

#include "skewbisub/rational.hpp"

namespace skewbisub::detail {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  std::vector<Rational> solution;  ///< basic optimal solution when Optimal
};

/// minimize c.x subject to A x = b, x >= 0. A is row-major (rows.size() == b.size(),
/// every row of length c.size()).
LpResult solve_standard_form(const std::vector<std::vector<Rational>>& A,
                             const std::vector<Rational>& b,
                             const std::vector<Rational>& c);

}  // namespace skewbisub::detail
