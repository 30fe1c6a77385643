#include "skewbisub/bisubmodularity.hpp"

#include <vector>

#include "skewbisub/errors.hpp"

namespace skewbisub {

InequalitySides inequality_sides(const ValueOracle& f, const Labeling& a,
                                 const Labeling& b) {
  const Rational& alpha = f.alpha().value();
  InequalitySides sides;
  sides.lhs = f.evaluate(meet0(a, b)) +
              alpha * f.evaluate(join(a, b, Label::Zero)) +
              (1 - alpha) * f.evaluate(join(a, b, Label::Pos));
  sides.rhs = f.evaluate(a) + f.evaluate(b);
  return sides;
}

std::optional<ViolationWitness> check_alpha_bisubmodular(const ValueOracle& f,
                                                         std::size_t cap) {
  const std::size_t n = f.arity();
  const std::size_t count = labeling_count(n, cap);
  const TableFunction table = expand_to_table(f, cap);
  const Rational& alpha = f.alpha().value();
  const Rational beta = 1 - alpha;

  std::vector<Labeling> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) points.push_back(labeling_at(i, n));

  // Both operations are commutative, so (a, b) and (b, a) violate together and
  // the lexicographically first violating pair has index(a) < index(b).
  // Comparable pairs (including a == b) satisfy the inequality with equality.
  for (std::size_t ia = 0; ia < count; ++ia) {
    const Labeling& a = points[ia];
    for (std::size_t ib = ia + 1; ib < count; ++ib) {
      const Labeling& b = points[ib];
      std::size_t meet = 0, join0 = 0, join1 = 0;
      bool a_le_b = true, b_le_a = true;
      for (std::size_t j = 0; j < n; ++j) {
        const Label x = a[j], y = b[j];
        a_le_b = a_le_b && less_equal(x, y);
        b_le_a = b_le_a && less_equal(y, x);
        meet = meet * 3 + static_cast<std::size_t>(meet0(x, y));
        join0 = join0 * 3 + static_cast<std::size_t>(join(x, y, Label::Zero));
        join1 = join1 * 3 + static_cast<std::size_t>(join(x, y, Label::Pos));
      }
      if (a_le_b || b_le_a) continue;
      Rational lhs = table.at_index(meet) + alpha * table.at_index(join0) +
                     beta * table.at_index(join1);
      Rational rhs = table.at_index(ia) + table.at_index(ib);
      if (lhs > rhs) {
        return ViolationWitness{a, b, std::move(lhs), std::move(rhs)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace skewbisub
