#pragma once

#include <cstddef>
#include <optional>

#include "skewbisub/lattice.hpp"
#include "skewbisub/oracle.hpp"
#include "skewbisub/rational.hpp"

namespace skewbisub {

/// Both sides of the alpha-bisubmodular inequality at a pair (a, b):
///   lhs = f(a meet0 b) + alpha f(a join0 b) + (1 - alpha) f(a join1 b)
///   rhs = f(a) + f(b)
struct InequalitySides {
  Rational lhs;
  Rational rhs;
};

InequalitySides inequality_sides(const ValueOracle& f, const Labeling& a,
                                 const Labeling& b);

/// A pair at which the inequality fails; lhs > rhs.
struct ViolationWitness {
  Labeling a;
  Labeling b;
  Rational lhs;
  Rational rhs;
};

/// Checks the inequality over all 9^n ordered pairs. Returns the first
/// violating pair in lexicographic order of (a, b) ('-' < '0' < '+'), or
/// nullopt if f is alpha-bisubmodular. Throws CapExceeded when 3^n > cap;
/// never falls back to sampling.
std::optional<ViolationWitness> check_alpha_bisubmodular(
    const ValueOracle& f, std::size_t cap = kDefaultEnumerationCap);

}  // namespace skewbisub
