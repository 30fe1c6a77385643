#pragma once

// Exact ground truth for small arities: brute-force minimization, the convex
// closure via an exact LP, and a midpoint-convexity probe for f^L.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>

#include "skewbisub/lattice.hpp"
#include "skewbisub/lovasz.hpp"
#include "skewbisub/oracle.hpp"
#include "skewbisub/point.hpp"
#include "skewbisub/rational.hpp"

namespace skewbisub {

struct BruteForceMin {
  Labeling minimizer;  ///< lexicographically first among ties
  Rational value;
};

BruteForceMin brute_force_min(const ValueOracle& f,
                              std::size_t cap = kDefaultEnumerationCap);

/// Lexicographic order on labelings ('-' < '0' < '+').
struct LexicographicLess {
  bool operator()(const Labeling& a, const Labeling& b) const {
    return a.labels() < b.labels();
  }
};

struct ClosureResult {
  Rational value;
  /// One optimal basic distribution; zero-weight labelings omitted.
  std::map<Labeling, Rational, LexicographicLess> distribution;
};

inline constexpr std::size_t kDefaultClosureCap = 243;  // 3^5 LP columns

/// f^-(x) = min { sum_a lambda(a) f(a) : lambda >= 0, sum lambda = 1,
/// sum lambda(a) numeric(a) = x }, solved exactly. Throws CapExceeded when
/// 3^n > cap and InternalError if the LP is infeasible (impossible for x in
/// the box).
ClosureResult convex_closure(const ValueOracle& f, const FractionalPoint& x,
                             std::size_t cap = kDefaultClosureCap);

/// Random point on the grid of denominator 1024 clamped to [-alpha, 1]^n.
FractionalPoint random_box_point(std::size_t n, const Alpha& alpha,
                                 std::mt19937_64& rng);

/// Random strictly decreasing chain of 1..n+1 labelings sharing one random
/// sign pattern, with random positive rational weights summing to 1.
ChainDecomposition random_chain_distribution(std::size_t n, std::mt19937_64& rng);

/// f^L((x+y)/2) - (f^L(x) + f^L(y))/2; positive means a convexity violation.
Rational midpoint_gap(const ValueOracle& f, const FractionalPoint& x,
                      const FractionalPoint& y);

struct ConvexityViolation {
  FractionalPoint x;
  FractionalPoint y;
  Rational gap;  ///< strictly positive
};

/// Samples `trials` random pairs and returns the first with a positive
/// midpoint gap, if any.
std::optional<ConvexityViolation> midpoint_convexity_probe(
    const ValueOracle& f, std::size_t trials, std::uint64_t seed);

}  // namespace skewbisub
