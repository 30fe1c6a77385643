#pragma once

// Oracle-model minimization of alpha-bisubmodular functions: projected
// subgradient descent on f^L over [-alpha, 1]^n, rounding every iterate
// through the support of its chain decomposition.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "skewbisub/lattice.hpp"
#include "skewbisub/oracle.hpp"
#include "skewbisub/point.hpp"
#include "skewbisub/rational.hpp"

namespace skewbisub {

struct StepRule {
  enum class Kind { Fixed, Diminishing };
  Kind kind = Kind::Diminishing;
  /// Fixed: the step gamma. Diminishing: gamma_0 in gamma_0 / sqrt(t).
  /// A non-positive value selects the automatic gamma_0 (diminishing only).
  double gamma = 0.0;

  static StepRule fixed(double gamma) { return {Kind::Fixed, gamma}; }
  static StepRule diminishing(double gamma0 = 0.0) {
    return {Kind::Diminishing, gamma0};
  }
};

struct MinimizeConfig {
  /// Defaults to 200 n^2.
  std::optional<std::size_t> max_iters;
  StepRule step;
  /// Stop once best - lower_bound <= tolerance. Zero runs every iteration.
  Rational tolerance = 0;
  /// Seeds the start point when random_start is set.
  std::uint64_t seed = 0;
  bool random_start = false;
  /// Start point; the origin when absent (and random_start is false).
  std::optional<FractionalPoint> start;
  /// Iterates are rounded to multiples of 2^-denominator_bits.
  unsigned denominator_bits = 20;
};

struct MinimizeReport {
  Labeling minimizer;
  Rational value;  ///< f(minimizer), exact
  std::size_t iterations_used = 0;
  std::uint64_t oracle_calls = 0;  ///< delta of f.call_count() over the run
  /// (iteration, value) at every strict improvement of the discrete best.
  std::vector<std::pair<std::size_t, Rational>> trajectory_best;
  /// Smallest f^L over the visited iterates (>= value).
  Rational best_extension_value;
  /// max_t min_{y in box} f^L(x_t) + g_t.(y - x_t); a lower bound on min f
  /// when f is alpha-bisubmodular.
  Rational lower_bound;
};

/// Euclidean projection onto [-alpha, 1]^n followed by rounding to
/// multiples of 2^-denominator_bits (then clamped again, exactly).
FractionalPoint project_box(std::span<const double> x, const Alpha& alpha,
                            unsigned denominator_bits = 20);

/// Automatic gamma_0: alpha / (max - min) of f over the origin and the 2n
/// unit labelings, or 1 when that range is zero.
double default_initial_step(const ValueOracle& f);

/// Runs projected subgradient descent and returns the best discrete candidate
/// seen on any iterate's chain support. The optimality guarantee needs f to be
/// alpha-bisubmodular; the routine runs regardless. Throws InvalidArgument on
/// an arity mismatch of cfg.start or a non-positive fixed step, and
/// InternalError on a non-finite iterate.
MinimizeReport minimize(const ValueOracle& f, const MinimizeConfig& cfg = {});

}  // namespace skewbisub
