#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "skewbisub/oracle.hpp"
#include "skewbisub/rational.hpp"

namespace skewbisub {

struct GeneratorOptions {
  std::int64_t value_min = -10;
  std::int64_t value_max = 10;
  /// Rejection-sampling budget per term.
  std::size_t max_draws_per_term = 10000;
};

/// Table of the given arity with integer entries uniform in [lo, hi]; no
/// bisubmodularity filtering.
TableFunction random_table(std::size_t arity, const Alpha& alpha,
                           std::int64_t lo, std::int64_t hi,
                           std::mt19937_64& rng);

/// Random alpha-bisubmodular SumFunction: `num_terms` terms, each over a
/// scope of 1..min(max_scope, n) distinct coordinates drawn uniformly
/// without replacement, with a table accepted by check_alpha_bisubmodular
/// after rejection sampling. Deterministic in `seed`.
///
/// Throws InvalidArgument on n == 0, num_terms == 0, max_scope outside
/// {1, 2} or an empty value range, and CapExceeded when a term exhausts its
/// draw budget.
SumFunction generate_instance(std::size_t n, const Alpha& alpha,
                              std::size_t num_terms, std::size_t max_scope,
                              std::uint64_t seed,
                              const GeneratorOptions& options = {});

}  // namespace skewbisub
