#include "skewbisub/generator.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "skewbisub/bisubmodularity.hpp"
#include "skewbisub/errors.hpp"

namespace skewbisub {

TableFunction random_table(std::size_t arity, const Alpha& alpha,
                           std::int64_t lo, std::int64_t hi,
                           std::mt19937_64& rng) {
  if (lo > hi) throw InvalidArgument("empty value range");
  std::uniform_int_distribution<std::int64_t> value(lo, hi);
  const std::size_t count = labeling_count(arity);
  std::vector<Rational> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    values.emplace_back(static_cast<long>(value(rng)));
  }
  return TableFunction(arity, alpha, std::move(values));
}

SumFunction generate_instance(std::size_t n, const Alpha& alpha,
                              std::size_t num_terms, std::size_t max_scope,
                              std::uint64_t seed,
                              const GeneratorOptions& options) {
  if (n == 0) throw InvalidArgument("generate_instance: n must be >= 1");
  if (num_terms == 0) {
    throw InvalidArgument("generate_instance: num_terms must be >= 1");
  }
  if (max_scope != 1 && max_scope != 2) {
    throw InvalidArgument("generate_instance: max_scope must be 1 or 2");
  }
  if (options.value_min > options.value_max) {
    throw InvalidArgument("generate_instance: empty value range");
  }

  std::mt19937_64 rng(seed);
  const std::size_t widest = std::min(max_scope, n);
  std::uniform_int_distribution<std::size_t> scope_size(1, widest);

  std::vector<std::size_t> coordinates(n);
  std::iota(coordinates.begin(), coordinates.end(), std::size_t{0});

  std::vector<Term> terms;
  terms.reserve(num_terms);
  for (std::size_t t = 0; t < num_terms; ++t) {
    const std::size_t k = scope_size(rng);
    std::vector<std::size_t> scope;
    std::sample(coordinates.begin(), coordinates.end(),
                std::back_inserter(scope), k, rng);

    bool accepted = false;
    for (std::size_t draw = 0; draw < options.max_draws_per_term; ++draw) {
      TableFunction table =
          random_table(k, alpha, options.value_min, options.value_max, rng);
      if (!check_alpha_bisubmodular(table)) {
        terms.push_back(Term{std::move(scope), std::move(table)});
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      throw CapExceeded("generate_instance: term " + std::to_string(t) +
                        " exhausted " +
                        std::to_string(options.max_draws_per_term) +
                        " rejection-sampling draws");
    }
  }
  return SumFunction(n, alpha, std::move(terms));
}

}  // namespace skewbisub
