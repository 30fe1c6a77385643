#include "skewbisub/oracle.hpp"

#include <algorithm>
#include <limits>

#include "skewbisub/errors.hpp"

namespace skewbisub {

ValueOracle::ValueOracle(std::size_t arity, Alpha alpha)
    : arity_(arity), alpha_(std::move(alpha)) {
  if (arity_ == 0) throw InvalidArgument("function arity must be >= 1");
}

ValueOracle::ValueOracle(const ValueOracle& other)
    : arity_(other.arity_), alpha_(other.alpha_), calls_(other.call_count()) {}

ValueOracle& ValueOracle::operator=(const ValueOracle& other) {
  arity_ = other.arity_;
  alpha_ = other.alpha_;
  calls_.store(other.call_count(), std::memory_order_relaxed);
  return *this;
}

Rational ValueOracle::evaluate(const Labeling& a) const {
  if (a.size() != arity_) {
    throw InvalidArgument("oracle of arity " + std::to_string(arity_) +
                          " queried at labeling of length " +
                          std::to_string(a.size()));
  }
  calls_.fetch_add(1, std::memory_order_relaxed);
  return value(a);
}

TableFunction::TableFunction(std::size_t arity, Alpha alpha,
                             std::vector<Rational> values)
    : ValueOracle(arity, std::move(alpha)), values_(std::move(values)) {
  const std::size_t expected =
      labeling_count(arity, std::numeric_limits<std::size_t>::max() / 3);
  if (values_.size() != expected) {
    throw InvalidArgument("table of arity " + std::to_string(arity) +
                          " needs " + std::to_string(expected) +
                          " values, got " + std::to_string(values_.size()));
  }
}

const Rational& TableFunction::at(const Labeling& a) const {
  if (a.size() != arity()) throw InvalidArgument("arity mismatch in table lookup");
  return values_[index_of(a)];
}

Rational TableFunction::value(const Labeling& a) const {
  return values_[index_of(a)];
}

SumFunction::SumFunction(std::size_t arity, Alpha alpha, std::vector<Term> terms)
    : ValueOracle(arity, std::move(alpha)), terms_(std::move(terms)) {
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    const auto& term = terms_[t];
    if (term.scope.size() != term.table.arity()) {
      throw InvalidArgument("term " + std::to_string(t) +
                            ": scope length does not match table arity");
    }
    if (!(term.table.alpha() == this->alpha())) {
      throw InvalidArgument("term " + std::to_string(t) + ": alpha mismatch");
    }
    for (std::size_t i = 0; i < term.scope.size(); ++i) {
      if (term.scope[i] >= arity) {
        throw InvalidArgument("term " + std::to_string(t) + ": scope index " +
                              std::to_string(term.scope[i]) +
                              " out of range");
      }
      for (std::size_t k = 0; k < i; ++k) {
        if (term.scope[k] == term.scope[i]) {
          throw InvalidArgument("term " + std::to_string(t) +
                                ": repeated scope index " +
                                std::to_string(term.scope[i]));
        }
      }
    }
  }
}

Rational SumFunction::value(const Labeling& a) const {
  Rational total = 0;
  for (const auto& term : terms_) {
    std::size_t index = 0;
    for (auto j : term.scope) index = index * 3 + static_cast<std::size_t>(a[j]);
    total += term.table.at_index(index);
  }
  return total;
}

TableFunction expand_to_table(const ValueOracle& f, std::size_t cap) {
  const std::size_t count = labeling_count(f.arity(), cap);
  std::vector<Rational> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    values.push_back(f.evaluate(labeling_at(i, f.arity())));
  }
  return TableFunction(f.arity(), f.alpha(), std::move(values));
}

}  // namespace skewbisub
