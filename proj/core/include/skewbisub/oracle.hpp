#pragma once

// Value-oracle access to functions D^n -> Q and the two concrete
// representations: an explicit table and a sum of low-arity tables.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "skewbisub/lattice.hpp"
#include "skewbisub/rational.hpp"

namespace skewbisub {

/// A function D^n -> Q reachable only through evaluate(). Every evaluate()
/// call bumps call_count() by exactly one; the counter is atomic so that
/// concurrent readers leave an exact total once they quiesce.
class ValueOracle {
 public:
  ValueOracle(std::size_t arity, Alpha alpha);
  ValueOracle(const ValueOracle& other);
  ValueOracle& operator=(const ValueOracle& other);
  virtual ~ValueOracle() = default;

  /// Throws InvalidArgument if a.size() != arity().
  Rational evaluate(const Labeling& a) const;

  std::size_t arity() const noexcept { return arity_; }
  const Alpha& alpha() const noexcept { return alpha_; }

  std::uint64_t call_count() const noexcept {
    return calls_.load(std::memory_order_relaxed);
  }
  void reset_call_count() const noexcept { calls_.store(0, std::memory_order_relaxed); }

 protected:
  /// Uncounted evaluation; `a` has already been arity-checked.
  virtual Rational value(const Labeling& a) const = 0;

 private:
  std::size_t arity_;
  Alpha alpha_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

/// Explicit table over all 3^n labelings, indexed by index_of().
class TableFunction final : public ValueOracle {
 public:
  /// `values` must hold exactly 3^arity entries (InvalidArgument otherwise).
  TableFunction(std::size_t arity, Alpha alpha, std::vector<Rational> values);

  /// Uncounted lookups, for callers that own the table.
  const Rational& at(const Labeling& a) const;
  const Rational& at_index(std::size_t index) const { return values_[index]; }
  std::span<const Rational> values() const noexcept { return values_; }

 protected:
  Rational value(const Labeling& a) const override;

 private:
  std::vector<Rational> values_;
};

/// One summand of a SumFunction: a table over the coordinates in `scope`.
struct Term {
  std::vector<std::size_t> scope;
  TableFunction table;
};

/// f(x) = sum over terms of term.table(x restricted to term.scope).
class SumFunction final : public ValueOracle {
 public:
  /// Validates scopes: indices in [0, arity), distinct within a term, and
  /// scope length equal to the term table's arity.
  SumFunction(std::size_t arity, Alpha alpha, std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }

 protected:
  Rational value(const Labeling& a) const override;

 private:
  std::vector<Term> terms_;
};

/// Materializes all 3^n values of `f` through its oracle.
/// Throws CapExceeded when 3^n > cap.
TableFunction expand_to_table(const ValueOracle& f,
                              std::size_t cap = kDefaultEnumerationCap);

}  // namespace skewbisub
