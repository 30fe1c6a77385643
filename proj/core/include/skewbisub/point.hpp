#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewbisub/lattice.hpp"
#include "skewbisub/rational.hpp"

namespace skewbisub {

/// A rational point of the box [-alpha, 1]^n.
class FractionalPoint {
 public:
  /// Throws InvalidArgument if a coordinate lies outside [-alpha, 1] or the
  /// point is empty.
  FractionalPoint(std::vector<Rational> coords, Alpha alpha);

  /// The vertex numeric(a).
  static FractionalPoint vertex(const Labeling& a, const Alpha& alpha);
  static FractionalPoint zero(std::size_t arity, const Alpha& alpha);

  /// Comma-separated rational literals, e.g. "3/5,-1/5". Malformed literals
  /// throw FormatError, out-of-box coordinates InvalidArgument.
  static FractionalPoint parse(std::string_view text, const Alpha& alpha);

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const noexcept { return coords_; }
  const Alpha& alpha() const noexcept { return alpha_; }

  std::string str() const;

  friend bool operator==(const FractionalPoint& lhs,
                         const FractionalPoint& rhs) {
    return lhs.alpha_ == rhs.alpha_ && lhs.coords_ == rhs.coords_;
  }

 private:
  std::vector<Rational> coords_;
  Alpha alpha_;
};

/// (x + y) / 2. Throws InvalidArgument on arity or alpha mismatch.
FractionalPoint midpoint(const FractionalPoint& x, const FractionalPoint& y);

}  // namespace skewbisub
