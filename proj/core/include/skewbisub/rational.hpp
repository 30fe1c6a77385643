#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace skewbisub {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (optional leading sign, q > 0 after
/// normalization). Throws FormatError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

/// The skew parameter alpha in (0, 1].
class Alpha {
 public:
  /// Throws InvalidArgument unless 0 < value <= 1.
  explicit Alpha(Rational value);

  static Alpha parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  std::string str() const { return to_string(value_); }

  friend bool operator==(const Alpha& lhs, const Alpha& rhs) {
    return lhs.value_ == rhs.value_;
  }

 private:
  Rational value_;
};

}  // namespace skewbisub
