#pragma once

// The three-element domain {-alpha, 0, 1}, its partial order and the
// operations meet0 / join0 / join1, all lifted componentwise to D^n.
//
// Labels are symbolic. The numeric value of Neg depends on alpha and is only
// produced by numeric().

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "skewbisub/rational.hpp"

namespace skewbisub {

/// Neg stands for -alpha, Zero for 0, Pos for 1. The enumerator order is the
/// lexicographic order used for enumeration and tie-breaking ('-' < '0' < '+').
enum class Label : std::uint8_t { Neg = 0, Zero = 1, Pos = 2 };

inline constexpr Label kAllLabels[] = {Label::Neg, Label::Zero, Label::Pos};

char to_char(Label label) noexcept;
/// Accepts '-', '0', '+'; throws FormatError otherwise.
Label label_from_char(char c);

/// Strict order: Zero < Pos and Zero < Neg; Pos and Neg are incomparable.
constexpr bool less(Label a, Label b) noexcept {
  return a == Label::Zero && b != Label::Zero;
}
constexpr bool less_equal(Label a, Label b) noexcept {
  return a == b || less(a, b);
}

Rational numeric(Label label, const Alpha& alpha);

/// A point of D^n.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::size_t arity, Label fill = Label::Zero)
      : labels_(arity, fill) {}
  explicit Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {}
  Labeling(std::initializer_list<Label> labels) : labels_(labels) {}

  /// Parses the '-','0','+' text encoding, e.g. "+0-".
  static Labeling parse(std::string_view text);

  std::string str() const;

  std::size_t size() const noexcept { return labels_.size(); }
  Label operator[](std::size_t i) const { return labels_[i]; }
  Label& operator[](std::size_t i) { return labels_[i]; }
  auto begin() const noexcept { return labels_.begin(); }
  auto end() const noexcept { return labels_.end(); }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  bool is_zero() const noexcept;
  /// Number of non-Zero coordinates.
  std::size_t support_size() const noexcept;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> labels_;
};

/// Componentwise a <= b. Throws InvalidArgument on arity mismatch.
bool less_equal(const Labeling& a, const Labeling& b);
/// a <= b and a != b.
bool less(const Labeling& a, const Labeling& b);
bool comparable(const Labeling& a, const Labeling& b);

/// Componentwise meet: Pos/Neg clash goes to Zero, otherwise the minimum.
Label meet0(Label a, Label b) noexcept;
Labeling meet0(const Labeling& a, const Labeling& b);

/// Componentwise join with the Pos/Neg clash sent to `tiebreak`, which must be
/// Zero (join0) or Pos (join1); Neg is rejected with InvalidArgument.
Label join(Label a, Label b, Label tiebreak);
Labeling join(const Labeling& a, const Labeling& b, Label tiebreak);

std::vector<Rational> numeric(const Labeling& a, const Alpha& alpha);

/// numeric(a meet0 b) + alpha numeric(a join0 b) + (1 - alpha) numeric(a join1 b)
/// == numeric(a) + numeric(b), evaluated exactly.
bool vector_identity_holds(const Labeling& a, const Labeling& b,
                           const Alpha& alpha);

// Enumeration of D^n. Index order equals lexicographic order of the text
// encoding with '-' < '0' < '+', first coordinate most significant.

inline constexpr std::size_t kDefaultEnumerationCap = 6561;  // 3^8

/// 3^n; throws CapExceeded if it exceeds `cap`.
std::size_t labeling_count(std::size_t arity,
                           std::size_t cap = kDefaultEnumerationCap);
std::size_t index_of(const Labeling& a);
Labeling labeling_at(std::size_t index, std::size_t arity);

}  // namespace skewbisub

template <>
struct std::hash<skewbisub::Labeling> {
  std::size_t operator()(const skewbisub::Labeling& a) const noexcept {
    std::size_t h = a.size();
    for (auto l : a) h = h * 31 + static_cast<std::size_t>(l) + 1;
    return h;
  }
};
