#include "skewbisub/lattice.hpp"

#include <algorithm>
#include <limits>

#include "skewbisub/errors.hpp"

namespace skewbisub {

namespace {

void require_same_arity(const Labeling& a, const Labeling& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("arity mismatch: " + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()));
  }
}

}  // namespace

char to_char(Label label) noexcept {
  switch (label) {
    case Label::Neg:
      return '-';
    case Label::Zero:
      return '0';
    case Label::Pos:
      return '+';
  }
  return '?';
}

Label label_from_char(char c) {
  switch (c) {
    case '-':
      return Label::Neg;
    case '0':
      return Label::Zero;
    case '+':
      return Label::Pos;
    default:
      throw FormatError(std::string("invalid label character '") + c +
                        "' (expected '-', '0' or '+')");
  }
}

Rational numeric(Label label, const Alpha& alpha) {
  switch (label) {
    case Label::Neg:
      return -alpha.value();
    case Label::Zero:
      return 0;
    case Label::Pos:
      return 1;
  }
  return 0;
}

Labeling Labeling::parse(std::string_view text) {
  std::vector<Label> labels;
  labels.reserve(text.size());
  for (char c : text) labels.push_back(label_from_char(c));
  return Labeling(std::move(labels));
}

std::string Labeling::str() const {
  std::string s;
  s.reserve(labels_.size());
  for (auto l : labels_) s.push_back(to_char(l));
  return s;
}

bool Labeling::is_zero() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(),
                     [](Label l) { return l == Label::Zero; });
}

std::size_t Labeling::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      labels_.begin(), labels_.end(), [](Label l) { return l != Label::Zero; }));
}

bool less_equal(const Labeling& a, const Labeling& b) {
  require_same_arity(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!less_equal(a[i], b[i])) return false;
  }
  return true;
}

bool less(const Labeling& a, const Labeling& b) {
  return less_equal(a, b) && a != b;
}

bool comparable(const Labeling& a, const Labeling& b) {
  return less_equal(a, b) || less_equal(b, a);
}

Label meet0(Label a, Label b) noexcept {
  if (a == b) return a;
  // Any distinct pair either involves Zero (the minimum) or is the clash.
  return Label::Zero;
}

Labeling meet0(const Labeling& a, const Labeling& b) {
  require_same_arity(a, b);
  Labeling out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = meet0(a[i], b[i]);
  return out;
}

Label join(Label a, Label b, Label tiebreak) {
  if (tiebreak == Label::Neg) {
    throw InvalidArgument("join tiebreak must be Zero or Pos");
  }
  if (a == b) return a;
  if (a == Label::Zero) return b;
  if (b == Label::Zero) return a;
  return tiebreak;
}

Labeling join(const Labeling& a, const Labeling& b, Label tiebreak) {
  require_same_arity(a, b);
  if (tiebreak == Label::Neg) {
    throw InvalidArgument("join tiebreak must be Zero or Pos");
  }
  Labeling out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = join(a[i], b[i], tiebreak);
  return out;
}

std::vector<Rational> numeric(const Labeling& a, const Alpha& alpha) {
  std::vector<Rational> x;
  x.reserve(a.size());
  for (auto l : a) x.push_back(numeric(l, alpha));
  return x;
}

bool vector_identity_holds(const Labeling& a, const Labeling& b,
                           const Alpha& alpha) {
  const Labeling m = meet0(a, b);
  const Labeling j0 = join(a, b, Label::Zero);
  const Labeling j1 = join(a, b, Label::Pos);
  const Rational& w = alpha.value();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational lhs = numeric(m[i], alpha) + w * numeric(j0[i], alpha) +
                         (1 - w) * numeric(j1[i], alpha);
    if (lhs != numeric(a[i], alpha) + numeric(b[i], alpha)) return false;
  }
  return true;
}

std::size_t labeling_count(std::size_t arity, std::size_t cap) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (count > cap / 3) {
      throw CapExceeded("3^" + std::to_string(arity) +
                        " labelings exceed the enumeration cap of " +
                        std::to_string(cap));
    }
    count *= 3;
  }
  if (count > cap) {
    throw CapExceeded("3^" + std::to_string(arity) +
                      " labelings exceed the enumeration cap of " +
                      std::to_string(cap));
  }
  return count;
}

std::size_t index_of(const Labeling& a) {
  std::size_t index = 0;
  for (auto l : a) index = index * 3 + static_cast<std::size_t>(l);
  return index;
}

Labeling labeling_at(std::size_t index, std::size_t arity) {
  Labeling out(arity);
  for (std::size_t i = arity; i-- > 0;) {
    out[i] = static_cast<Label>(index % 3);
    index /= 3;
  }
  return out;
}

}  // namespace skewbisub
