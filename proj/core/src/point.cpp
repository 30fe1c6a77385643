#include "skewbisub/point.hpp"

#include "skewbisub/errors.hpp"

namespace skewbisub {

FractionalPoint::FractionalPoint(std::vector<Rational> coords, Alpha alpha)
    : coords_(std::move(coords)), alpha_(std::move(alpha)) {
  if (coords_.empty()) throw InvalidArgument("point must have arity >= 1");
  const Rational lo = -alpha_.value();
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    coords_[j].canonicalize();
    if (coords_[j] < lo || coords_[j] > 1) {
      throw InvalidArgument("coordinate " + std::to_string(j) + " = " +
                            to_string(coords_[j]) + " lies outside [" +
                            to_string(lo) + ", 1]");
    }
  }
}

FractionalPoint FractionalPoint::vertex(const Labeling& a, const Alpha& alpha) {
  return FractionalPoint(numeric(a, alpha), alpha);
}

FractionalPoint FractionalPoint::zero(std::size_t arity, const Alpha& alpha) {
  return FractionalPoint(std::vector<Rational>(arity), alpha);
}

FractionalPoint FractionalPoint::parse(std::string_view text,
                                       const Alpha& alpha) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    try {
      coords.push_back(parse_rational(item));
    } catch (const FormatError& e) {
      throw FormatError("point coordinate " + std::to_string(coords.size()) +
                        ": " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return FractionalPoint(std::move(coords), alpha);
}

std::string FractionalPoint::str() const {
  std::string s;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j) s += ',';
    s += to_string(coords_[j]);
  }
  return s;
}

FractionalPoint midpoint(const FractionalPoint& x, const FractionalPoint& y) {
  if (x.size() != y.size()) throw InvalidArgument("arity mismatch in midpoint");
  if (!(x.alpha() == y.alpha())) {
    throw InvalidArgument("alpha mismatch in midpoint");
  }
  std::vector<Rational> mid(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) mid[j] = (x[j] + y[j]) / 2;
  return FractionalPoint(std::move(mid), x.alpha());
}

}  // namespace skewbisub
