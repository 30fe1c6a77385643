#include "skewbisub/rational.hpp"

#include <cctype>

#include "skewbisub/errors.hpp"

namespace skewbisub {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw FormatError("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) {
    throw FormatError("zero denominator in rational literal '" +
                      std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Alpha::Alpha(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ <= 0 || value_ > 1) {
    throw InvalidArgument("alpha must lie in (0,1], got " + to_string(value_));
  }
}

Alpha Alpha::parse(std::string_view text) { return Alpha(parse_rational(text)); }

}  // namespace skewbisub
