#include <doctest.h>

#include "oracles.hpp"
#include "skewbisub/errors.hpp"
#include "skewbisub/lattice.hpp"
#include "skewbisub/point.hpp"

using namespace skewbisub;

namespace {

const Alpha kHalf = Alpha::parse("1/2");

std::vector<Alpha> test_alphas() {
  return {Alpha::parse("1/4"), Alpha::parse("1/2"), Alpha::parse("3/4"),
          Alpha::parse("1"), Alpha::parse("2/7")};
}

}  // namespace

TEST_CASE("order on labels") {
  CHECK(less(Label::Zero, Label::Pos));
  CHECK(less(Label::Zero, Label::Neg));
  CHECK_FALSE(less(Label::Pos, Label::Neg));
  CHECK_FALSE(less(Label::Neg, Label::Pos));
  CHECK_FALSE(less(Label::Zero, Label::Zero));
  CHECK_FALSE(less(Label::Pos, Label::Zero));
}

TEST_CASE("componentwise order is a strict partial order") {
  const std::size_t n = 2;
  const std::size_t count = labeling_count(n);
  for (std::size_t i = 0; i < count; ++i) {
    const Labeling a = labeling_at(i, n);
    CHECK_FALSE(less(a, a));
    for (std::size_t j = 0; j < count; ++j) {
      const Labeling b = labeling_at(j, n);
      if (less(a, b)) CHECK_FALSE(less(b, a));
      for (std::size_t k = 0; k < count; ++k) {
        const Labeling c = labeling_at(k, n);
        if (less(a, b) && less(b, c)) CHECK(less(a, c));
      }
    }
  }
  CHECK_THROWS_AS(less(Labeling::parse("+"), Labeling::parse("++")), InvalidArgument);
}

TEST_CASE("meet0 and joins on small examples") {
  CHECK(meet0(Labeling::parse("+"), Labeling::parse("-")) == Labeling::parse("0"));
  CHECK(meet0(Labeling::parse("+0"), Labeling::parse("+-")) == Labeling::parse("+0"));
  CHECK(join(Labeling::parse("+"), Labeling::parse("-"), Label::Zero) == Labeling::parse("0"));
  CHECK(join(Labeling::parse("+"), Labeling::parse("-"), Label::Pos) == Labeling::parse("+"));
  CHECK(join(Labeling::parse("0-"), Labeling::parse("--"), Label::Zero) == Labeling::parse("--"));
}

TEST_CASE("operation errors") {
  CHECK_THROWS_AS(join(Labeling::parse("+"), Labeling::parse("-"), Label::Neg), InvalidArgument);
  CHECK_THROWS_AS(join(Label::Pos, Label::Neg, Label::Neg), InvalidArgument);
  CHECK_THROWS_AS(meet0(Labeling::parse("+0"), Labeling::parse("+")), InvalidArgument);
  CHECK_THROWS_AS(join(Labeling::parse("+0"), Labeling::parse("+"), Label::Pos),
                  InvalidArgument);
}

TEST_CASE("operations agree with the transcribed tables and are commutative, idempotent") {
  for (Label a : kAllLabels) {
    CHECK(meet0(a, a) == a);
    CHECK(join(a, a, Label::Zero) == a);
    CHECK(join(a, a, Label::Pos) == a);
    for (Label b : kAllLabels) {
      CHECK(meet0(a, b) == testing::table_meet0(a, b));
      CHECK(join(a, b, Label::Zero) == testing::table_join(a, b, Label::Zero));
      CHECK(join(a, b, Label::Pos) == testing::table_join(a, b, Label::Pos));
      CHECK(meet0(a, b) == meet0(b, a));
      CHECK(join(a, b, Label::Zero) == join(b, a, Label::Zero));
      CHECK(join(a, b, Label::Pos) == join(b, a, Label::Pos));
    }
  }
}

TEST_CASE("meet0 <= join0 <= join1 for every pair") {
  const std::size_t n = 3;
  const std::size_t count = labeling_count(n);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      const Labeling a = labeling_at(i, n), b = labeling_at(j, n);
      const Labeling m = meet0(a, b), j0 = join(a, b, Label::Zero), j1 = join(a, b, Label::Pos);
      CHECK(less_equal(m, j0));
      CHECK(less_equal(j0, j1));
    }
  }
}

TEST_CASE("vector identity holds exactly, checked coordinate-wise from numeric values") {
  for (const Alpha& alpha : test_alphas()) {
    const std::size_t n = 3;
    const std::size_t count = labeling_count(n);
    const Rational& w = alpha.value();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        const Labeling a = labeling_at(i, n), b = labeling_at(j, n);
        const auto m = numeric(meet0(a, b), alpha);
        const auto j0 = numeric(join(a, b, Label::Zero), alpha);
        const auto j1 = numeric(join(a, b, Label::Pos), alpha);
        const auto xa = numeric(a, alpha), xb = numeric(b, alpha);
        for (std::size_t k = 0; k < n; ++k) {
          CHECK(m[k] + w * j0[k] + (1 - w) * j1[k] == xa[k] + xb[k]);
        }
        CHECK(vector_identity_holds(a, b, alpha));
      }
    }
  }
}

TEST_CASE("numeric rendering") {
  const auto x = numeric(Labeling::parse("+0-"), kHalf);
  CHECK(x == std::vector<Rational>{1, 0, Rational(-1, 2)});
  CHECK(numeric(Labeling::parse("000"), Alpha::parse("3/4")) == std::vector<Rational>(3));
  CHECK(numeric(Labeling::parse("-"), Alpha::parse("1")) == std::vector<Rational>{-1});
}

TEST_CASE("text encoding") {
  CHECK(Labeling::parse("+0-").str() == "+0-");
  CHECK(Labeling::parse("+0-")[2] == Label::Neg);
  CHECK_THROWS_AS(Labeling::parse("+x"), FormatError);
}

TEST_CASE("enumeration index follows '-' < '0' < '+' lexicographic order") {
  CHECK(labeling_at(0, 3).str() == "---");
  CHECK(labeling_at(1, 3).str() == "--0");
  CHECK(labeling_at(26, 3).str() == "+++");
  const std::size_t count = labeling_count(4);
  for (std::size_t i = 0; i < count; ++i) {
    CHECK(index_of(labeling_at(i, 4)) == i);
    if (i > 0) CHECK(labeling_at(i - 1, 4).labels() < labeling_at(i, 4).labels());
  }
  CHECK(labeling_count(8) == 6561);
  CHECK_THROWS_AS(labeling_count(9), CapExceeded);
  CHECK(labeling_count(9, 19683) == 19683);
}

TEST_CASE("alpha and rational parsing") {
  CHECK(Alpha::parse("2/4").value() == Rational(1, 2));
  CHECK(Alpha::parse("1").value() == 1);
  CHECK_THROWS_AS(Alpha::parse("0"), InvalidArgument);
  CHECK_THROWS_AS(Alpha::parse("-1/2"), InvalidArgument);
  CHECK_THROWS_AS(Alpha::parse("3/2"), InvalidArgument);
  CHECK(parse_rational("-7/14") == Rational(-1, 2));
  CHECK(to_string(parse_rational("6/3")) == "2");
  CHECK(to_string(parse_rational("-3/5")) == "-3/5");
  CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
  CHECK_THROWS_AS(parse_rational("1.5"), FormatError);
  CHECK_THROWS_AS(parse_rational(""), FormatError);
  CHECK_THROWS_AS(parse_rational("1/-2"), FormatError);
}

TEST_CASE("fractional points stay in the box") {
  CHECK_NOTHROW(FractionalPoint::parse("3/5,-1/5", kHalf));
  CHECK_THROWS_AS(FractionalPoint::parse("1,-3/4", kHalf), InvalidArgument);
  CHECK_THROWS_AS(FractionalPoint::parse("2", kHalf), InvalidArgument);
  CHECK_THROWS_AS(FractionalPoint::parse("1,a", kHalf), FormatError);
  const auto x = FractionalPoint::parse("1, -1/2", kHalf);
  CHECK(x.str() == "1,-1/2");
  CHECK(midpoint(x, FractionalPoint::zero(2, kHalf)).str() == "1/2,-1/4");
}
