#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "skewbisub/bisubmodularity.hpp"
#include "skewbisub/desk_oracles.hpp"
#include "skewbisub/detail/simplex.hpp"
#include "skewbisub/errors.hpp"
#include "skewbisub/generator.hpp"

using namespace skewbisub;
using detail::LpStatus;
using detail::solve_standard_form;

TEST_CASE("simplex on small programs") {
  // min -x - y  s.t. x + y + s = 4, x + 3y + t = 6
  const auto r = solve_standard_form({{1, 1, 1, 0}, {1, 3, 0, 1}}, {4, 6}, {-1, -1, 0, 0});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == -4);

  // Redundant equality rows.
  const auto red = solve_standard_form({{1, 1}, {2, 2}}, {1, 2}, {3, 1});
  REQUIRE(red.status == LpStatus::Optimal);
  CHECK(red.objective == 1);
  CHECK(red.solution == std::vector<Rational>{0, 1});

  CHECK(solve_standard_form({{1, 1}}, {-1}, {0, 0}).status == LpStatus::Infeasible);
  CHECK(solve_standard_form({{1, -1}}, {1}, {0, -1}).status == LpStatus::Unbounded);

  // Fractional optimum.
  const auto frac = solve_standard_form({{3, 2, 1}}, {1}, {1, 1, 5});
  REQUIRE(frac.status == LpStatus::Optimal);
  CHECK(frac.objective == Rational(1, 3));
}

TEST_CASE("brute force returns the lexicographically first minimizer") {
  const Alpha half = Alpha::parse("1/2");
  const TableFunction c(3, half, std::vector<Rational>(27, 4));
  const auto r = brute_force_min(c);
  CHECK(r.minimizer.str() == "---");
  CHECK(r.value == 4);

  std::vector<Rational> lin;
  for (std::size_t i = 0; i < 27; ++i) {
    const auto v = numeric(labeling_at(i, 3), half);
    lin.push_back(v[0] + v[1] + v[2]);
  }
  const auto l = brute_force_min(TableFunction(3, half, lin));
  CHECK(l.minimizer.str() == "---");
  CHECK(l.value == Rational(-3, 2));

  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    const auto f = random_table(2, half, -3, 3, rng);
    const auto values = testing::all_values(f);
    const auto b = brute_force_min(f);
    CHECK(b.value == testing::table_min(values));
    for (std::size_t k = 0; k < index_of(b.minimizer); ++k) CHECK(values[k] > b.value);
  }
  CHECK_THROWS_AS(brute_force_min(SumFunction(9, half, {Term{{0}, TableFunction(1, half, {0, 0, 0})}})),
                  CapExceeded);
}

TEST_CASE("convex closure agrees with the extension on generated instances") {
  std::mt19937_64 rng(41);
  const char* alphas[] = {"1/4", "1/2", "3/4", "1"};
  for (int inst = 0; inst < 16; ++inst) {
    const Alpha alpha = Alpha::parse(alphas[inst % 4]);
    const std::size_t n = 1 + inst % 3;
    const auto f = generate_instance(n, alpha, 2 * n, 2, 500 + inst);
    for (int p = 0; p < 5; ++p) {
      const auto x = random_box_point(n, alpha, rng);
      const auto closure = convex_closure(f, x);
      CHECK(closure.value == extension_value(f, x));
      // The returned distribution is feasible and attains the value.
      Rational total = 0, value = 0;
      std::vector<Rational> mean(n);
      for (const auto& [u, w] : closure.distribution) {
        CHECK(w > 0);
        total += w;
        value += w * f.evaluate(u);
        const auto v = numeric(u, alpha);
        for (std::size_t j = 0; j < n; ++j) mean[j] += w * v[j];
      }
      CHECK(total == 1);
      CHECK(value == closure.value);
      CHECK(mean == testing::vec(x.coords()));
    }
  }
}

TEST_CASE("closure never exceeds the extension") {
  std::mt19937_64 rng(42);
  const Alpha alpha = Alpha::parse("1/2");
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 2;
    const auto f = random_table(n, alpha, -5, 5, rng);
    const auto x = random_box_point(n, alpha, rng);
    CHECK(convex_closure(f, x).value <= extension_value(f, x));
  }
  // Unary spike: closure at 0 uses the endpoints, extension reads f(0).
  const TableFunction spike(1, alpha, {0, 1, 0});
  const auto zero = FractionalPoint::zero(1, alpha);
  CHECK(convex_closure(spike, zero).value == 0);
  CHECK(extension_value(spike, zero) == 1);
  CHECK_THROWS_AS(convex_closure(TableFunction(6, alpha, std::vector<Rational>(729)),
                                 FractionalPoint::zero(6, alpha)),
                  CapExceeded);
}

TEST_CASE("random box points and chains") {
  std::mt19937_64 rng(3);
  const Alpha alpha = Alpha::parse("1/3");
  for (int i = 0; i < 200; ++i) {
    const auto x = random_box_point(3, alpha, rng);
    for (const auto& v : x.coords()) {
      CHECK(v >= -alpha.value());
      CHECK(v <= 1);
      CHECK(Rational(v * 1024).get_den() == 1);
    }
    const auto d = random_chain_distribution(3, rng);
    REQUIRE_FALSE(d.atoms.empty());
    CHECK(d.atoms.size() <= 4);
    Rational total = 0;
    for (std::size_t k = 0; k < d.atoms.size(); ++k) {
      CHECK(d.atoms[k].weight > 0);
      total += d.atoms[k].weight;
      if (k > 0) CHECK(less(d.atoms[k].u, d.atoms[k - 1].u));
    }
    CHECK(total == 1);
  }
}

TEST_CASE("midpoint probe separates accepted from rejected functions") {
  const Alpha half = Alpha::parse("1/2");
  const TableFunction spike(1, half, {0, 1, 0});
  const auto w = check_alpha_bisubmodular(spike);
  REQUIRE(w);
  const auto a = FractionalPoint::vertex(w->a, half), b = FractionalPoint::vertex(w->b, half);
  CHECK(midpoint_gap(spike, a, b) > 0);
  const auto v = midpoint_convexity_probe(spike, 200, 1);
  REQUIRE(v);
  CHECK(v->gap > 0);
  CHECK(v->gap == midpoint_gap(spike, v->x, v->y));

  const auto f = generate_instance(3, half, 4, 2, 8);
  CHECK_FALSE(midpoint_convexity_probe(f, 300, 2));
}
