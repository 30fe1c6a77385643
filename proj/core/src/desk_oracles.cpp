#include "skewbisub/desk_oracles.hpp"

#include <algorithm>
#include <numeric>

#include "skewbisub/detail/simplex.hpp"
#include "skewbisub/errors.hpp"
#include "skewbisub/lovasz.hpp"

namespace skewbisub {

BruteForceMin brute_force_min(const ValueOracle& f, std::size_t cap) {
  const std::size_t count = labeling_count(f.arity(), cap);
  BruteForceMin best{labeling_at(0, f.arity()), f.evaluate(labeling_at(0, f.arity()))};
  for (std::size_t i = 1; i < count; ++i) {
    Labeling a = labeling_at(i, f.arity());
    Rational v = f.evaluate(a);
    if (v < best.value) best = BruteForceMin{std::move(a), std::move(v)};
  }
  return best;
}

ClosureResult convex_closure(const ValueOracle& f, const FractionalPoint& x,
                             std::size_t cap) {
  const std::size_t n = f.arity();
  if (x.size() != n) throw InvalidArgument("convex_closure: arity mismatch");
  const std::size_t count = labeling_count(n, cap);
  const Alpha& alpha = f.alpha();

  // Row 0: sum lambda = 1; row 1 + j: sum lambda(a) a_j = x_j.
  std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(count));
  std::vector<Rational> b(n + 1);
  std::vector<Rational> c(count);
  std::vector<Labeling> points;
  points.reserve(count);
  b[0] = 1;
  for (std::size_t j = 0; j < n; ++j) b[j + 1] = x[j];
  for (std::size_t i = 0; i < count; ++i) {
    points.push_back(labeling_at(i, n));
    A[0][i] = 1;
    for (std::size_t j = 0; j < n; ++j) A[j + 1][i] = numeric(points[i][j], alpha);
    c[i] = f.evaluate(points[i]);
  }

  const auto lp = detail::solve_standard_form(A, b, c);
  if (lp.status != detail::LpStatus::Optimal) {
    throw InternalError("convex_closure: LP not optimal at x = " + x.str());
  }
  ClosureResult result;
  result.value = lp.objective;
  for (std::size_t i = 0; i < count; ++i) {
    if (sgn(lp.solution[i]) != 0) result.distribution.emplace(points[i], lp.solution[i]);
  }
  return result;
}

FractionalPoint random_box_point(std::size_t n, const Alpha& alpha,
                                 std::mt19937_64& rng) {
  constexpr long kDenominator = 1024;
  const Rational lo = -alpha.value();
  const Rational scaled = lo * kDenominator;
  mpz_class floor_num;
  mpz_fdiv_q(floor_num.get_mpz_t(), scaled.get_num_mpz_t(),
             scaled.get_den_mpz_t());
  const long lo_num = floor_num.get_si();
  std::uniform_int_distribution<long> num(lo_num, kDenominator);
  std::vector<Rational> coords;
  coords.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational v(num(rng), kDenominator);
    v.canonicalize();
    coords.push_back(std::clamp(v, lo, Rational(1)));
  }
  return FractionalPoint(std::move(coords), alpha);
}

ChainDecomposition random_chain_distribution(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> coords(n);
  std::iota(coords.begin(), coords.end(), std::size_t{0});
  std::shuffle(coords.begin(), coords.end(), rng);
  std::bernoulli_distribution negative(0.5);
  std::vector<Label> sign(n);
  for (auto& s : sign) s = negative(rng) ? Label::Neg : Label::Pos;

  // Distinct support sizes from {0..n}, largest first.
  std::vector<std::size_t> sizes(n + 1);
  std::iota(sizes.begin(), sizes.end(), std::size_t{0});
  std::uniform_int_distribution<std::size_t> length(1, n + 1);
  std::vector<std::size_t> chosen;
  std::sample(sizes.begin(), sizes.end(), std::back_inserter(chosen), length(rng), rng);
  std::sort(chosen.rbegin(), chosen.rend());

  std::uniform_int_distribution<long> raw(1, 1000);
  std::vector<long> weights(chosen.size());
  long total = 0;
  for (auto& w : weights) total += (w = raw(rng));

  ChainDecomposition d;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    Labeling u(n);
    for (std::size_t k = 0; k < chosen[i]; ++k) u[coords[k]] = sign[coords[k]];
    Rational w(weights[i], total);
    w.canonicalize();
    d.atoms.push_back(ChainAtom{std::move(u), std::move(w)});
  }
  return d;
}

Rational midpoint_gap(const ValueOracle& f, const FractionalPoint& x,
                      const FractionalPoint& y) {
  return extension_value(f, midpoint(x, y)) -
         (extension_value(f, x) + extension_value(f, y)) / 2;
}

std::optional<ConvexityViolation> midpoint_convexity_probe(
    const ValueOracle& f, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    FractionalPoint x = random_box_point(f.arity(), f.alpha(), rng);
    FractionalPoint y = random_box_point(f.arity(), f.alpha(), rng);
    Rational gap = midpoint_gap(f, x, y);
    if (sgn(gap) > 0) {
      return ConvexityViolation{std::move(x), std::move(y), std::move(gap)};
    }
  }
  return std::nullopt;
}

}  // namespace skewbisub
