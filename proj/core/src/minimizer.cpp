#include "skewbisub/minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "skewbisub/desk_oracles.hpp"
#include "skewbisub/errors.hpp"
#include "skewbisub/lovasz.hpp"

namespace skewbisub {

FractionalPoint project_box(std::span<const double> x, const Alpha& alpha,
                            unsigned denominator_bits) {
  const Rational lo = -alpha.value();
  const double lo_d = to_double(lo);
  const double scale = std::ldexp(1.0, static_cast<int>(denominator_bits));
  mpz_class den = 1;
  den <<= denominator_bits;

  std::vector<Rational> coords;
  coords.reserve(x.size());
  for (double v : x) {
    const double clamped = std::clamp(v, lo_d, 1.0);
    Rational r(mpz_class(std::nearbyint(clamped * scale)), den);
    r.canonicalize();
    coords.push_back(std::clamp(r, lo, Rational(1)));
  }
  return FractionalPoint(std::move(coords), alpha);
}

double default_initial_step(const ValueOracle& f) {
  const std::size_t n = f.arity();
  Labeling probe(n);
  Rational lo = f.evaluate(probe);
  Rational hi = lo;
  for (std::size_t j = 0; j < n; ++j) {
    for (Label l : {Label::Pos, Label::Neg}) {
      probe[j] = l;
      const Rational v = f.evaluate(probe);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    probe[j] = Label::Zero;
  }
  const Rational range = hi - lo;
  if (sgn(range) == 0) return 1.0;
  return to_double(f.alpha().value() / range);
}

MinimizeReport minimize(const ValueOracle& f, const MinimizeConfig& cfg) {
  const std::size_t n = f.arity();
  const Alpha& alpha = f.alpha();
  const std::uint64_t calls_before = f.call_count();
  const std::size_t max_iters = cfg.max_iters.value_or(200 * n * n);
  if (max_iters == 0) throw InvalidArgument("minimize: max_iters must be >= 1");
  if (cfg.step.kind == StepRule::Kind::Fixed && !(cfg.step.gamma > 0)) {
    throw InvalidArgument("minimize: fixed step must be positive");
  }

  FractionalPoint x = FractionalPoint::zero(n, alpha);
  if (cfg.start) {
    if (cfg.start->size() != n || !(cfg.start->alpha() == alpha)) {
      throw InvalidArgument("minimize: start point does not match the oracle");
    }
    x = *cfg.start;
  } else if (cfg.random_start) {
    std::mt19937_64 rng(cfg.seed);
    x = random_box_point(n, alpha, rng);
  }

  const double gamma0 = cfg.step.gamma > 0 ? cfg.step.gamma
                                           : default_initial_step(f);

  MinimizeReport report;
  bool have_best = false;
  std::vector<double> next(n);

  for (std::size_t t = 0; t < max_iters; ++t) {
    const LinearPiece piece = linearize(f, x);
    report.iterations_used = t + 1;

    // f^L(x_t) is a convex combination of f over the support, so the best
    // support atom is never worse than the iterate.
    for (const auto& atom : piece.decomposition.atoms) {
      const auto pos = static_cast<std::size_t>(
          std::find(piece.chain.begin(), piece.chain.end(), atom.u) -
          piece.chain.begin());
      const Rational& v = piece.chain_values[pos];
      if (!have_best || v < report.value) {
        report.minimizer = atom.u;
        report.value = v;
        report.trajectory_best.emplace_back(t, v);
        have_best = true;
      }
    }

    // Affine minorant minimized over the box.
    Rational bound = piece.value;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& g = piece.gradient[j];
      const Rational target = sgn(g) > 0 ? Rational(-alpha.value()) : Rational(1);
      bound += g * (target - x[j]);
    }
    if (t == 0 || piece.value < report.best_extension_value) {
      report.best_extension_value = piece.value;
    }
    if (t == 0 || bound > report.lower_bound) report.lower_bound = bound;

    if (sgn(cfg.tolerance) > 0 &&
        report.value - report.lower_bound <= cfg.tolerance) {
      break;
    }
    if (t + 1 == max_iters) break;

    const double gamma =
        cfg.step.kind == StepRule::Kind::Fixed
            ? gamma0
            : gamma0 / std::sqrt(static_cast<double>(t + 1));
    for (std::size_t j = 0; j < n; ++j) {
      next[j] = to_double(x[j]) - gamma * to_double(piece.gradient[j]);
      if (!std::isfinite(next[j])) {
        throw InternalError("minimize: non-finite iterate at coordinate " +
                            std::to_string(j));
      }
    }
    x = project_box(next, alpha, cfg.denominator_bits);
  }

  report.oracle_calls = f.call_count() - calls_before;
  return report;
}

}  // namespace skewbisub
