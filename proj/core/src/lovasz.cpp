#include "skewbisub/lovasz.hpp"

#include <algorithm>
#include <numeric>

#include "skewbisub/errors.hpp"

namespace skewbisub {

namespace {

Labeling sign_pattern(std::span<const Rational> x) {
  Labeling u(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const int s = sgn(x[j]);
    u[j] = s < 0 ? Label::Neg : (s > 0 ? Label::Pos : Label::Zero);
  }
  return u;
}

// m_j = x_j for x_j >= 0, -x_j / alpha for x_j < 0.
Rational normalized_magnitude(const Rational& xj, const Rational& alpha) {
  return sgn(xj) < 0 ? Rational(-xj / alpha) : xj;
}

}  // namespace

ChainDecomposition decompose(const FractionalPoint& x) {
  const std::size_t n = x.size();
  const Rational& alpha = x.alpha().value();
  std::vector<Rational> residual(x.coords().begin(), x.coords().end());

  ChainDecomposition d;
  Rational used = 0;
  for (std::size_t step = 0; step <= n; ++step) {
    Labeling u = sign_pattern(residual);
    if (u.is_zero()) {
      Rational rest = 1 - used;
      if (sgn(rest) > 0) d.atoms.push_back(ChainAtom{std::move(u), std::move(rest)});
      return d;
    }
    Rational weight;
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (u[j] == Label::Zero) continue;
      Rational m = normalized_magnitude(residual[j], alpha);
      if (first || m < weight) {
        weight = std::move(m);
        first = false;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (u[j] == Label::Pos) {
        residual[j] -= weight;
      } else if (u[j] == Label::Neg) {
        residual[j] += weight * alpha;
      }
    }
    used += weight;
    d.atoms.push_back(ChainAtom{std::move(u), std::move(weight)});
  }
  // Each step zeroes at least one support coordinate, so the residual is zero
  // after at most n steps.
  throw InternalError("decompose: residual did not vanish after n steps");
}

std::vector<Rational> marginals(const ChainDecomposition& d,
                                const Alpha& alpha) {
  if (d.atoms.empty()) return {};
  const std::size_t n = d.atoms.front().u.size();
  std::vector<Rational> x(n);
  for (const auto& atom : d.atoms) {
    for (std::size_t j = 0; j < n; ++j) {
      x[j] += atom.weight * numeric(atom.u[j], alpha);
    }
  }
  return x;
}

std::optional<std::string> find_decomposition_defect(const ChainDecomposition& d,
                                                     const FractionalPoint& x) {
  const std::size_t n = x.size();
  if (d.atoms.empty()) return "no atoms";
  if (d.atoms.size() > n + 1) {
    return std::to_string(d.atoms.size()) + " atoms exceed n + 1";
  }
  Rational total = 0;
  for (std::size_t i = 0; i < d.atoms.size(); ++i) {
    const auto& atom = d.atoms[i];
    if (atom.u.size() != n) return "atom " + std::to_string(i) + " has wrong arity";
    if (sgn(atom.weight) <= 0) return "atom " + std::to_string(i) + " has non-positive weight";
    if (i > 0 && !less(atom.u, d.atoms[i - 1].u)) {
      return "atom " + std::to_string(i) + " is not strictly below its predecessor";
    }
    total += atom.weight;
  }
  if (total != 1) return "weights sum to " + to_string(total);
  const auto mean = marginals(d, x.alpha());
  for (std::size_t j = 0; j < n; ++j) {
    if (mean[j] != x[j]) {
      return "marginal " + std::to_string(j) + " is " + to_string(mean[j]) +
             ", expected " + to_string(x[j]);
    }
  }
  return std::nullopt;
}

Rational extension_value(const ValueOracle& f, const FractionalPoint& x) {
  if (f.arity() != x.size()) {
    throw InvalidArgument("extension_value: arity mismatch");
  }
  Rational total = 0;
  for (const auto& atom : decompose(x).atoms) {
    total += atom.weight * f.evaluate(atom.u);
  }
  return total;
}

std::vector<Labeling> maximal_chain(const FractionalPoint& x) {
  const std::size_t n = x.size();
  const Rational& alpha = x.alpha().value();

  std::vector<Rational> m(n);
  Labeling top(n);
  for (std::size_t j = 0; j < n; ++j) {
    top[j] = sgn(x[j]) < 0 ? Label::Neg : Label::Pos;
    m[j] = normalized_magnitude(x[j], alpha);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return m[a] < m[b]; });

  std::vector<Labeling> chain;
  chain.reserve(n + 1);
  chain.push_back(top);
  for (std::size_t j : order) {
    top[j] = Label::Zero;
    chain.push_back(top);
  }
  return chain;
}

LinearPiece linearize(const ValueOracle& f, const FractionalPoint& x) {
  const std::size_t n = x.size();
  if (f.arity() != n) throw InvalidArgument("linearize: arity mismatch");
  const Rational& alpha = x.alpha().value();

  LinearPiece piece;
  piece.chain = maximal_chain(x);
  piece.chain_values.reserve(n + 1);
  for (const auto& w : piece.chain) piece.chain_values.push_back(f.evaluate(w));

  piece.gradient.assign(n, Rational(0));
  for (std::size_t k = 1; k <= n; ++k) {
    // Exactly one coordinate differs between consecutive chain elements.
    std::size_t j = 0;
    while (piece.chain[k - 1][j] == piece.chain[k][j]) ++j;
    Rational step = piece.chain_values[k - 1] - piece.chain_values[k];
    if (sgn(x[j]) < 0) step = -step / alpha;
    piece.gradient[j] = std::move(step);
  }

  piece.decomposition = decompose(x);
  piece.value = 0;
  for (const auto& atom : piece.decomposition.atoms) {
    const auto it = std::find(piece.chain.begin(), piece.chain.end(), atom.u);
    if (it == piece.chain.end()) {
      throw InternalError("linearize: support atom missing from maximal chain");
    }
    piece.value += atom.weight *
                   piece.chain_values[static_cast<std::size_t>(
                       it - piece.chain.begin())];
  }
  return piece;
}

std::vector<Rational> subgradient(const ValueOracle& f,
                                  const FractionalPoint& x) {
  return linearize(f, x).gradient;
}

}  // namespace skewbisub
