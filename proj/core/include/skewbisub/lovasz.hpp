#pragma once

// Chain decomposition of box points, the Lovasz extension f^L built on it,
// and subgradients of f^L.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skewbisub/lattice.hpp"
#include "skewbisub/oracle.hpp"
#include "skewbisub/point.hpp"
#include "skewbisub/rational.hpp"

namespace skewbisub {

struct ChainAtom {
  Labeling u;
  Rational weight;

  friend bool operator==(const ChainAtom&, const ChainAtom&) = default;
};

/// The unique chain-supported distribution on D^n with a given mean.
/// Atoms are ordered outermost first: u_1 > u_2 > ... > u_k, weights > 0
/// summing to 1, at most n + 1 atoms, and the all-Zero labeling (if present)
/// is last.
struct ChainDecomposition {
  std::vector<ChainAtom> atoms;

  friend bool operator==(const ChainDecomposition&,
                         const ChainDecomposition&) = default;
};

/// Greedy sign-pattern recursion. At each step the current residual's sign
/// pattern u gets weight min(min{-x_j/alpha : x_j < 0}, min{x_j : x_j > 0}),
/// u is subtracted with that weight, and once the residual vanishes the
/// all-Zero labeling takes the remaining mass (dropped when zero).
ChainDecomposition decompose(const FractionalPoint& x);

/// sum_i weight_i * numeric(u_i); equals the decomposed point exactly.
std::vector<Rational> marginals(const ChainDecomposition& d, const Alpha& alpha);

/// Describes the first violated ChainDecomposition invariant for source
/// point x (strict chain, positive weights summing to 1, at most n + 1 atoms,
/// exact marginals), or nullopt when all hold.
std::optional<std::string> find_decomposition_defect(const ChainDecomposition& d,
                                                     const FractionalPoint& x);

/// f^L(x) = sum over atoms of weight * f(u). At most n + 1 oracle calls.
/// Defined for every f; convex only when f is alpha-bisubmodular.
Rational extension_value(const ValueOracle& f, const FractionalPoint& x);

/// The n + 1 labelings w_0 > w_1 > ... > w_n = 0 obtained from the signs of x
/// (Zero coordinates count as Pos) by dropping coordinates one at a time in
/// increasing normalized magnitude, ties by smallest index. Every atom of
/// decompose(x) appears in this chain.
std::vector<Labeling> maximal_chain(const FractionalPoint& x);

/// The affine piece of f^L selected by maximal_chain(x).
struct LinearPiece {
  Rational value;                   ///< f^L(x)
  std::vector<Rational> gradient;   ///< subgradient of f^L at x
  ChainDecomposition decomposition; ///< decompose(x)
  std::vector<Labeling> chain;      ///< maximal_chain(x)
  std::vector<Rational> chain_values;  ///< f on each chain element
};

/// One pass over the maximal chain (exactly n + 1 oracle calls) producing
/// f^L(x) and a subgradient. For coordinate j leaving between w_{k-1} and
/// w_k, gradient_j = (f(w_{k-1}) - f(w_k)) * s_j with s_j = 1 when x_j >= 0
/// and s_j = -1/alpha when x_j < 0.
///
/// The gradient is a valid subgradient (f^L(y) >= f^L(x) + g.(y - x) on the
/// box) only when f is alpha-bisubmodular; this is not checked.
LinearPiece linearize(const ValueOracle& f, const FractionalPoint& x);

std::vector<Rational> subgradient(const ValueOracle& f,
                                  const FractionalPoint& x);

}  // namespace skewbisub
