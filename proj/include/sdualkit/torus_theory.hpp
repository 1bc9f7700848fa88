#pragma once

#include <vector>

#include "sdualkit/exactalg.hpp"

namespace sdualkit {

/// Cocharacter of a torus, i.e. a point of its affine Grassmannian.
using Cocharacter = LatticeVector;

/// A torus of rank `rank` acting on N = C^a x (C^x)^b through linear weights
/// (one per C factor) and multiplicative weights (one per C^x factor).
struct TorusTheory {
  int rank = 0;
  std::vector<LinearForm> linear_weights;
  std::vector<LinearForm> multiplicative_weights;

  /// Throws rank_mismatch when a weight has the wrong length and
  /// invalid_argument for negative rank.
  void validate() const;

  friend bool operator==(const TorusTheory &, const TorusTheory &) = default;
};

} // namespace sdualkit
