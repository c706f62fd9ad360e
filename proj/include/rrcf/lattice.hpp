#pragma once

// LLL reduction of integer lattices, used for integer-relation detection.

#include <gmpxx.h>

#include <vector>

namespace rrcf {

using IntMatrix = std::vector<std::vector<mpz_class>>;

struct LllOptions {
  double delta = 0.99;
  /// Floating-point precision for the Gram-Schmidt data; 0 picks one from the
  /// bit size of the Gram matrix.
  long float_bits = 0;
};

/// Reduces the rows of `basis` in place (rows must be linearly independent).
/// Returns the number of swaps performed.
long lll_reduce(IntMatrix& basis, const LllOptions& opts = {});

/// Squared Euclidean norm of an integer vector.
mpz_class norm2(const std::vector<mpz_class>& v);

}  // namespace rrcf
