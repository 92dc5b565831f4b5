#pragma once
#include <optional>
#include <vector>

#include "qshuffle/rational.hpp"

namespace qshuffle {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Rank over the rationals. Rows are cleared of denominators and the integer
// matrix is reduced by fraction-free elimination, so every intermediate value
// stays exact.
std::size_t matrix_rank(RationalMatrix m);

// A nonzero solution of M x = 0, normalized so the first nonzero entry is 1;
// nullopt when the kernel is trivial. Gauss-Jordan over the rationals.
std::optional<std::vector<Rational>> kernel_vector(RationalMatrix m);

// Any solution of A x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix a,
                                                  std::vector<Rational> b);

}  // namespace qshuffle
