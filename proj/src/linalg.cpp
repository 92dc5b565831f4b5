#include "qshuffle/linalg.hpp"

#include <cassert>

namespace qshuffle {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix clear_denominators(const RationalMatrix& m) {
  IntMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    mpz_class lcm = 1;
    for (const Rational& x : row)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> irow;
    irow.reserve(row.size());
    for (const Rational& x : row) {
      mpz_class scaled = x.get_num() * (lcm / x.get_den());
      irow.push_back(std::move(scaled));
    }
    out.push_back(std::move(irow));
  }
  return out;
}

}  // namespace

std::size_t matrix_rank(RationalMatrix m) {
  IntMatrix a = clear_denominators(m);
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class num = a[i][j] * a[rank][col] - a[i][col] * a[rank][j];
        // exact by the fraction-free elimination invariant
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(q);
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(RationalMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    Rational inv = 1 / m[r][col];
    for (std::size_t j = col; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> kernel_vector(RationalMatrix m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  if (cols == 0) return std::nullopt;
  std::vector<std::size_t> pivots = rref(m);
  if (pivots.size() == cols) return std::nullopt;
  // pick the first free column; back-substitute from the reduced form
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::size_t free_col = 0;
  while (free_col < cols && is_pivot[free_col]) ++free_col;
  assert(free_col < cols);
  std::vector<Rational> x(cols, Rational(0));
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = -m[r][free_col];
  // normalize: first nonzero entry 1
  for (std::size_t i = 0; i < cols; ++i) {
    if (x[i] == 0) continue;
    Rational inv = 1 / x[i];
    for (std::size_t j = 0; j < cols; ++j) x[j] *= inv;
    break;
  }
  return x;
}

std::optional<std::vector<Rational>> solve_linear(RationalMatrix a,
                                                  std::vector<Rational> b) {
  const std::size_t rows = a.size();
  assert(b.size() == rows);
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<std::size_t> pivots = rref(a);
  // inconsistent iff some pivot lands in the appended column
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

}  // namespace qshuffle
