#include "magic/linear.hpp"

#include <algorithm>
#include <utility>

namespace magic::linear {

std::size_t rank(Matrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev;
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    ++r;
  }
  return r;
}

std::vector<Vector> integer_kernel(const Matrix& a, std::size_t columns) {
  Matrix work = a;
  // Columns of `basis` track the unimodular transform U with work = A * U.
  Matrix basis(columns, Vector(columns, Integer(0)));
  for (std::size_t i = 0; i < columns; ++i) basis[i][i] = 1;

  auto column_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& row : work) row[dst] -= q * row[src];
    for (auto& row : basis) row[dst] -= q * row[src];
  };
  auto column_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : work) std::swap(row[x], row[y]);
    for (auto& row : basis) std::swap(row[x], row[y]);
  };

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < work.size() && pivot < columns; ++r) {
    for (;;) {
      // Smallest non-zero magnitude at or right of the pivot column.
      std::optional<std::size_t> best;
      for (std::size_t c = pivot; c < columns; ++c)
        if (work[r][c] != 0 &&
            (!best || abs(work[r][c]) < abs(work[r][*best])))
          best = c;
      if (!best) break;
      bool reduced = true;
      for (std::size_t c = pivot; c < columns; ++c) {
        if (c == *best || work[r][c] == 0) continue;
        column_axpy(c, *best, work[r][c] / work[r][*best]);
        if (work[r][c] != 0) reduced = false;
      }
      if (reduced) {
        column_swap(pivot, *best);
        ++pivot;
        break;
      }
    }
  }

  std::vector<Vector> kernel;
  for (std::size_t c = pivot; c < columns; ++c) {
    Vector v(columns);
    for (std::size_t i = 0; i < columns; ++i) v[i] = basis[i][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::optional<std::vector<Rational>> solve_combination(
    const std::vector<Vector>& vectors, const Vector& target) {
  const std::size_t unknowns = vectors.size();
  const std::size_t dim = target.size();
  for (const auto& v : vectors)
    if (v.size() != dim) return std::nullopt;

  // Augmented system: row d is sum_i coeff_i * vectors[i][d] = target[d].
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(unknowns + 1));
  for (std::size_t d = 0; d < dim; ++d) {
    for (std::size_t i = 0; i < unknowns; ++i) m[d][i] = vectors[i][d];
    m[d][unknowns] = target[d];
  }

  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < unknowns && r < dim; ++c) {
    std::size_t p = r;
    while (p < dim && m[p][c] == 0) ++p;
    if (p == dim) continue;
    std::swap(m[r], m[p]);
    const Rational lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j <= unknowns; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < dim; ++i)
    if (m[i][unknowns] != 0) return std::nullopt;
  if (pivots.size() != unknowns) return std::nullopt;

  std::vector<Rational> coeff(unknowns);
  for (std::size_t i = 0; i < r; ++i) coeff[pivots[i]] = m[i][unknowns];
  return coeff;
}

}  // namespace magic::linear
