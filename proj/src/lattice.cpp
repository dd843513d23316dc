#include "magic/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "magic/linear.hpp"

namespace magic {

std::vector<std::vector<Integer>> magic_constraints(std::size_t n) {
  const std::size_t unknowns = n * n + 1;
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> row(unknowns, Integer(0));
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = 1;
    row.back() = -1;
    rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Integer> row(unknowns, Integer(0));
    for (std::size_t i = 0; i < n; ++i) row[i * n + j] = 1;
    row.back() = -1;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Size reduction: subtract integer multiples of other vectors while that
// shrinks the max-norm. Keeps a Z-basis a Z-basis.
void shrink(std::vector<linear::Vector>& basis) {
  auto norm = [](const linear::Vector& v) {
    Integer s = 0;
    for (const auto& x : v) s += x * x;
    return s;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        for (int sign : {1, -1}) {
          linear::Vector t = basis[i];
          for (std::size_t k = 0; k < t.size(); ++k) t[k] -= sign * basis[j][k];
          if (norm(t) < norm(basis[i])) {
            basis[i] = std::move(t);
            changed = true;
          }
        }
      }
  }
}

}  // namespace

std::vector<PseudoMagicSquare> lattice_basis(std::size_t n) {
  if (n == 0) throw NotSquare("pseudo magic squares have order at least 1");
  auto kernel = linear::integer_kernel(magic_constraints(n), n * n + 1);
  shrink(kernel);
  for (auto& v : kernel) {
    auto lead = std::find_if(v.begin(), v.end(),
                             [](const Integer& x) { return x != 0; });
    if (lead != v.end() && *lead < 0)
      for (auto& x : v) x = -x;
  }
  std::sort(kernel.begin(), kernel.end(), std::greater<>());

  std::vector<PseudoMagicSquare> out;
  for (const auto& v : kernel) {
    auto square = verify(IntMatrix(n, linear::Vector(v.begin(), v.end() - 1)));
    if (square.constant() != v.back())
      throw std::logic_error("kernel vector disagrees with its constant");
    out.push_back(std::move(square));
  }
  return out;
}

PseudoMagicSquare compose(const std::vector<PseudoMagicSquare>& basis,
                          const std::vector<Integer>& coeffs) {
  if (basis.size() != coeffs.size())
    throw std::invalid_argument("coefficient count differs from basis size");
  if (basis.empty()) throw std::invalid_argument("empty basis");
  PseudoMagicSquare acc = zero(basis.front().order());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0) acc = add(acc, scale(basis[i], coeffs[i]));
  return acc;
}

std::vector<Integer> decompose(const PseudoMagicSquare& a,
                               const std::vector<PseudoMagicSquare>& basis) {
  std::vector<linear::Vector> vectors;
  for (const auto& b : basis) {
    if (b.order() != a.order()) throw OrderMismatch(a.order(), b.order());
    vectors.emplace_back(b.entries().cells().begin(), b.entries().cells().end());
  }
  linear::Vector target(a.entries().cells().begin(), a.entries().cells().end());
  auto solution = linear::solve_combination(vectors, target);
  if (!solution) throw NotInSpan("square is not a unique combination of the basis");
  std::vector<Integer> coeffs;
  for (const auto& q : *solution) {
    if (denominator(q) != 1)
      throw NotInSpan("square needs a non-integer coefficient " + q.str());
    coeffs.push_back(numerator(q));
  }
  return coeffs;
}

}  // namespace magic
