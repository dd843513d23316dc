#include "magic/sampling.hpp"

#include <algorithm>

namespace magic {

PseudoMagicSquare random_pms(const std::vector<PseudoMagicSquare>& basis,
                             std::mt19937_64& rng, const Integer& entry_bound) {
  // |entry| <= sum_i |coeff_i| * max|basis_i| <= window * spread.
  Integer spread = 0;
  for (const auto& b : basis) {
    Integer m = 0;
    for (const auto& v : b.entries().cells()) m = std::max(m, Integer(abs(v)));
    spread += m;
  }
  const Integer window = spread == 0 ? entry_bound : entry_bound / spread;
  std::vector<Integer> coeffs;
  coeffs.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    coeffs.push_back(random_integer(rng, -window, window));
  PseudoMagicSquare acc = zero(basis.front().order());
  for (std::size_t i = 0; i < basis.size(); ++i)
    acc = add(acc, scale(basis[i], coeffs[i]));
  return acc;
}

GroupMagicSquare random_gms(const GroupPtr& group, std::size_t n,
                            std::mt19937_64& rng, const Integer& bound) {
  const auto& g = *group;
  std::vector<Element> cells(n * n, g.identity());
  const Element c = g.sample(rng, bound);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) cells[i * n + j] = g.sample(rng, bound);
  auto solve = [&](Element partial) { return g.op(c, g.inverse(partial)); };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Element partial = g.identity();
    for (std::size_t j = 0; j + 1 < n; ++j) partial = g.op(partial, cells[i * n + j]);
    cells[i * n + n - 1] = solve(partial);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Element partial = g.identity();
    for (std::size_t i = 0; i + 1 < n; ++i) partial = g.op(partial, cells[i * n + j]);
    cells[(n - 1) * n + j] = solve(partial);
  }
  return gverify(group, ElementMatrix(n, std::move(cells)));
}

RingMagicSquare circulant_rms(const RingPtr& ring,
                              const std::vector<Element>& first_row) {
  const std::size_t n = first_row.size();
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cells.push_back(first_row[(j + n - i) % n]);
  return rverify(ring, ElementMatrix(n, std::move(cells)));
}

RingMagicSquare random_circulant_rms(const RingPtr& ring, std::size_t n,
                                     std::mt19937_64& rng, const Integer& bound) {
  std::vector<Element> row;
  for (std::size_t j = 0; j < n; ++j) row.push_back(ring->sample(rng, bound));
  return circulant_rms(ring, row);
}

}  // namespace magic
