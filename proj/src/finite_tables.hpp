#pragma once

// Index-level operation tables for exhaustive searches over finite carriers.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "magic/algebra.hpp"
#include "magic/error.hpp"

namespace magic::detail {

struct FiniteTables {
  using Index = std::uint32_t;

  std::vector<Element> elements;
  std::vector<std::vector<Index>> add;
  std::vector<std::vector<Index>> mul;  // empty for groups
  std::vector<Index> neg;
  Index zero = 0;
  Index one = 0;

  std::size_t size() const { return elements.size(); }

  static FiniteTables of_group(const AbelianGroup& g, std::size_t limit) {
    FiniteTables t;
    t.elements = g.elements(limit);
    std::map<std::vector<Integer>, Index> index;
    for (Index i = 0; i < t.elements.size(); ++i)
      index.emplace(std::vector<Integer>(t.elements[i].parts().begin(),
                                         t.elements[i].parts().end()), i);
    auto lookup = [&](const Element& e) {
      return index.at(std::vector<Integer>(e.parts().begin(), e.parts().end()));
    };
    const std::size_t k = t.elements.size();
    t.add.assign(k, std::vector<Index>(k));
    t.neg.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b)
        t.add[a][b] = lookup(g.op(t.elements[a], t.elements[b]));
      t.neg[a] = lookup(g.inverse(t.elements[a]));
    }
    t.zero = lookup(g.identity());
    if (auto ring = dynamic_cast<const CommutativeRing*>(&g)) {
      t.mul.assign(k, std::vector<Index>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          t.mul[a][b] = lookup(ring->mul(t.elements[a], t.elements[b]));
      t.one = lookup(ring->one());
    }
    return t;
  }
};

// |G|^(n*n) against an exhaustive budget; throws BudgetExceeded.
inline void require_candidate_budget(const AbelianGroup& g, std::size_t n,
                                     std::uint64_t limit) {
  auto card = g.carrier()->cardinality();
  if (!card)
    throw BudgetExceeded("cannot enumerate squares over infinite " + g.name());
  Integer candidates = boost::multiprecision::pow(*card, static_cast<unsigned>(n * n));
  if (candidates > limit)
    throw BudgetExceeded(candidates.str() + " candidate squares over " +
                         g.name() + " exceed the budget of " +
                         std::to_string(limit));
}

// Depth-first walk over every n x n index matrix in row-major lexicographic
// order. `row_ok(cells, i)` runs when row i is complete and may prune;
// `emit(cells)` runs on complete matrices.
template <class RowOk, class Emit>
void for_each_index_square(std::size_t k, std::size_t n, RowOk&& row_ok,
                           Emit&& emit) {
  using Index = FiniteTables::Index;
  std::vector<Index> cells(n * n, 0);
  const std::size_t total = n * n;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == total) {
      emit(cells);
      return;
    }
    for (Index v = 0; v < k; ++v) {
      cells[pos] = v;
      if ((pos + 1) % n == 0 && !row_ok(cells, pos / n)) continue;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace magic::detail
