#pragma once

// Bounded exhaustive enumeration of pseudo magic squares and their
// equivalence classes under rotations and reflections of the grid.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "magic/error.hpp"
#include "magic/pms.hpp"

namespace magic {

class InfeasibleConstant : public Error {
 public:
  using Error::Error;
};

class InvalidSearchSpec : public Error {
 public:
  using Error::Error;
};

struct SearchSpec {
  std::size_t order = 1;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::optional<std::int64_t> constant;
  bool require_distinct_entries = false;

  // Throws InvalidSearchSpec or InfeasibleConstant.
  void validate() const;
  // Leaf count of the pruned search tree: width^(free cells).
  Integer estimated_nodes() const;
};

struct EnumerateOptions {
  std::uint64_t node_budget = 1'000'000'000;
  unsigned workers = 1;
};

// Emits every square within the bounds whose rows and columns share one sum
// (and with pairwise distinct entries when requested), each once, in
// row-major lexicographic order. The output is identical for any worker
// count. Throws BudgetExceeded when estimated_nodes() exceeds the budget.
void enumerate_pms(const SearchSpec& spec,
                   const std::function<void(const PseudoMagicSquare&)>& sink,
                   const EnumerateOptions& options = {});
std::vector<PseudoMagicSquare> enumerate_pms(const SearchSpec& spec,
                                             const EnumerateOptions& options = {});

// Least of the eight rotation/reflection images in row-major order.
PseudoMagicSquare canonical_form(const PseudoMagicSquare& a);

struct EquivalenceClass {
  PseudoMagicSquare representative;
  // Number of enumerated squares in the orbit.
  std::size_t size = 0;
};

// Orbits of the enumeration, sorted by representative.
std::vector<EquivalenceClass> count_classes(const SearchSpec& spec,
                                            const EnumerateOptions& options = {});

}  // namespace magic
