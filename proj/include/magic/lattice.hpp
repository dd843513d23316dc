#pragma once

// The order-n pseudo magic squares form a free abelian group. These helpers
// compute an explicit Z-basis and coordinates with respect to it.

#include <cstddef>
#include <vector>

#include "magic/error.hpp"
#include "magic/pms.hpp"

namespace magic {

class NotInSpan : public Error {
 public:
  using Error::Error;
};

// Row and column constraint system over the unknowns (entries row-major,
// then the constant): 2n rows, n*n + 1 columns.
std::vector<std::vector<Integer>> magic_constraints(std::size_t n);

// A Z-basis of the order-n pseudo magic squares, (n-1)^2 + 1 elements,
// derived from the integer kernel of magic_constraints(n).
std::vector<PseudoMagicSquare> lattice_basis(std::size_t n);

// Integer combination sum_i coeffs[i] * basis[i]. Throws OrderMismatch and
// std::invalid_argument on a length mismatch.
PseudoMagicSquare compose(const std::vector<PseudoMagicSquare>& basis,
                          const std::vector<Integer>& coeffs);

// Coefficients c with compose(basis, c) == a. Throws NotInSpan when no
// unique integer solution exists.
std::vector<Integer> decompose(const PseudoMagicSquare& a,
                               const std::vector<PseudoMagicSquare>& basis);

}  // namespace magic
