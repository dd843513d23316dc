#pragma once

// Pseudo magic squares: integer matrices whose row sums and column sums all
// equal one constant. Entries need not be distinct and diagonals are not
// constrained.

#include <cstddef>
#include <vector>

#include "magic/integer.hpp"
#include "magic/matrix.hpp"

namespace magic {

using IntMatrix = SquareMatrix<Integer>;

class PseudoMagicSquare {
 public:
  std::size_t order() const { return entries_.order(); }
  const IntMatrix& entries() const { return entries_; }
  const Integer& constant() const { return constant_; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_(i, j);
  }

  friend bool operator==(const PseudoMagicSquare& a,
                         const PseudoMagicSquare& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const PseudoMagicSquare& a,
                        const PseudoMagicSquare& b) {
    return a.entries_ < b.entries_;
  }

 private:
  PseudoMagicSquare(IntMatrix entries, Integer constant)
      : entries_(std::move(entries)), constant_(std::move(constant)) {}

  // Constructors below either verify or derive the constant from verified
  // operands.
  friend PseudoMagicSquare verify(IntMatrix matrix);
  friend PseudoMagicSquare trusted_pms(IntMatrix, Integer);

  IntMatrix entries_;
  Integer constant_;
};

// Throws NotSquare for an empty matrix and NotMagic naming the first row or
// column whose sum differs from the sum of row 0.
PseudoMagicSquare verify(IntMatrix matrix);
PseudoMagicSquare verify(const std::vector<std::vector<Integer>>& rows);

PseudoMagicSquare zero(std::size_t n);
// Throws OrderMismatch.
PseudoMagicSquare add(const PseudoMagicSquare& a, const PseudoMagicSquare& b);
PseudoMagicSquare neg(const PseudoMagicSquare& a);
PseudoMagicSquare subtract(const PseudoMagicSquare& a,
                           const PseudoMagicSquare& b);

// Every entry times k; constant k * c.
PseudoMagicSquare scale(const PseudoMagicSquare& a, const Integer& k);
// Every entry plus k; constant c + n * k.
PseudoMagicSquare shift(const PseudoMagicSquare& a, const Integer& k);

// [[A, B], [B, A]] of order 2n with constant c_A + c_B. Throws
// OrderMismatch.
PseudoMagicSquare direct_sum(const PseudoMagicSquare& a,
                             const PseudoMagicSquare& b);

// Kronecker product, order n*m, entry (i*m + k, j*m + l) = A(i,j) * B(k,l),
// constant c_A * c_B.
PseudoMagicSquare kronecker(const PseudoMagicSquare& a,
                            const PseudoMagicSquare& b);

// The eight rotations and reflections; each keeps the constant.
std::vector<PseudoMagicSquare> symmetries(const PseudoMagicSquare& a);

// Loh-Shu square [[4,9,2],[3,5,7],[8,1,6]].
PseudoMagicSquare loh_shu();

}  // namespace magic
