#pragma once

// Generic magic squares over an abelian group: every row and every column
// folds under the group operation to one element, the constant. Squares of
// one order over one group form an abelian group under the componentwise
// operation.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "magic/algebra.hpp"
#include "magic/matrix.hpp"

namespace magic {

using GroupPtr = std::shared_ptr<const AbelianGroup>;
using ElementMatrix = SquareMatrix<Element>;

class GroupMagicSquare {
 public:
  const GroupPtr& group() const { return group_; }
  std::size_t order() const { return entries_.order(); }
  const ElementMatrix& entries() const { return entries_; }
  const Element& constant() const { return constant_; }

  friend bool operator==(const GroupMagicSquare& a, const GroupMagicSquare& b) {
    return same_carrier(a.group_->carrier(), b.group_->carrier()) &&
           a.entries_ == b.entries_;
  }

 private:
  GroupMagicSquare(GroupPtr group, ElementMatrix entries, Element constant)
      : group_(std::move(group)),
        entries_(std::move(entries)),
        constant_(std::move(constant)) {}

  friend GroupMagicSquare gverify(GroupPtr group, ElementMatrix matrix);
  friend GroupMagicSquare identity_gms(GroupPtr group, std::size_t n);
  friend GroupMagicSquare combine(const GroupMagicSquare& a,
                                  const GroupMagicSquare& b);
  friend GroupMagicSquare ginvert(const GroupMagicSquare& a);

  GroupPtr group_;
  ElementMatrix entries_;
  Element constant_;
};

// Left-to-right fold of `line` under the group operation.
Element fold(const AbelianGroup& group, std::span<const Element> line);

// Throws NotSquare for order 0, CarrierMismatch for foreign entries and
// NotMagic naming the first row or column whose fold differs from row 0.
GroupMagicSquare gverify(GroupPtr group, ElementMatrix matrix);

// The all-identity square.
GroupMagicSquare identity_gms(GroupPtr group, std::size_t n);

// Componentwise operation; constant is c_A * c_B. Throws OrderMismatch or
// CarrierMismatch.
GroupMagicSquare combine(const GroupMagicSquare& a, const GroupMagicSquare& b);
// Componentwise inverse; constant inverted.
GroupMagicSquare ginvert(const GroupMagicSquare& a);

// Every GMS of order n over a finite group, in row-major lexicographic order
// of entries. Throws BudgetExceeded when |G|^(n*n) exceeds `limit` or the
// group is infinite.
std::vector<GroupMagicSquare> all_gms(const GroupPtr& group, std::size_t n,
                                      std::uint64_t limit = 10'000'000);

}  // namespace magic
