#pragma once

// Generic magic squares over a commutative ring with unit. A square is a
// member when every row and column has the same sum (the additive constant)
// and the same product (the multiplicative constant).
//
// The componentwise sum of two members always keeps a common line sum and
// the componentwise product always keeps a common line product. The other
// clause is not structural, so add_p and mul_p re-verify it and throw
// ClosureViolation instead of returning a non-member.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "magic/algebra.hpp"
#include "magic/gms.hpp"

namespace magic {

using RingPtr = std::shared_ptr<const CommutativeRing>;

class NotAdditiveMagic : public NotMagic {
 public:
  NotAdditiveMagic(LineRef line, std::string expected, std::string actual)
      : NotMagic(line, std::move(expected), std::move(actual),
                 "not additively magic") {}
};

class NotMultiplicativeMagic : public NotMagic {
 public:
  NotMultiplicativeMagic(LineRef line, std::string expected, std::string actual)
      : NotMagic(line, std::move(expected), std::move(actual),
                 "not multiplicatively magic") {}
};

enum class Clause { Additive, Multiplicative };
std::string to_string(Clause c);

// A componentwise operation produced a matrix outside the ring-GMS set.
class ClosureViolation : public Error {
 public:
  ClosureViolation(std::string operation, ElementMatrix candidate,
                   Clause broken, LineRef line, std::string expected,
                   std::string actual);

  const std::string& operation() const { return operation_; }
  const ElementMatrix& candidate() const { return candidate_; }
  Clause broken() const { return broken_; }
  const LineRef& line() const { return line_; }
  const std::string& expected() const { return expected_; }
  const std::string& actual() const { return actual_; }

 private:
  std::string operation_;
  ElementMatrix candidate_;
  Clause broken_;
  LineRef line_;
  std::string expected_;
  std::string actual_;
};

class RingMagicSquare {
 public:
  const RingPtr& ring() const { return ring_; }
  std::size_t order() const { return entries_.order(); }
  const ElementMatrix& entries() const { return entries_; }
  const Element& additive_constant() const { return c_add_; }
  const Element& multiplicative_constant() const { return c_mul_; }

  friend bool operator==(const RingMagicSquare& a, const RingMagicSquare& b) {
    return same_carrier(a.ring_->carrier(), b.ring_->carrier()) &&
           a.entries_ == b.entries_;
  }

 private:
  RingMagicSquare(RingPtr ring, ElementMatrix entries, Element c_add,
                  Element c_mul)
      : ring_(std::move(ring)),
        entries_(std::move(entries)),
        c_add_(std::move(c_add)),
        c_mul_(std::move(c_mul)) {}

  friend struct RingSquareAccess;

  RingPtr ring_;
  ElementMatrix entries_;
  Element c_add_;
  Element c_mul_;
};

// Throws NotSquare, CarrierMismatch, NotAdditiveMagic (checked first) or
// NotMultiplicativeMagic.
RingMagicSquare rverify(RingPtr ring, ElementMatrix matrix);

// Additive identity: constants (0, 0).
RingMagicSquare zeros_rms(RingPtr ring, std::size_t n);
// Multiplicative identity: constants (n * 1, 1).
RingMagicSquare ones_rms(RingPtr ring, std::size_t n);

// Componentwise sum. Throws OrderMismatch, CarrierMismatch, or
// ClosureViolation when the multiplicative clause fails.
RingMagicSquare add_p(const RingMagicSquare& a, const RingMagicSquare& b);
// Componentwise product. Throws OrderMismatch, CarrierMismatch, or
// ClosureViolation when the additive clause fails.
RingMagicSquare mul_p(const RingMagicSquare& a, const RingMagicSquare& b);

// Every entry multiplied by r; constants become r * c_add and r^n * c_mul.
RingMagicSquare scalar_act(const Element& r, const RingMagicSquare& a);

// Every ring GMS of order n, in row-major lexicographic order.
std::vector<RingMagicSquare> all_rms(const RingPtr& ring, std::size_t n,
                                     std::uint64_t limit = 10'000'000);

struct ClosureCounterexample {
  // Positions of the operands in the enumeration order of all_rms.
  std::size_t left_index = 0;
  std::size_t right_index = 0;
  ElementMatrix left;
  ElementMatrix right;
  ElementMatrix result;
  Clause broken = Clause::Additive;
  LineRef line;
  std::string expected;
  std::string actual;
};

struct OperationVerdict {
  std::string operation;
  std::uint64_t pairs_checked = 0;
  std::uint64_t violations = 0;
  // First violating ordered pair in enumeration order.
  std::optional<ClosureCounterexample> first;

  bool closed() const { return violations == 0; }
};

struct ClosureReport {
  std::string ring;
  std::size_t order = 0;
  std::uint64_t candidates = 0;
  std::uint64_t members = 0;
  OperationVerdict add;
  OperationVerdict mul;

  bool closed() const { return add.closed() && mul.closed(); }
};

struct ClosureOptions {
  std::uint64_t budget = 10'000'000;
  unsigned workers = 1;
};

// Enumerates all ring GMS of order n over a finite ring and tests every
// ordered pair under add_p and mul_p. The result does not depend on
// options.workers. Throws BudgetExceeded when |R|^(n*n) > options.budget.
ClosureReport closure_search(const RingPtr& ring, std::size_t n,
                             const ClosureOptions& options = {});

}  // namespace magic
