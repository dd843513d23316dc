#include "magic/error.hpp"

namespace magic {

OrderMismatch::OrderMismatch(std::size_t left, std::size_t right)
    : Error("order mismatch: " + std::to_string(left) + " vs " +
            std::to_string(right)),
      left_(left),
      right_(right) {}

std::string LineRef::to_string() const {
  return (kind == Kind::Row ? "row " : "column ") + std::to_string(index);
}

NotMagic::NotMagic(LineRef line, std::string expected, std::string actual,
                   const std::string& what_prefix)
    : Error(what_prefix + ": " + line.to_string() + " folds to " + actual +
            ", row 0 folds to " + expected),
      line_(line),
      expected_(std::move(expected)),
      actual_(std::move(actual)) {}

}  // namespace magic
