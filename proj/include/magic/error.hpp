#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace magic {

// Base of every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  OrderMismatch(std::size_t left, std::size_t right);
  std::size_t left() const { return left_; }
  std::size_t right() const { return right_; }

 private:
  std::size_t left_;
  std::size_t right_;
};

// Elements or squares from different carrier structures were mixed.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidStructure : public Error {
 public:
  using Error::Error;
};

// A row or column of a square, used to point at the line that broke a
// magic condition.
struct LineRef {
  enum class Kind { Row, Column };
  Kind kind = Kind::Row;
  std::size_t index = 0;

  std::string to_string() const;
  friend bool operator==(const LineRef&, const LineRef&) = default;
};

// The first line whose fold deviates from the fold of row 0.
class NotMagic : public Error {
 public:
  NotMagic(LineRef line, std::string expected, std::string actual,
           const std::string& what_prefix = "not magic");

  const LineRef& line() const { return line_; }
  // Fold of row 0, the reference value.
  const std::string& expected() const { return expected_; }
  // Fold of the offending line.
  const std::string& actual() const { return actual_; }

 private:
  LineRef line_;
  std::string expected_;
  std::string actual_;
};

}  // namespace magic
