#pragma once

#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "magic/error.hpp"

namespace magic {

// Dense n x n matrix in row-major order. Comparison is lexicographic over
// the row-major cells, which is the order used for canonical forms and
// enumeration output.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t order, const T& fill)
      : order_(order), cells_(order * order, fill) {}

  // Throws NotSquare unless cells.size() == order * order.
  SquareMatrix(std::size_t order, std::vector<T> cells)
      : order_(order), cells_(std::move(cells)) {
    if (cells_.size() != order_ * order_)
      throw NotSquare("cell count does not match order");
  }

  // Throws NotSquare for ragged or non-square input.
  static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t n = rows.size();
    std::vector<T> cells;
    cells.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw NotSquare("matrix is not square");
      cells.insert(cells.end(), row.begin(), row.end());
    }
    return SquareMatrix(n, std::move(cells));
  }

  std::size_t order() const { return order_; }

  const T& operator()(std::size_t i, std::size_t j) const {
    return cells_[i * order_ + j];
  }
  T& operator()(std::size_t i, std::size_t j) { return cells_[i * order_ + j]; }

  std::span<const T> cells() const { return cells_; }
  std::span<T> cells() { return cells_; }
  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(cells_).subspan(i * order_, order_);
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    std::vector<U> out;
    out.reserve(cells_.size());
    for (const auto& c : cells_) out.push_back(f(c));
    return SquareMatrix<U>(order_, std::move(out));
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
  friend bool operator<(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.cells_ < b.cells_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<T> cells_;
};

// The eight images under the dihedral group of the square, in a fixed
// order: identity, rot90, rot180, rot270, transpose, anti-transpose,
// horizontal mirror, vertical mirror.
template <class T>
std::vector<SquareMatrix<T>> dihedral_images(const SquareMatrix<T>& a) {
  const std::size_t n = a.order();
  std::vector<SquareMatrix<T>> out;
  out.reserve(8);
  auto image = [&](auto&& src) {
    std::vector<T> cells;
    cells.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto [r, c] = src(i, j);
        cells.push_back(a(r, c));
      }
    out.emplace_back(n, std::move(cells));
  };
  const std::size_t m = n == 0 ? 0 : n - 1;
  image([](std::size_t i, std::size_t j) { return std::pair{i, j}; });
  image([m](std::size_t i, std::size_t j) { return std::pair{m - j, i}; });
  image([m](std::size_t i, std::size_t j) { return std::pair{m - i, m - j}; });
  image([m](std::size_t i, std::size_t j) { return std::pair{j, m - i}; });
  image([](std::size_t i, std::size_t j) { return std::pair{j, i}; });
  image([m](std::size_t i, std::size_t j) { return std::pair{m - j, m - i}; });
  image([m](std::size_t i, std::size_t j) { return std::pair{i, m - j}; });
  image([m](std::size_t i, std::size_t j) { return std::pair{m - i, j}; });
  return out;
}

template <class T>
SquareMatrix<T> transpose(const SquareMatrix<T>& a) {
  return dihedral_images(a)[4];
}

// Lexicographically least dihedral image.
template <class T>
SquareMatrix<T> canonical_image(const SquareMatrix<T>& a) {
  auto images = dihedral_images(a);
  std::size_t best = 0;
  for (std::size_t k = 1; k < images.size(); ++k)
    if (images[k] < images[best]) best = k;
  return std::move(images[best]);
}

}  // namespace magic
