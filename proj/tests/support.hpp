#pragma once

#include <initializer_list>
#include <vector>

#include "magic/algebra.hpp"
#include "magic/gms.hpp"
#include "magic/pms.hpp"
#include "oracles.hpp"

namespace testing {

using magic::Integer;

inline magic::IntMatrix ints(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<Integer>> out;
  for (auto r : rows) out.emplace_back(r.begin(), r.end());
  return magic::IntMatrix::from_rows(out);
}

inline magic::PseudoMagicSquare pms(std::initializer_list<std::initializer_list<long long>> rows) {
  return magic::verify(ints(rows));
}

inline magic::ElementMatrix over(const std::shared_ptr<const magic::ProductRing>& ring,
                                 std::initializer_list<std::initializer_list<long long>> rows) {
  return ints(rows).map([&](const Integer& v) { return ring->make(v); });
}

inline magic::ElementMatrix over(const std::shared_ptr<const magic::ProductRing>& ring,
                                 const oracle::Flat& flat, std::size_t n) {
  std::vector<magic::Element> cells;
  for (auto v : flat) cells.push_back(ring->make(Integer(v)));
  return magic::ElementMatrix(n, std::move(cells));
}

inline oracle::Flat flat(const magic::IntMatrix& a) {
  oracle::Flat out;
  for (const auto& v : a.cells()) out.push_back(static_cast<long long>(v));
  return out;
}

inline oracle::Flat flat(const magic::ElementMatrix& a) {
  oracle::Flat out;
  for (const auto& e : a.cells()) out.push_back(static_cast<long long>(e.value()));
  return out;
}

}  // namespace testing
