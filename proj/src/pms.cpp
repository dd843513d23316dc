#include "magic/pms.hpp"

#include "magic/error.hpp"

namespace magic {

// Only for results whose constant follows from verified operands.
PseudoMagicSquare trusted_pms(IntMatrix entries, Integer constant) {
  return PseudoMagicSquare(std::move(entries), std::move(constant));
}

PseudoMagicSquare verify(IntMatrix matrix) {
  const std::size_t n = matrix.order();
  if (n == 0) throw NotSquare("pseudo magic squares have order at least 1");
  Integer c = 0;
  for (std::size_t j = 0; j < n; ++j) c += matrix(0, j);
  for (std::size_t i = 1; i < n; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < n; ++j) s += matrix(i, j);
    if (s != c) throw NotMagic({LineRef::Kind::Row, i}, c.str(), s.str());
  }
  for (std::size_t j = 0; j < n; ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i) s += matrix(i, j);
    if (s != c) throw NotMagic({LineRef::Kind::Column, j}, c.str(), s.str());
  }
  return PseudoMagicSquare(std::move(matrix), std::move(c));
}

PseudoMagicSquare verify(const std::vector<std::vector<Integer>>& rows) {
  return verify(IntMatrix::from_rows(rows));
}

PseudoMagicSquare zero(std::size_t n) {
  if (n == 0) throw NotSquare("pseudo magic squares have order at least 1");
  return trusted_pms(IntMatrix(n, Integer(0)), 0);
}

namespace {

void require_same_order(const PseudoMagicSquare& a,
                        const PseudoMagicSquare& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
}

}  // namespace

PseudoMagicSquare add(const PseudoMagicSquare& a, const PseudoMagicSquare& b) {
  require_same_order(a, b);
  std::vector<Integer> cells(a.entries().cells().begin(),
                             a.entries().cells().end());
  auto rhs = b.entries().cells();
  for (std::size_t k = 0; k < cells.size(); ++k) cells[k] += rhs[k];
  return trusted_pms(IntMatrix(a.order(), std::move(cells)),
                     a.constant() + b.constant());
}

PseudoMagicSquare neg(const PseudoMagicSquare& a) {
  return trusted_pms(a.entries().map([](const Integer& v) { return Integer(-v); }),
                     -a.constant());
}

PseudoMagicSquare subtract(const PseudoMagicSquare& a,
                           const PseudoMagicSquare& b) {
  return add(a, neg(b));
}

PseudoMagicSquare scale(const PseudoMagicSquare& a, const Integer& k) {
  return trusted_pms(a.entries().map([&](const Integer& v) { return Integer(v * k); }),
                     a.constant() * k);
}

PseudoMagicSquare shift(const PseudoMagicSquare& a, const Integer& k) {
  return trusted_pms(a.entries().map([&](const Integer& v) { return Integer(v + k); }),
                     a.constant() + k * a.order());
}

PseudoMagicSquare direct_sum(const PseudoMagicSquare& a,
                             const PseudoMagicSquare& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  IntMatrix out(2 * n, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = a(i, j);
      out(i + n, j + n) = a(i, j);
      out(i, j + n) = b(i, j);
      out(i + n, j) = b(i, j);
    }
  return trusted_pms(std::move(out), a.constant() + b.constant());
}

PseudoMagicSquare kronecker(const PseudoMagicSquare& a,
                            const PseudoMagicSquare& b) {
  const std::size_t n = a.order();
  const std::size_t m = b.order();
  IntMatrix out(n * m, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          out(i * m + k, j * m + l) = a(i, j) * b(k, l);
  return trusted_pms(std::move(out), a.constant() * b.constant());
}

std::vector<PseudoMagicSquare> symmetries(const PseudoMagicSquare& a) {
  std::vector<PseudoMagicSquare> out;
  for (auto& image : dihedral_images(a.entries()))
    out.push_back(trusted_pms(std::move(image), a.constant()));
  return out;
}

PseudoMagicSquare loh_shu() {
  return verify({{4, 9, 2}, {3, 5, 7}, {8, 1, 6}});
}

}  // namespace magic
