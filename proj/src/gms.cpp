#include "magic/gms.hpp"

#include "finite_tables.hpp"

namespace magic {

Element fold(const AbelianGroup& group, std::span<const Element> line) {
  Element acc = line.front();
  for (std::size_t i = 1; i < line.size(); ++i) acc = group.op(acc, line[i]);
  return acc;
}

GroupMagicSquare gverify(GroupPtr group, ElementMatrix matrix) {
  const std::size_t n = matrix.order();
  if (n == 0) throw NotSquare("generic magic squares have order at least 1");
  for (const auto& e : matrix.cells()) group->require_member(e);
  Element c = fold(*group, matrix.row(0));
  for (std::size_t i = 1; i < n; ++i) {
    Element r = fold(*group, matrix.row(i));
    if (r != c)
      throw NotMagic({LineRef::Kind::Row, i}, c.to_string(), r.to_string());
  }
  for (std::size_t j = 0; j < n; ++j) {
    auto col = matrix.column(j);
    Element r = fold(*group, col);
    if (r != c)
      throw NotMagic({LineRef::Kind::Column, j}, c.to_string(), r.to_string());
  }
  return GroupMagicSquare(std::move(group), std::move(matrix), std::move(c));
}

GroupMagicSquare identity_gms(GroupPtr group, std::size_t n) {
  if (n == 0) throw NotSquare("generic magic squares have order at least 1");
  Element e = group->identity();
  ElementMatrix entries(n, e);
  return GroupMagicSquare(std::move(group), std::move(entries), std::move(e));
}

namespace {

void require_compatible(const GroupMagicSquare& a, const GroupMagicSquare& b) {
  if (!same_carrier(a.group()->carrier(), b.group()->carrier()))
    throw CarrierMismatch("squares over " + a.group()->name() + " and " +
                          b.group()->name());
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
}

}  // namespace

GroupMagicSquare combine(const GroupMagicSquare& a, const GroupMagicSquare& b) {
  require_compatible(a, b);
  const auto& g = *a.group();
  std::vector<Element> cells;
  cells.reserve(a.order() * a.order());
  auto lhs = a.entries().cells();
  auto rhs = b.entries().cells();
  for (std::size_t k = 0; k < lhs.size(); ++k) cells.push_back(g.op(lhs[k], rhs[k]));
  return GroupMagicSquare(a.group(), ElementMatrix(a.order(), std::move(cells)),
                          g.op(a.constant(), b.constant()));
}

GroupMagicSquare ginvert(const GroupMagicSquare& a) {
  const auto& g = *a.group();
  return GroupMagicSquare(
      a.group(), a.entries().map([&](const Element& e) { return g.inverse(e); }),
      g.inverse(a.constant()));
}

std::vector<GroupMagicSquare> all_gms(const GroupPtr& group, std::size_t n,
                                      std::uint64_t limit) {
  if (n == 0) throw NotSquare("generic magic squares have order at least 1");
  detail::require_candidate_budget(*group, n, limit);
  const auto t = detail::FiniteTables::of_group(*group, limit);
  using Index = detail::FiniteTables::Index;

  auto fold_row = [&](const std::vector<Index>& cells, std::size_t i) {
    Index acc = cells[i * n];
    for (std::size_t j = 1; j < n; ++j) acc = t.add[acc][cells[i * n + j]];
    return acc;
  };

  std::vector<GroupMagicSquare> out;
  detail::for_each_index_square(
      t.size(), n,
      [&](const std::vector<Index>& cells, std::size_t i) {
        return i == 0 || fold_row(cells, i) == fold_row(cells, 0);
      },
      [&](const std::vector<Index>& cells) {
        const Index c = fold_row(cells, 0);
        for (std::size_t j = 0; j < n; ++j) {
          Index acc = cells[j];
          for (std::size_t i = 1; i < n; ++i) acc = t.add[acc][cells[i * n + j]];
          if (acc != c) return;
        }
        std::vector<Element> entries;
        entries.reserve(cells.size());
        for (Index v : cells) entries.push_back(t.elements[v]);
        out.push_back(gverify(group, ElementMatrix(n, std::move(entries))));
      });
  return out;
}

}  // namespace magic
