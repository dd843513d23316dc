#include "magic/ring_gms.hpp"

#include <algorithm>
#include <thread>
#include <variant>

#include "finite_tables.hpp"

namespace magic {

struct RingSquareAccess {
  static RingMagicSquare make(RingPtr ring, ElementMatrix entries,
                              Element c_add, Element c_mul) {
    return RingMagicSquare(std::move(ring), std::move(entries),
                           std::move(c_add), std::move(c_mul));
  }
};

std::string to_string(Clause c) {
  return c == Clause::Additive ? "additive" : "multiplicative";
}

ClosureViolation::ClosureViolation(std::string operation,
                                   ElementMatrix candidate, Clause broken,
                                   LineRef line, std::string expected,
                                   std::string actual)
    : Error(operation + " left the ring-GMS set: " + to_string(broken) +
            " fold of " + line.to_string() + " is " + actual +
            ", row 0 gives " + expected),
      operation_(std::move(operation)),
      candidate_(std::move(candidate)),
      broken_(broken),
      line_(line),
      expected_(std::move(expected)),
      actual_(std::move(actual)) {}

namespace {

struct LineFailure {
  LineRef line;
  Element expected;
  Element actual;
};

// Folds every line with `f`; returns the common value or the first line
// that deviates from row 0.
template <class F>
std::variant<Element, LineFailure> common_fold(const ElementMatrix& m, F&& f) {
  const std::size_t n = m.order();
  auto fold_span = [&](std::span<const Element> line) {
    Element acc = line.front();
    for (std::size_t i = 1; i < line.size(); ++i) acc = f(acc, line[i]);
    return acc;
  };
  Element c = fold_span(m.row(0));
  for (std::size_t i = 1; i < n; ++i) {
    Element r = fold_span(m.row(i));
    if (r != c) return LineFailure{{LineRef::Kind::Row, i}, c, r};
  }
  for (std::size_t j = 0; j < n; ++j) {
    auto col = m.column(j);
    Element r = fold_span(col);
    if (r != c) return LineFailure{{LineRef::Kind::Column, j}, c, r};
  }
  return c;
}

void require_compatible(const RingMagicSquare& a, const RingMagicSquare& b) {
  if (!same_carrier(a.ring()->carrier(), b.ring()->carrier()))
    throw CarrierMismatch("squares over " + a.ring()->name() + " and " +
                          b.ring()->name());
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
}

template <class F>
ElementMatrix componentwise(const RingMagicSquare& a, const RingMagicSquare& b,
                            F&& f) {
  auto lhs = a.entries().cells();
  auto rhs = b.entries().cells();
  std::vector<Element> cells;
  cells.reserve(lhs.size());
  for (std::size_t k = 0; k < lhs.size(); ++k) cells.push_back(f(lhs[k], rhs[k]));
  return ElementMatrix(a.order(), std::move(cells));
}

}  // namespace

RingMagicSquare rverify(RingPtr ring, ElementMatrix matrix) {
  if (matrix.order() == 0)
    throw NotSquare("generic magic squares have order at least 1");
  for (const auto& e : matrix.cells()) ring->require_member(e);
  const auto& r = *ring;
  auto sum = common_fold(matrix, [&](const Element& x, const Element& y) {
    return r.add(x, y);
  });
  if (auto* bad = std::get_if<LineFailure>(&sum))
    throw NotAdditiveMagic(bad->line, bad->expected.to_string(),
                           bad->actual.to_string());
  auto prod = common_fold(matrix, [&](const Element& x, const Element& y) {
    return r.mul(x, y);
  });
  if (auto* bad = std::get_if<LineFailure>(&prod))
    throw NotMultiplicativeMagic(bad->line, bad->expected.to_string(),
                                 bad->actual.to_string());
  return RingSquareAccess::make(std::move(ring), std::move(matrix),
                                std::get<Element>(std::move(sum)),
                                std::get<Element>(std::move(prod)));
}

RingMagicSquare zeros_rms(RingPtr ring, std::size_t n) {
  return rverify(ring, ElementMatrix(n, ring->zero()));
}

RingMagicSquare ones_rms(RingPtr ring, std::size_t n) {
  return rverify(ring, ElementMatrix(n, ring->one()));
}

RingMagicSquare add_p(const RingMagicSquare& a, const RingMagicSquare& b) {
  require_compatible(a, b);
  const auto& r = *a.ring();
  auto cells = componentwise(a, b, [&](const Element& x, const Element& y) {
    return r.add(x, y);
  });
  auto prod = common_fold(cells, [&](const Element& x, const Element& y) {
    return r.mul(x, y);
  });
  if (auto* bad = std::get_if<LineFailure>(&prod))
    throw ClosureViolation("add_p", std::move(cells), Clause::Multiplicative,
                           bad->line, bad->expected.to_string(),
                           bad->actual.to_string());
  return RingSquareAccess::make(
      a.ring(), std::move(cells),
      r.add(a.additive_constant(), b.additive_constant()),
      std::get<Element>(std::move(prod)));
}

RingMagicSquare mul_p(const RingMagicSquare& a, const RingMagicSquare& b) {
  require_compatible(a, b);
  const auto& r = *a.ring();
  auto cells = componentwise(a, b, [&](const Element& x, const Element& y) {
    return r.mul(x, y);
  });
  auto sum = common_fold(cells, [&](const Element& x, const Element& y) {
    return r.add(x, y);
  });
  if (auto* bad = std::get_if<LineFailure>(&sum))
    throw ClosureViolation("mul_p", std::move(cells), Clause::Additive,
                           bad->line, bad->expected.to_string(),
                           bad->actual.to_string());
  return RingSquareAccess::make(
      a.ring(), std::move(cells), std::get<Element>(std::move(sum)),
      r.mul(a.multiplicative_constant(), b.multiplicative_constant()));
}

RingMagicSquare scalar_act(const Element& s, const RingMagicSquare& a) {
  const auto& r = *a.ring();
  r.require_member(s);
  auto cells = a.entries().map([&](const Element& x) { return r.mul(s, x); });
  Element power = r.one();
  for (std::size_t i = 0; i < a.order(); ++i) power = r.mul(power, s);
  return RingSquareAccess::make(a.ring(), std::move(cells),
                                r.mul(s, a.additive_constant()),
                                r.mul(power, a.multiplicative_constant()));
}

namespace {

using detail::FiniteTables;
using Index = FiniteTables::Index;
using IndexSquare = std::vector<Index>;

struct IndexLines {
  const FiniteTables& t;
  std::size_t n;

  Index fold_row(const std::vector<std::vector<Index>>& op,
                 const IndexSquare& s, std::size_t i) const {
    Index acc = s[i * n];
    for (std::size_t j = 1; j < n; ++j) acc = op[acc][s[i * n + j]];
    return acc;
  }
  Index fold_col(const std::vector<std::vector<Index>>& op,
                 const IndexSquare& s, std::size_t j) const {
    Index acc = s[j];
    for (std::size_t i = 1; i < n; ++i) acc = op[acc][s[i * n + j]];
    return acc;
  }
  // First line whose fold differs from row 0.
  std::optional<LineRef> first_deviation(
      const std::vector<std::vector<Index>>& op, const IndexSquare& s) const {
    const Index c = fold_row(op, s, 0);
    for (std::size_t i = 1; i < n; ++i)
      if (fold_row(op, s, i) != c) return LineRef{LineRef::Kind::Row, i};
    for (std::size_t j = 0; j < n; ++j)
      if (fold_col(op, s, j) != c) return LineRef{LineRef::Kind::Column, j};
    return std::nullopt;
  }
  Index fold_line(const std::vector<std::vector<Index>>& op,
                  const IndexSquare& s, const LineRef& line) const {
    return line.kind == LineRef::Kind::Row ? fold_row(op, s, line.index)
                                           : fold_col(op, s, line.index);
  }
};

std::vector<IndexSquare> index_members(const FiniteTables& t, std::size_t n) {
  IndexLines lines{t, n};
  std::vector<IndexSquare> out;
  detail::for_each_index_square(
      t.size(), n,
      [&](const IndexSquare& s, std::size_t i) {
        return i == 0 ||
               (lines.fold_row(t.add, s, i) == lines.fold_row(t.add, s, 0) &&
                lines.fold_row(t.mul, s, i) == lines.fold_row(t.mul, s, 0));
      },
      [&](const IndexSquare& s) {
        if (!lines.first_deviation(t.add, s) && !lines.first_deviation(t.mul, s))
          out.push_back(s);
      });
  return out;
}

ElementMatrix to_elements(const FiniteTables& t, std::size_t n,
                          const IndexSquare& s) {
  std::vector<Element> cells;
  cells.reserve(s.size());
  for (Index v : s) cells.push_back(t.elements[v]);
  return ElementMatrix(n, std::move(cells));
}

struct PartialVerdict {
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
  std::optional<std::pair<std::size_t, std::size_t>> first;
  std::optional<LineRef> line;
};

struct BlockResult {
  PartialVerdict add;
  PartialVerdict mul;
};

BlockResult scan_block(const FiniteTables& t, std::size_t n,
                       const std::vector<IndexSquare>& members,
                       std::size_t begin, std::size_t end) {
  IndexLines lines{t, n};
  BlockResult out;
  IndexSquare tmp(n * n);
  auto record = [](PartialVerdict& v, std::size_t i, std::size_t j,
                   std::optional<LineRef> bad) {
    ++v.pairs;
    if (!bad) return;
    ++v.violations;
    if (!v.first) {
      v.first = {i, j};
      v.line = bad;
    }
  };
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      const auto& a = members[i];
      const auto& b = members[j];
      for (std::size_t k = 0; k < tmp.size(); ++k) tmp[k] = t.add[a[k]][b[k]];
      record(out.add, i, j, lines.first_deviation(t.mul, tmp));
      for (std::size_t k = 0; k < tmp.size(); ++k) tmp[k] = t.mul[a[k]][b[k]];
      record(out.mul, i, j, lines.first_deviation(t.add, tmp));
    }
  return out;
}

OperationVerdict finish(std::string name, const FiniteTables& t, std::size_t n,
                        const std::vector<IndexSquare>& members,
                        const PartialVerdict& v, bool additive_op) {
  OperationVerdict out;
  out.operation = std::move(name);
  out.pairs_checked = v.pairs;
  out.violations = v.violations;
  if (v.first) {
    const auto [i, j] = *v.first;
    const auto& op = additive_op ? t.add : t.mul;
    const auto& other = additive_op ? t.mul : t.add;
    IndexSquare result(n * n);
    for (std::size_t k = 0; k < result.size(); ++k)
      result[k] = op[members[i][k]][members[j][k]];
    IndexLines lines{t, n};
    ClosureCounterexample ce;
    ce.left_index = i;
    ce.right_index = j;
    ce.left = to_elements(t, n, members[i]);
    ce.right = to_elements(t, n, members[j]);
    ce.result = to_elements(t, n, result);
    ce.broken = additive_op ? Clause::Multiplicative : Clause::Additive;
    ce.line = *v.line;
    ce.expected = t.elements[lines.fold_row(other, result, 0)].to_string();
    ce.actual = t.elements[lines.fold_line(other, result, *v.line)].to_string();
    out.first = std::move(ce);
  }
  return out;
}

void merge(PartialVerdict& into, const PartialVerdict& from) {
  into.pairs += from.pairs;
  into.violations += from.violations;
  // Blocks are merged in ascending order, so the earliest block wins.
  if (!into.first && from.first) {
    into.first = from.first;
    into.line = from.line;
  }
}

}  // namespace

std::vector<RingMagicSquare> all_rms(const RingPtr& ring, std::size_t n,
                                     std::uint64_t limit) {
  if (n == 0) throw NotSquare("generic magic squares have order at least 1");
  detail::require_candidate_budget(*ring, n, limit);
  const auto t = FiniteTables::of_group(*ring, limit);
  std::vector<RingMagicSquare> out;
  for (const auto& s : index_members(t, n))
    out.push_back(rverify(ring, to_elements(t, n, s)));
  return out;
}

ClosureReport closure_search(const RingPtr& ring, std::size_t n,
                             const ClosureOptions& options) {
  if (n == 0) throw NotSquare("generic magic squares have order at least 1");
  detail::require_candidate_budget(*ring, n, options.budget);
  const auto t = FiniteTables::of_group(*ring, options.budget);
  const auto members = index_members(t, n);

  ClosureReport report;
  report.ring = ring->name();
  report.order = n;
  report.candidates = static_cast<std::uint64_t>(
      boost::multiprecision::pow(Integer(t.size()), static_cast<unsigned>(n * n)));
  report.members = members.size();

  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(options.workers, members.size()));
  std::vector<BlockResult> blocks(workers);
  auto bounds = [&](std::size_t w) {
    return std::pair{members.size() * w / workers, members.size() * (w + 1) / workers};
  };
  if (workers == 1) {
    blocks[0] = scan_block(t, n, members, 0, members.size());
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        auto [b, e] = bounds(w);
        blocks[w] = scan_block(t, n, members, b, e);
      });
    for (auto& th : pool) th.join();
  }

  BlockResult total;
  for (const auto& b : blocks) {
    merge(total.add, b.add);
    merge(total.mul, b.mul);
  }
  report.add = finish("add_p", t, n, members, total.add, true);
  report.mul = finish("mul_p", t, n, members, total.mul, false);
  return report;
}

}  // namespace magic
