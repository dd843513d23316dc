#include "magic/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace magic {

namespace {

constexpr std::int64_t kMaxMagnitude = std::int64_t{1} << 40;
constexpr std::size_t kMaxOrder = 64;

using Raw = SquareMatrix<std::int64_t>;

// Depth-first search over row-major cells. The last cell of each row is
// forced by the row sum and the whole last row by the column deficits; when
// the constant is free it is fixed by the completed first row.
class Search {
 public:
  explicit Search(const SearchSpec& spec)
      : spec_(spec),
        n_(spec.order),
        cells_(n_ * n_, 0),
        row_(n_, 0),
        col_(n_, 0),
        constant_(spec.constant) {}

  // Values the first cell may take, in ascending order.
  std::vector<std::int64_t> first_cell_values() {
    std::vector<std::int64_t> out;
    if (forced(0)) {
      out.push_back(forced_value(0));
    } else {
      auto [lo, hi] = free_range(0);
      for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
  }

  template <class Emit>
  void run_from_first(std::int64_t first, Emit&& emit) {
    place(0, first, emit);
  }

 private:
  bool forced(std::size_t pos) const {
    const std::size_t i = pos / n_, j = pos % n_;
    return constant_ && (i == n_ - 1 || j == n_ - 1);
  }

  std::int64_t forced_value(std::size_t pos) const {
    const std::size_t i = pos / n_, j = pos % n_;
    return i == n_ - 1 ? *constant_ - col_[j] : *constant_ - row_[i];
  }

  // Range for a free cell, tightened so the forced cells of its row and
  // column can still land in [lo, hi].
  std::pair<std::int64_t, std::int64_t> free_range(std::size_t pos) const {
    std::int64_t lo = spec_.lo, hi = spec_.hi;
    if (!constant_) return {lo, hi};
    const std::size_t i = pos / n_, j = pos % n_;
    const auto c = *constant_;
    const auto row_rest = static_cast<std::int64_t>(n_ - 1 - j);
    const auto col_rest = static_cast<std::int64_t>(n_ - 1 - i);
    lo = std::max({lo, c - row_[i] - row_rest * spec_.hi,
                   c - col_[j] - col_rest * spec_.hi});
    hi = std::min({hi, c - row_[i] - row_rest * spec_.lo,
                   c - col_[j] - col_rest * spec_.lo});
    return {lo, hi};
  }

  bool is_used(std::size_t pos, std::int64_t v) const {
    for (std::size_t k = 0; k < pos; ++k)
      if (cells_[k] == v) return true;
    return false;
  }

  template <class Emit>
  void place(std::size_t pos, std::int64_t v, Emit& emit) {
    if (v < spec_.lo || v > spec_.hi) return;
    if (spec_.require_distinct_entries && is_used(pos, v)) return;
    const std::size_t i = pos / n_, j = pos % n_;
    cells_[pos] = v;
    row_[i] += v;
    col_[j] += v;
    const bool fixes_constant = !constant_ && i == 0 && j == n_ - 1;
    if (fixes_constant) constant_ = row_[0];
    const bool ok = (j != n_ - 1 || row_[i] == *constant_) &&
                    (i != n_ - 1 || col_[j] == *constant_);
    if (ok) descend(pos + 1, emit);
    if (fixes_constant) constant_.reset();
    row_[i] -= v;
    col_[j] -= v;
  }

  template <class Emit>
  void descend(std::size_t pos, Emit& emit) {
    if (pos == cells_.size()) {
      emit(Raw(n_, cells_));
      return;
    }
    if (forced(pos)) {
      place(pos, forced_value(pos), emit);
      return;
    }
    auto [lo, hi] = free_range(pos);
    for (std::int64_t v = lo; v <= hi; ++v) place(pos, v, emit);
  }

  const SearchSpec& spec_;
  std::size_t n_;
  std::vector<std::int64_t> cells_;
  std::vector<std::int64_t> row_;
  std::vector<std::int64_t> col_;
  std::optional<std::int64_t> constant_;
};

PseudoMagicSquare to_pms(const Raw& raw) {
  return verify(raw.map([](std::int64_t v) { return Integer(v); }));
}

void enumerate_raw(const SearchSpec& spec, const EnumerateOptions& options,
                   const std::function<void(const Raw&)>& sink) {
  spec.validate();
  if (spec.estimated_nodes() > options.node_budget)
    throw BudgetExceeded("search needs about " + spec.estimated_nodes().str() +
                         " leaves, budget is " +
                         std::to_string(options.node_budget));

  const auto firsts = Search(spec).first_cell_values();
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.workers,
                                      static_cast<unsigned>(firsts.size())));
  if (workers == 1) {
    Search search(spec);
    for (auto v : firsts) search.run_from_first(v, sink);
    return;
  }

  // One task per first-row prefix; merged in prefix order.
  std::vector<std::vector<Raw>> results(firsts.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      Search search(spec);
      for (std::size_t t; (t = next.fetch_add(1)) < firsts.size();)
        search.run_from_first(firsts[t],
                              [&](const Raw& r) { results[t].push_back(r); });
    });
  for (auto& th : pool) th.join();
  for (const auto& chunk : results)
    for (const auto& r : chunk) sink(r);
}

}  // namespace

void SearchSpec::validate() const {
  if (order == 0 || order > kMaxOrder)
    throw InvalidSearchSpec("order must be between 1 and " +
                            std::to_string(kMaxOrder));
  if (lo > hi) throw InvalidSearchSpec("empty entry range: lo > hi");
  if (lo < -kMaxMagnitude || hi > kMaxMagnitude)
    throw InvalidSearchSpec("entry bounds must lie within +-2^40");
  if (constant) {
    const auto n = static_cast<std::int64_t>(order);
    if (*constant < n * lo || *constant > n * hi)
      throw InfeasibleConstant("constant " + std::to_string(*constant) +
                               " is outside [" + std::to_string(n * lo) + ", " +
                               std::to_string(n * hi) + "]");
  }
}

Integer SearchSpec::estimated_nodes() const {
  const Integer width = Integer(hi) - Integer(lo) + 1;
  const std::size_t free_cells =
      (order - 1) * (order - 1) + (constant ? 0 : 1);
  return boost::multiprecision::pow(width, static_cast<unsigned>(free_cells));
}

void enumerate_pms(const SearchSpec& spec,
                   const std::function<void(const PseudoMagicSquare&)>& sink,
                   const EnumerateOptions& options) {
  enumerate_raw(spec, options, [&](const Raw& r) { sink(to_pms(r)); });
}

std::vector<PseudoMagicSquare> enumerate_pms(const SearchSpec& spec,
                                             const EnumerateOptions& options) {
  std::vector<PseudoMagicSquare> out;
  enumerate_pms(spec, [&](const PseudoMagicSquare& a) { out.push_back(a); },
                options);
  return out;
}

PseudoMagicSquare canonical_form(const PseudoMagicSquare& a) {
  return verify(canonical_image(a.entries()));
}

std::vector<EquivalenceClass> count_classes(const SearchSpec& spec,
                                            const EnumerateOptions& options) {
  std::map<Raw, std::size_t> orbits;
  enumerate_raw(spec, options, [&](const Raw& r) { ++orbits[canonical_image(r)]; });
  std::vector<EquivalenceClass> out;
  out.reserve(orbits.size());
  for (const auto& [rep, size] : orbits) out.push_back({to_pms(rep), size});
  return out;
}

}  // namespace magic
