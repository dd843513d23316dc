#include "magic/matroid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "magic/linear.hpp"

namespace magic {

namespace {

using Mask = std::uint32_t;

Mask to_mask(const IndexSet& s) {
  Mask m = 0;
  for (auto i : s) m |= Mask{1} << i;
  return m;
}

IndexSet to_set(Mask m) {
  IndexSet s;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1) s.push_back(i);
  return s;
}

std::string show(const IndexSet& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += labels[s[k]];
  }
  return out + "}";
}

}  // namespace

std::string to_string(MatroidAxiom a) {
  switch (a) {
    case MatroidAxiom::EmptySet: return "I.1 empty set";
    case MatroidAxiom::Hereditary: return "I.2 hereditary";
    case MatroidAxiom::Exchange: return "I.3 exchange";
  }
  return "?";
}

IndependenceSystem::IndependenceSystem(std::vector<std::string> labels,
                                       std::vector<IndexSet> independent)
    : labels_(std::move(labels)) {
  if (labels_.size() > kMaxGround)
    throw GroundSetTooLarge("ground set has " + std::to_string(labels_.size()) +
                            " elements, limit is " + std::to_string(kMaxGround));
  for (auto& s : independent) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (auto i : s)
      if (i >= labels_.size())
        throw std::invalid_argument("independent set references element " +
                                    std::to_string(i) + " outside the ground set");
  }
  std::sort(independent.begin(), independent.end());
  independent.erase(std::unique(independent.begin(), independent.end()),
                    independent.end());
  independent_ = std::move(independent);
  for (const auto& s : independent_) masks_.push_back(to_mask(s));
  std::sort(masks_.begin(), masks_.end());
}

bool IndependenceSystem::contains(const IndexSet& s) const {
  return std::binary_search(masks_.begin(), masks_.end(), to_mask(s));
}

std::size_t IndependenceSystem::rank(const IndexSet& subset) const {
  const Mask within = to_mask(subset);
  std::size_t best = 0;
  for (Mask m : masks_)
    if ((m & ~within) == 0)
      best = std::max<std::size_t>(best, std::popcount(m));
  return best;
}

MatroidVerdict is_matroid(const IndependenceSystem& sys) {
  MatroidVerdict v;
  const auto& members = sys.independent();
  const auto& labels = sys.labels();
  auto fail = [&](MatroidAxiom a, std::vector<IndexSet> witness,
                  std::string detail) {
    v.is_matroid = false;
    v.violated = a;
    v.witness = std::move(witness);
    v.detail = std::move(detail);
    return v;
  };

  if (!sys.contains({}))
    return fail(MatroidAxiom::EmptySet, {}, "empty set is not independent");

  for (const auto& s : members) {
    // Removing a later element gives a lexicographically smaller set, so scan
    // removals from the back to report the least missing subset first.
    for (std::size_t k = s.size(); k-- > 0;) {
      IndexSet sub = s;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
      if (!sys.contains(sub))
        return fail(MatroidAxiom::Hereditary, {s, sub},
                    show(sub, labels) + " is a subset of independent " +
                        show(s, labels) + " but is not independent");
    }
  }

  // With I.2 in place, exchange between sizes k and k + 1 implies it for all
  // size gaps: shrink I2 to |I1| + 1 elements and augment from there.
  std::size_t max_size = 0;
  for (const auto& s : members) max_size = std::max(max_size, s.size());
  std::vector<std::vector<const IndexSet*>> by_size(max_size + 1);
  for (const auto& s : members) by_size[s.size()].push_back(&s);

  for (const auto& s1 : members) {
    if (s1.size() >= max_size) continue;
    const Mask m1 = to_mask(s1);
    Mask extend = 0;
    for (std::size_t e = 0; e < sys.ground_size(); ++e) {
      const Mask bit = Mask{1} << e;
      if (m1 & bit) continue;
      IndexSet grown = to_set(m1 | bit);
      if (sys.contains(grown)) extend |= bit;
    }
    for (const IndexSet* s2 : by_size[s1.size() + 1]) {
      if ((to_mask(*s2) & ~m1 & extend) == 0)
        return fail(MatroidAxiom::Exchange, {s1, *s2},
                    "no element of " + show(*s2, labels) + " extends " +
                        show(s1, labels));
    }
  }
  return v;
}

IndependenceSystem vector_matroid(const std::vector<PseudoMagicSquare>& ground,
                                  std::vector<std::string> labels) {
  if (ground.size() > IndependenceSystem::kMaxGround)
    throw GroundSetTooLarge("ground set has " + std::to_string(ground.size()) +
                            " elements, limit is " +
                            std::to_string(IndependenceSystem::kMaxGround));
  for (const auto& a : ground)
    if (a.order() != ground.front().order())
      throw OrderMismatch(ground.front().order(), a.order());
  if (labels.empty())
    for (std::size_t i = 0; i < ground.size(); ++i)
      labels.push_back("A" + std::to_string(i));
  if (labels.size() != ground.size())
    throw std::invalid_argument("label count differs from ground set size");

  std::vector<linear::Vector> vectors;
  for (const auto& a : ground)
    vectors.emplace_back(a.entries().cells().begin(), a.entries().cells().end());

  const Mask count = Mask{1} << ground.size();
  std::vector<bool> independent(count, false);
  independent[0] = true;
  std::vector<IndexSet> sets{{}};
  for (Mask m = 1; m < count; ++m) {
    const Mask top = std::bit_floor(m);
    if (!independent[m ^ top]) continue;
    linear::Matrix rows;
    for (auto i : to_set(m)) rows.push_back(vectors[i]);
    if (linear::rank(std::move(rows)) == static_cast<std::size_t>(std::popcount(m))) {
      independent[m] = true;
      sets.push_back(to_set(m));
    }
  }
  return IndependenceSystem(std::move(labels), std::move(sets));
}

}  // namespace magic
