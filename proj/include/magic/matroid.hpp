#pragma once

// Independence systems on small ground sets and the matroid axioms:
//   (I.1) the empty set is independent;
//   (I.2) subsets of independent sets are independent;
//   (I.3) if |I1| < |I2| there is e in I2 - I1 with I1 + e independent.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magic/error.hpp"
#include "magic/pms.hpp"

namespace magic {

class GroundSetTooLarge : public Error {
 public:
  using Error::Error;
};

// Sorted, duplicate-free element indices.
using IndexSet = std::vector<std::size_t>;

class IndependenceSystem {
 public:
  static constexpr std::size_t kMaxGround = 20;

  // Throws std::invalid_argument when a member references an index outside
  // the ground set, and GroundSetTooLarge past kMaxGround elements.
  IndependenceSystem(std::vector<std::string> labels,
                     std::vector<IndexSet> independent);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t ground_size() const { return labels_.size(); }
  // Members in ascending lexicographic order of their index lists.
  const std::vector<IndexSet>& independent() const { return independent_; }
  bool contains(const IndexSet& s) const;

  // Size of the largest independent subset of `subset`.
  std::size_t rank(const IndexSet& subset) const;

 private:
  std::vector<std::string> labels_;
  std::vector<IndexSet> independent_;
  std::vector<std::uint32_t> masks_;  // sorted, for lookup
};

enum class MatroidAxiom { EmptySet, Hereditary, Exchange };
std::string to_string(MatroidAxiom a);

struct MatroidVerdict {
  bool is_matroid = true;
  std::optional<MatroidAxiom> violated;
  // EmptySet: empty. Hereditary: {I, missing subset}. Exchange: {I1, I2}
  // with no augmenting element.
  std::vector<IndexSet> witness;
  std::string detail;
};

// Exhaustive check. Axioms are tested in order I.1, I.2, I.3. For I.2 the
// witness is the first member (in member order) with a missing subset, and
// that subset. For I.3 it is the first pair (I1, I2) with |I2| = |I1| + 1
// that cannot be augmented; once I.2 holds, that size gap is equivalent to
// the full axiom.
MatroidVerdict is_matroid(const IndependenceSystem& sys);

// Independent sets are the subsets whose flattened entry vectors are
// linearly independent over Q. Throws OrderMismatch or GroundSetTooLarge.
IndependenceSystem vector_matroid(const std::vector<PseudoMagicSquare>& ground,
                                  std::vector<std::string> labels = {});

}  // namespace magic
