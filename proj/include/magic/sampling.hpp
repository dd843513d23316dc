#pragma once

// Seeded random generators for property checks.

#include <cstddef>
#include <random>
#include <vector>

#include "magic/gms.hpp"
#include "magic/pms.hpp"
#include "magic/ring_gms.hpp"

namespace magic {

// Random integer combination of `basis` whose entries all lie in
// [-entry_bound, entry_bound]. Coefficients are drawn from a window small
// enough that the bound holds for every draw.
PseudoMagicSquare random_pms(const std::vector<PseudoMagicSquare>& basis,
                             std::mt19937_64& rng,
                             const Integer& entry_bound = 1000000);

// Random GMS: the top-left (n-1) x (n-1) block and the constant are drawn
// freely, the last column and row are solved for. Works in any abelian
// group. `bound` limits Z components.
GroupMagicSquare random_gms(const GroupPtr& group, std::size_t n,
                            std::mt19937_64& rng,
                            const Integer& bound = 1000000);

// Square whose row i is `first_row` rotated right by i. Every row and column
// is a permutation of the first row, so both constants exist.
RingMagicSquare circulant_rms(const RingPtr& ring,
                              const std::vector<Element>& first_row);

RingMagicSquare random_circulant_rms(const RingPtr& ring, std::size_t n,
                                     std::mt19937_64& rng,
                                     const Integer& bound = 1000);

}  // namespace magic
