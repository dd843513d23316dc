#pragma once

// Exact integer linear algebra for the lattice and matroid modules.

#include <cstddef>
#include <optional>
#include <vector>

#include "magic/integer.hpp"

namespace magic::linear {

using Vector = std::vector<Integer>;
// Row-major list of rows; all rows must have equal length.
using Matrix = std::vector<Vector>;

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(Matrix rows);

// A Z-basis of {x in Z^k : A x = 0} where k is the column count of A.
// Computed by unimodular column reduction, so every integer solution is an
// integer combination of the returned vectors.
std::vector<Vector> integer_kernel(const Matrix& a, std::size_t columns);

// Solves sum_i coeff_i * vectors[i] = target over Q. Returns nullopt when
// the target is outside the rational span or the solution is not unique.
std::optional<std::vector<Rational>> solve_combination(
    const std::vector<Vector>& vectors, const Vector& target);

}  // namespace magic::linear
