#pragma once

#include <cstddef>
#include <vector>

#include "conerank/field.hpp"

namespace conerank {

/// Dense integer matrix, row-major.
using IntMatrix = std::vector<std::vector<long long>>;

/// Rank over the given field. GF(p): plain Gaussian elimination on residues.
/// ℚ: fraction-free (Bareiss) elimination over the integers.
std::size_t matrix_rank(const IntMatrix& rows, Field field);

}  // namespace conerank
