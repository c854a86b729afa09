#pragma once

#include <cstddef>
#include <vector>

#include "dt4/exact.hpp"

namespace dt4::linalg {

/// Dense integer matrix, row-major.
using IntMatrix = std::vector<std::vector<long>>;

/// Rank over Q by fraction-free (Bareiss) elimination; all arithmetic exact.
std::size_t exact_rank(const IntMatrix& m);

}  // namespace dt4::linalg
