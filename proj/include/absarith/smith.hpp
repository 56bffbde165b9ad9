#pragma once

#include <vector>

#include "absarith/types.hpp"

namespace absarith {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Diagonal of the Smith normal form: nonnegative d_1 | d_2 | ... of length
/// min(rows, cols). All rows must have the same length.
std::vector<Integer> smith_diagonal(IntMatrix m);

/// Invariant factors (entries > 1, ascending) of Z^cols modulo the row span of
/// `relations`. DomainError when the quotient is infinite.
std::vector<Integer> invariant_factors(const IntMatrix& relations, std::size_t cols);

}  // namespace absarith
