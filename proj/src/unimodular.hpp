#pragma once

// Pivoting helpers shared by the matroid and polynomial code. All of them
// keep a {-1,0,1} matrix in {-1,0,1} when the input is totally unimodular,
// and throw ErrorKind::not_unimodular when that fails.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mjac/matrix.hpp"

namespace mjac::detail {

/// First row at or below `from` with a nonzero entry in column `col`.
/// Throws if the only nonzero entries are not +-1.
std::optional<std::size_t> find_unit_pivot(const IntMatrix& a, std::size_t col,
                                           std::size_t from = 0);

/// Gauss-Jordan pivot on (row, col): scales the row to make the pivot 1 and
/// clears the rest of the column.
void pivot(IntMatrix& a, std::size_t row, std::size_t col);

/// Rank by elimination on +-1 pivots.
std::size_t unit_pivot_rank(IntMatrix a);

/// True when removing column `col` lowers the rank of a full-row-rank `a`.
bool is_coloop(const IntMatrix& a, std::size_t col);

/// Reduced row echelon form on +-1 pivots; returns the pivot column of
/// each row. Input must have full row rank.
std::vector<std::size_t> reduce_to_standard_form(IntMatrix& a);

/// Byte key of the reduced row echelon form, canonical for the row space.
std::string canonical_key(IntMatrix a);

}  // namespace mjac::detail
