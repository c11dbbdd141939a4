#pragma once

#include "homlab/count.hpp"

#include <optional>
#include <vector>

namespace homlab {

/// Dense integer matrix, row-major. All rows have equal length.
using IntMatrix = std::vector<std::vector<Count>>;

struct Echelon {
  std::size_t rank = 0;
  /// Column of each pivot, in increasing order.
  std::vector<std::size_t> pivot_columns;
};

/// Fraction-free (Bareiss) elimination; every division is exact.
Echelon bareiss_echelon(const IntMatrix& m);
std::size_t exact_rank(const IntMatrix& m);
/// Square matrices only; throws InvalidArgument otherwise.
Count determinant(const IntMatrix& m);

IntMatrix transpose(const IntMatrix& m);
/// m restricted to the given columns.
IntMatrix select_columns(const IntMatrix& m, const std::vector<std::size_t>& cols);

/// Primitive integer vector x != 0 with m x = 0 (first nonzero entry
/// positive), or nullopt if the columns are independent.
std::optional<std::vector<Count>> kernel_vector(const IntMatrix& m);
/// Primitive integer vector y != 0 with y^T m = 0, or nullopt.
std::optional<std::vector<Count>> left_kernel_vector(const IntMatrix& m);

/// y^T m, exact.
std::vector<Count> left_multiply(const std::vector<Count>& y, const IntMatrix& m);

}  // namespace homlab
