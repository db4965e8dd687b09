#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lstrat/exact.hpp"

namespace lstrat {

// Rational row reduction.
std::size_t rank(const std::vector<RatVec>& rows, std::size_t ncols);
// Basis of {x : row . x = 0 for every row}.
std::vector<RatVec> nullspace(const std::vector<RatVec>& rows, std::size_t ncols);
// Some x with x . row_i = rhs_i for all i, if one exists.
std::optional<RatVec> solve(const std::vector<RatVec>& rows, const RatVec& rhs, std::size_t ncols);

// Row-style Hermite normal form. `hnf` holds the nonzero rows in echelon
// form: positive pivots, entries above each pivot reduced into [0, pivot).
// When requested, `transform` U and `inverse` satisfy U * input = [hnf; 0].
struct HermiteForm {
  IntMatrix hnf;
  std::vector<std::size_t> pivots;
  IntMatrix transform;
  IntMatrix inverse;
};

HermiteForm hermite(const IntMatrix& rows, std::size_t ncols, bool with_transform = false);

// Rows spanning the integer left kernel {u : u * rows = 0}.
IntMatrix left_kernel(const IntMatrix& rows, std::size_t ncols);

IntMatrix transpose(const IntMatrix& m, std::size_t ncols);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b, std::size_t bcols);

}  // namespace lstrat
