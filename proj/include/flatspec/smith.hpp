#pragma once

#include <vector>

#include "flatspec/types.hpp"

namespace flatspec {

/// U * A * V = S with U, V unimodular and S diagonal in Smith normal form:
/// nonnegative invariant factors, each dividing the next, zeros trailing.
/// Matrices are integer-valued (stored on the rational scalar for uniformity
/// with the rest of the library).
struct SmithDecomposition {
  Mat u;
  Mat s;
  Mat v;
  std::vector<Int> invariant_factors;  // diagonal of s, including trailing zeros

  int rank() const {
    int r = 0;
    for (const Int& f : invariant_factors)
      if (f != 0) ++r;
    return r;
  }
};

SmithDecomposition smith_normal_form(const IMat& a);

/// Basis of the saturated integer kernel {x in Z^n : a x = 0}; columns.
IMat integer_kernel(const IMat& a);

}  // namespace flatspec
