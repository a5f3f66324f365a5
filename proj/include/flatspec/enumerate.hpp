#pragma once

#include <functional>
#include <vector>

#include "flatspec/types.hpp"

namespace flatspec {

/// Visits every integer vector m (dimension = basis.cols()) with
///   f(m) = (offset + basis*m)^T gram (offset + basis*m) <= bound,
/// reporting the exact value of f. gram must be positive definite and basis
/// must have full column rank. Coordinate bounds come from the exact rational
/// LDL decomposition of basis^T gram basis; a floating-point guess seeds each
/// range and is then corrected against the exact predicate, so membership is
/// never decided in floating point.
void enumerate_affine_ball(const Mat& gram, const Mat& basis, const Vec& offset,
                           const Rational& bound,
                           const std::function<void(const IVec&, const Rational&)>& visit);

/// All v in Z^n with v^T gram v = mu, in lexicographic order.
std::vector<IVec> enumerate_shell(const Mat& gram, const Rational& mu);

struct BallShell {
  Rational norm_sq;
  std::vector<IVec> vectors;  // lexicographic order
};

/// All v with v^T gram v <= mu_max, grouped by exact squared norm, ascending.
std::vector<BallShell> enumerate_ball(const Mat& gram, const Rational& mu_max);

}  // namespace flatspec
