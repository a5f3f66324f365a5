#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "flatspec/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<flatspec::Rational> {
  using Real = flatspec::Rational;
  using NonInteger = flatspec::Rational;
  using Literal = flatspec::Rational;
  using Nested = flatspec::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static flatspec::Rational epsilon() { return flatspec::Rational(0); }
  static flatspec::Rational dummy_precision() { return flatspec::Rational(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace flatspec {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

inline Mat to_rational(const IMat& m) {
  Mat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

inline Vec to_rational(const IVec& v) {
  Vec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rational(v(i));
  return r;
}

/// Strict lexicographic order on integer vectors; the canonical enumeration
/// order used throughout.
inline bool lex_less(const IVec& a, const IVec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

inline bool lex_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

}  // namespace flatspec
