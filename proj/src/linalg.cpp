#include "flatspec/linalg.hpp"

#include <Eigen/LU>

#include <stdexcept>

namespace flatspec {

Rational det(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix not square");
  if (a.rows() == 0) return Rational(1);
  Eigen::FullPivLU<Mat> lu(a);
  return lu.determinant();
}

Mat inverse(const Mat& a) {
  Eigen::FullPivLU<Mat> lu(a);
  if (!lu.isInvertible()) throw std::domain_error("inverse: singular matrix");
  return lu.inverse();
}

int rank(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::FullPivLU<Mat> lu(a);
  return static_cast<int>(lu.rank());
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  Eigen::FullPivLU<Mat> lu(a);
  Vec x = lu.solve(b);
  if (((a * x) - b).isZero(Rational(0))) return x;
  return std::nullopt;
}

Mat kernel(const Mat& a) {
  if (a.cols() == 0) return Mat(a.cols(), 0);
  Eigen::FullPivLU<Mat> lu(a);
  return lu.kernel().eval();
}

bool is_identity(const Mat& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

bool is_symmetric(const Mat& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

bool is_positive_definite(const Mat& a) {
  if (!is_symmetric(a)) return false;
  for (Eigen::Index k = 1; k <= a.rows(); ++k) {
    if (det(a.topLeftCorner(k, k)) <= Rational(0)) return false;
  }
  return true;
}

bool is_integral(const Mat& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_integer()) return false;
  return true;
}

IMat to_integral(const Mat& a) {
  IMat r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r(i, j) = a(i, j).to_integer().convert_to<std::int64_t>();
  return r;
}

namespace {

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

// Column-style Hermite normal form of an integer matrix held as rational
// entries: lower echelon, positive pivots, entries right of a pivot reduced
// into [0, pivot). Unimodular column operations only.
Mat hermite_columns(Mat m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index pivot_col = 0;
  for (Eigen::Index r = 0; r < rows && pivot_col < cols; ++r) {
    // gcd-eliminate row r across columns pivot_col..cols-1
    while (true) {
      Eigen::Index jmin = -1;
      for (Eigen::Index j = pivot_col; j < cols; ++j) {
        if (m(r, j).is_zero()) continue;
        if (jmin < 0 || abs(m(r, j)) < abs(m(r, jmin))) jmin = j;
      }
      if (jmin < 0) break;
      if (jmin != pivot_col) m.col(pivot_col).swap(m.col(jmin));
      if (m(r, pivot_col).sign() < 0) m.col(pivot_col) = -m.col(pivot_col);
      bool reduced = true;
      for (Eigen::Index j = pivot_col + 1; j < cols; ++j) {
        if (m(r, j).is_zero()) continue;
        Rational q((m(r, j) / m(r, pivot_col)).floor());
        m.col(j) -= m.col(pivot_col) * q;
        if (!m(r, j).is_zero()) reduced = false;
      }
      if (reduced) break;
    }
    if (m(r, pivot_col).is_zero()) continue;  // row has no pivot, keep scanning rows
    // reduce earlier pivot columns against this one
    for (Eigen::Index j = 0; j < pivot_col; ++j) {
      Rational q((m(r, j) / m(r, pivot_col)).floor());
      m.col(j) -= m.col(pivot_col) * q;
    }
    ++pivot_col;
  }
  return m.leftCols(pivot_col).eval();
}

}  // namespace

Mat lattice_basis(const Mat& a) {
  if (a.cols() == 0) return Mat(a.rows(), 0);
  Int scale(1);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) scale = lcm_int(scale, a(i, j).den());
  Mat scaled = a * Rational(scale);
  Mat h = hermite_columns(std::move(scaled));
  // Column HNF with the reduction convention above is canonical; two spanning
  // sets of the same lattice land on the same h.
  return h / Rational(scale);
}

bool lattice_contains(const Mat& basis, const Vec& x) {
  if (basis.cols() == 0) return x.isZero(Rational(0));
  auto sol = solve(basis, x);
  if (!sol) return false;
  for (Eigen::Index i = 0; i < sol->size(); ++i)
    if (!(*sol)(i).is_integer()) return false;
  return true;
}

bool lattices_equal(const Mat& a, const Mat& b) {
  Mat ca = lattice_basis(a);
  Mat cb = lattice_basis(b);
  if (ca.rows() != cb.rows() || ca.cols() != cb.cols()) return false;
  for (Eigen::Index i = 0; i < ca.rows(); ++i)
    for (Eigen::Index j = 0; j < ca.cols(); ++j)
      if (ca(i, j) != cb(i, j)) return false;
  return true;
}

}  // namespace flatspec
