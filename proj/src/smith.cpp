#include "flatspec/smith.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

namespace flatspec {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Dense integer grid with row/column operations; plain storage so the
// bignum scalar never meets Eigen's expression machinery.
struct Grid {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;

  Grid(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}
  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Grid identity(std::size_t n) {
    Grid g(n, n);
    for (std::size_t i = 0; i < n; ++i) g.at(i, i) = 1;
    return g;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols; ++k) std::swap(at(i, k), at(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows; ++k) std::swap(at(k, i), at(k, j));
  }
  void add_row(std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t k = 0; k < cols; ++k) at(dst, k) += f * at(src, k);
  }
  void add_col(std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t k = 0; k < rows; ++k) at(k, dst) += f * at(k, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols; ++k) at(i, k) = -at(i, k);
  }

  Mat to_mat() const {
    Mat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Rational(at(i, j));
    return m;
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IMat& input) {
  const auto m = static_cast<std::size_t>(input.rows());
  const auto n = static_cast<std::size_t>(input.cols());
  Grid s(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s.at(i, j) = Int(input(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
  Grid u = Grid::identity(m);
  Grid v = Grid::identity(n);

  const std::size_t steps = std::min(m, n);
  for (std::size_t k = 0; k < steps; ++k) {
    while (true) {
      // smallest nonzero entry of the trailing block to (k, k)
      std::size_t pi = k, pj = k;
      bool found = false;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j) {
          if (s.at(i, j) == 0) continue;
          if (!found || abs_int(s.at(i, j)) < abs_int(s.at(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) goto done;  // trailing block all zero
      s.swap_rows(k, pi);
      u.swap_rows(k, pi);
      s.swap_cols(k, pj);
      v.swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (s.at(i, k) == 0) continue;
        Int q = s.at(i, k) / s.at(k, k);
        s.add_row(i, k, -q);
        u.add_row(i, k, -q);
        if (s.at(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (s.at(k, j) == 0) continue;
        Int q = s.at(k, j) / s.at(k, k);
        s.add_col(j, k, -q);
        v.add_col(j, k, -q);
        if (s.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pivot must divide the rest of the trailing block
      bool divides = true;
      for (std::size_t i = k + 1; i < m && divides; ++i)
        for (std::size_t j = k + 1; j < n && divides; ++j)
          if (s.at(i, j) % s.at(k, k) != 0) {
            s.add_row(k, i, Int(1));
            u.add_row(k, i, Int(1));
            divides = false;
          }
      if (divides) break;
    }
    if (s.at(k, k) < 0) {
      s.negate_row(k);
      u.negate_row(k);
    }
  }
done:

  SmithDecomposition result;
  result.invariant_factors.resize(steps, Int(0));
  for (std::size_t k = 0; k < steps; ++k) result.invariant_factors[k] = s.at(k, k);
  result.u = u.to_mat();
  result.s = s.to_mat();
  result.v = v.to_mat();
  return result;
}

IMat integer_kernel(const IMat& a) {
  SmithDecomposition snf = smith_normal_form(a);
  std::vector<Eigen::Index> zero_slots;
  for (std::size_t k = 0; k < snf.invariant_factors.size(); ++k)
    if (snf.invariant_factors[k] == 0) zero_slots.push_back(static_cast<Eigen::Index>(k));
  // columns of v past the square step count are also in the kernel
  for (Eigen::Index j = static_cast<Eigen::Index>(snf.invariant_factors.size()); j < snf.v.cols();
       ++j)
    zero_slots.push_back(j);
  IMat k(a.cols(), static_cast<Eigen::Index>(zero_slots.size()));
  for (std::size_t c = 0; c < zero_slots.size(); ++c)
    for (Eigen::Index i = 0; i < a.cols(); ++i)
      k(i, static_cast<Eigen::Index>(c)) =
          snf.v(i, zero_slots[c]).to_integer().convert_to<std::int64_t>();
  return k;
}

}  // namespace flatspec
