#include "flatspec/bieberbach.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <vector>

#include "flatspec/linalg.hpp"
#include "flatspec/smith.hpp"

namespace flatspec {

namespace {

std::vector<std::int64_t> matrix_key(const IMat& m) {
  std::vector<std::int64_t> k;
  k.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) k.push_back(m(i, j));
  return k;
}

}  // namespace

IMat PointIsometry::inverse() const {
  return to_integral(flatspec::inverse(to_rational(b)));
}

int PointIsometry::n_fixed() const {
  Mat a = to_rational(b) - Mat::Identity(b.rows(), b.cols());
  return static_cast<int>(b.rows()) - rank(a);
}

int PointIsometry::det_sign() const {
  Rational d = det(to_rational(b));
  return d.sign();
}

bool PointIsometry::is_diagonal_pm1() const {
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (i == j) {
        if (b(i, j) != 1 && b(i, j) != -1) return false;
      } else if (b(i, j) != 0) {
        return false;
      }
    }
  return true;
}

bool PointIsometry::preserves(const Mat& gram) const {
  Mat bm = to_rational(b);
  Mat lhs = bm.transpose() * gram * bm;
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = 0; j < gram.cols(); ++j)
      if (lhs(i, j) != gram(i, j)) return false;
  return true;
}

Vec reduce_mod_lattice(Vec v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = v(i).frac_mod1();
  return v;
}

AffineElement AffineElement::identity(int n) {
  return AffineElement{PointIsometry{IMat::Identity(n, n)}, Vec::Zero(n)};
}

AffineElement AffineElement::make(IMat b, Vec t) {
  return AffineElement{PointIsometry{std::move(b)}, reduce_mod_lattice(std::move(t))};
}

AffineElement AffineElement::operator*(const AffineElement& rhs) const {
  IMat bc = point.b * rhs.point.b;
  Vec t = to_rational(rhs.point.inverse()) * translation + rhs.translation;
  return AffineElement::make(std::move(bc), std::move(t));
}

AffineElement AffineElement::inverse() const {
  IMat binv = point.inverse();
  Vec t = -(to_rational(point.b) * translation);
  return AffineElement::make(std::move(binv), std::move(t));
}

AffineElement conjugate(const AffineElement& beta, const IMat& point_b, const Vec& translation_b) {
  const IMat& c = beta.point.b;
  IMat cinv = beta.point.inverse();
  IMat new_point = c * point_b * cinv;
  IMat binv = PointIsometry{point_b}.inverse();
  Vec inner = to_rational(binv - IMat::Identity(point_b.rows(), point_b.cols())) * beta.translation +
              translation_b;
  Vec new_translation = to_rational(c) * inner;
  return AffineElement{PointIsometry{std::move(new_point)}, std::move(new_translation)};
}

int BieberbachGroup::coset_index(const IMat& point) const {
  for (std::size_t i = 0; i < cosets_.size(); ++i)
    if (cosets_[i].point.b == point) return static_cast<int>(i);
  return -1;
}

const FixedSpaceData& BieberbachGroup::fixed_space_of(int i) const {
  auto& slot = fixed_cache_[static_cast<std::size_t>(i)];
  if (!slot) slot = fixed_space(cosets_[static_cast<std::size_t>(i)].point, gram_);
  return *slot;
}

BieberbachGroup close_group(const std::vector<AffineElement>& generators, Mat gram,
                            int closure_bound) {
  int n = static_cast<int>(gram.rows());
  if (!is_symmetric(gram) || !is_positive_definite(gram))
    throw NonOrthogonalGenerator("gram matrix must be symmetric positive definite");
  for (const auto& g : generators) {
    if (g.dim() != n) throw NonOrthogonalGenerator("generator dimension mismatch");
    Rational d = det(to_rational(g.point.b));
    if (d != Rational(1) && d != Rational(-1))
      throw NonOrthogonalGenerator("generator point part is not unimodular");
    if (!g.point.preserves(gram))
      throw NonOrthogonalGenerator("generator point part does not preserve the gram form");
  }

  BieberbachGroup group;
  group.n_ = n;
  group.gram_ = std::move(gram);
  group.cosets_.push_back(AffineElement::identity(n));

  std::map<std::vector<std::int64_t>, int> index_of;
  index_of[matrix_key(group.cosets_[0].point.b)] = 0;

  // canonicalize generator translations mod the lattice up front
  std::vector<AffineElement> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators)
    gens.push_back(AffineElement::make(g.point.b, g.translation));

  std::deque<int> frontier;
  auto insert = [&](const AffineElement& e) {
    auto key = matrix_key(e.point.b);
    auto it = index_of.find(key);
    if (it == index_of.end()) {
      if (static_cast<int>(group.cosets_.size()) >= closure_bound) {
        std::ostringstream os;
        os << "holonomy closure exceeded the bound of " << closure_bound << " cosets";
        throw ClosureBoundExceeded(os.str());
      }
      int idx = static_cast<int>(group.cosets_.size());
      group.cosets_.push_back(e);
      index_of.emplace(std::move(key), idx);
      frontier.push_back(idx);
      return;
    }
    // same point part: translations must agree mod the lattice
    const AffineElement& have = group.cosets_[static_cast<std::size_t>(it->second)];
    for (Eigen::Index i = 0; i < e.translation.size(); ++i) {
      if (e.translation(i) != have.translation(i)) {
        throw CocycleInconsistent(
            "two products share a point part but their translations differ by a "
            "non-lattice vector");
      }
    }
  };

  for (const auto& g : gens) insert(g);
  while (!frontier.empty()) {
    int i = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      insert(group.cosets_[static_cast<std::size_t>(i)] * g);
      insert(g * group.cosets_[static_cast<std::size_t>(i)]);
    }
  }
  group.fixed_cache_.assign(group.cosets_.size(), std::nullopt);
  return group;
}

FixedSpaceData fixed_space(const PointIsometry& b, const Mat& gram) {
  const Eigen::Index n = b.b.rows();
  FixedSpaceData data;
  IMat a = b.b - IMat::Identity(n, n);
  data.fixed_lattice_basis = integer_kernel(a);
  data.n_fixed = static_cast<int>(data.fixed_lattice_basis.cols());
  if (data.n_fixed == 0) {
    data.projector = Mat::Zero(n, n);
    data.projected_lattice_basis = Mat(n, 0);
    return data;
  }
  Mat k = to_rational(data.fixed_lattice_basis);
  // orthogonal projector onto ker(B - Id) w.r.t. the gram inner product:
  // p = K (K^T Q K)^{-1} K^T Q
  Mat ktqk = k.transpose() * gram * k;
  data.projector = k * inverse(ktqk) * k.transpose() * gram;
  data.projected_lattice_basis = lattice_basis(data.projector);
  return data;
}

TorsionReport torsion_free_check(const BieberbachGroup& group) {
  TorsionReport report;
  for (int i = 1; i < group.holonomy_order(); ++i) {
    const AffineElement& e = group.coset(i);
    if (e.point.is_identity()) continue;
    const FixedSpaceData& fs = group.fixed_space_of(i);
    Vec b_plus = fs.projector * e.translation;
    if (lattice_contains(fs.projected_lattice_basis, b_plus)) {
      report.torsion_free = false;
      report.offending_coset = i;
      return report;
    }
  }
  return report;
}

bool is_orientable(const BieberbachGroup& group) {
  for (const auto& e : group.cosets())
    if (e.point.det_sign() != 1) return false;
  return true;
}

bool is_diagonal_type(const BieberbachGroup& group) {
  if (!is_identity(group.gram())) return false;
  for (const auto& e : group.cosets())
    if (!e.point.is_diagonal_pm1()) return false;
  return true;
}

}  // namespace flatspec
