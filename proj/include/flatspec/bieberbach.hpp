#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatspec/errors.hpp"
#include "flatspec/types.hpp"

namespace flatspec {

/// Integer matrix acting on the lattice Z^n and preserving the Gram form:
/// B^T Q B = Q, det B = +-1. When Q is the identity this forces a signed
/// permutation matrix.
struct PointIsometry {
  IMat b;

  int dim() const { return static_cast<int>(b.rows()); }
  bool is_identity() const { return b == IMat::Identity(b.rows(), b.cols()); }
  IMat inverse() const;
  /// dim ker(B - Id)
  int n_fixed() const;
  int det_sign() const;
  bool is_diagonal_pm1() const;
  bool preserves(const Mat& gram) const;

  friend bool operator==(const PointIsometry& a, const PointIsometry& b) { return a.b == b.b; }
};

/// gamma = B L_b in lattice coordinates; the translation is kept reduced
/// mod the lattice into [0,1)^n so coset representatives compare by value.
struct AffineElement {
  PointIsometry point;
  Vec translation;

  static AffineElement identity(int n);
  static AffineElement make(IMat b, Vec t);  // reduces t mod Z^n

  int dim() const { return point.dim(); }
  /// (B L_b)(C L_c) = BC L_{C^{-1} b + c}, translation reduced mod Z^n.
  AffineElement operator*(const AffineElement& rhs) const;
  AffineElement inverse() const;
};

Vec reduce_mod_lattice(Vec v);  // componentwise into [0,1)

struct FixedSpaceData {
  int n_fixed = 0;
  /// Integer basis of Lambda^B = Z^n intersected with ker(B - Id); n x n_fixed.
  IMat fixed_lattice_basis;
  /// Canonical basis of p_B(Lambda); n x n_fixed rational columns.
  Mat projected_lattice_basis;
  /// Orthogonal projector onto ker(B - Id) w.r.t. the Gram form.
  Mat projector;
};

class BieberbachGroup {
 public:
  BieberbachGroup() = default;

  int dim() const { return n_; }
  const Mat& gram() const { return gram_; }
  const std::vector<AffineElement>& cosets() const { return cosets_; }
  int holonomy_order() const { return static_cast<int>(cosets_.size()); }
  const AffineElement& coset(int i) const { return cosets_[static_cast<std::size_t>(i)]; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Index of the coset with the given point part; -1 if absent.
  int coset_index(const IMat& point) const;

  /// Fixed-space data of coset i, computed once and cached.
  const FixedSpaceData& fixed_space_of(int i) const;

  friend BieberbachGroup close_group(const std::vector<AffineElement>& generators, Mat gram,
                                     int closure_bound);

 private:
  int n_ = 0;
  Mat gram_;
  std::vector<AffineElement> cosets_;  // identity first
  std::string name_;
  mutable std::vector<std::optional<FixedSpaceData>> fixed_cache_;
};

/// Closes the generated holonomy coset list under multiplication mod the
/// lattice. Throws NonOrthogonalGenerator, ClosureBoundExceeded,
/// CocycleInconsistent.
BieberbachGroup close_group(const std::vector<AffineElement>& generators, Mat gram,
                            int closure_bound = 1024);

struct TorsionReport {
  bool torsion_free = true;
  int offending_coset = -1;  // coset whose projected translation lies in p_B(Lambda)
};

/// Passes iff for every coset with B != Id the projected translation b_+ is
/// not in p_B(Lambda) (no element of the coset fixes a point).
TorsionReport torsion_free_check(const BieberbachGroup& group);

/// Fixed-space machinery of a single point isometry over the given Gram form.
FixedSpaceData fixed_space(const PointIsometry& b, const Mat& gram);

/// det B = 1 for every coset; equivalently n_B == n (mod 2) throughout.
bool is_orientable(const BieberbachGroup& group);

/// Identity Gram matrix and every point part diagonal with entries +-1.
bool is_diagonal_type(const BieberbachGroup& group);

/// Conjugate beta gamma beta^{-1} = C B C^{-1} L_{C((B^{-1}-Id)c + b)} for
/// beta = C L_c; the translation of gamma is taken as given (not reduced).
AffineElement conjugate(const AffineElement& beta, const IMat& point_b, const Vec& translation_b);

}  // namespace flatspec
