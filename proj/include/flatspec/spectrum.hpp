#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "flatspec/bieberbach.hpp"
#include "flatspec/types.hpp"

namespace flatspec {

/// Character sum over q-th roots of unity, accumulated as counts per residue
/// class r (term e^{-2 pi i r / q}). Evaluation reduces the count polynomial
/// modulo the q-th cyclotomic polynomial; the sum is rational exactly when
/// that reduction is constant, and then it is an integer.
class CyclotomicAccumulator {
 public:
  explicit CyclotomicAccumulator(int modulus);
  int modulus() const { return q_; }
  void add(const Rational& exponent_mod1, const Int& weight = Int(1));
  const std::vector<Int>& counts() const { return counts_; }
  /// Throws IrrationalCharacterSum when the value is not rational.
  Rational rational_value() const;

 private:
  int q_;
  std::vector<Int> counts_;
};

/// e_{mu,gamma} = sum over B-fixed dual vectors v of squared norm mu of
/// e^{-2 pi i v.b}; exact rational (an integer whenever defined).
Rational e_term(const BieberbachGroup& group, int coset_index, const Rational& mu);

/// Multiplicity of the eigenvalue 4 pi^2 mu of the p-form Laplacian.
Int multiplicity(const BieberbachGroup& group, int p, const Rational& mu);

/// b_p = |F|^{-1} sum_B tr_p(B), p = 0..n.
std::vector<Int> betti_numbers(const BieberbachGroup& group);

struct SpectrumTable {
  int p = 0;
  /// mu -> multiplicity for every dual-shell norm mu <= the build cutoff,
  /// zeros included so absent eigenvalues are explicit.
  std::map<Rational, Int> entries;
};

SpectrumTable spectrum_table(const BieberbachGroup& group, int p, const Rational& mu_max);

struct SunadaTable {
  int n = 0;
  Int holonomy_order = 0;
  std::map<std::pair<int, int>, Int> counts;  // (d, t) -> c_{d,t}, only nonzero kept

  Int at(int d, int t) const {
    auto it = counts.find({d, t});
    return it == counts.end() ? Int(0) : it->second;
  }
  friend bool operator==(const SunadaTable& a, const SunadaTable& b) {
    return a.n == b.n && a.counts == b.counts;
  }
};

/// Counts c_{d,t} of holonomy cosets by fixed dimension d and number t of
/// half-integer translation coordinates along fixed axes. Diagonal type only.
SunadaTable sunada_numbers(const BieberbachGroup& group);

struct SpectrumComparison {
  bool equal = true;
  Rational mu;  // first divergence when not equal
  Int left, right;
};

SpectrumComparison compare_p_spectra(const BieberbachGroup& a, const BieberbachGroup& b, int p,
                                     const Rational& mu_max);

struct DiagonalCriterionReport {
  bool isospectral = true;
  struct Violation {
    int d, t;
    Rational lhs, rhs;  // K_p^n(n-d) * c_{d,t} / |F| on each side
  };
  std::vector<Violation> violations;
};

/// Exact p-isospectrality verdict for two diagonal-type groups: the
/// K_p^n(n-d)-weighted Sunada counts (normalized by |F|) must agree for all
/// (d, t). No spectral cutoff is involved.
DiagonalCriterionReport diagonal_isospectrality_criterion(const BieberbachGroup& a,
                                                          const BieberbachGroup& b, int p);

bool sunada_isospectral(const BieberbachGroup& a, const BieberbachGroup& b);

/// Searches for a holonomy bijection with tr_p(B) e_{mu,gamma} matching
/// termwise over the probed mu values. Diagonal type only.
std::optional<std::vector<std::pair<int, int>>> bijection_certificate(
    const BieberbachGroup& a, const BieberbachGroup& b, int p, const std::vector<Rational>& mu_list);

/// Shared support: e_{mu, gamma} for every coset and every realizable
/// mu <= mu_max in one enumeration pass. Row 0 of each value vector is the
/// identity coset, whose e value is the plain dual shell count.
std::map<Rational, std::vector<Rational>> e_table(const BieberbachGroup& group,
                                                  const Rational& mu_max);

}  // namespace flatspec
