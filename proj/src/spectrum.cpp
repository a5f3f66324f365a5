#include "flatspec/spectrum.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "flatspec/enumerate.hpp"
#include "flatspec/krawtchouk.hpp"
#include "flatspec/linalg.hpp"
#include "flatspec/poly.hpp"
#include "flatspec/smith.hpp"

namespace flatspec {

CyclotomicAccumulator::CyclotomicAccumulator(int modulus) : q_(modulus) {
  if (modulus < 1) throw std::domain_error("CyclotomicAccumulator: modulus must be >= 1");
  counts_.assign(static_cast<std::size_t>(modulus), Int(0));
}

void CyclotomicAccumulator::add(const Rational& exponent_mod1, const Int& weight) {
  Rational scaled = exponent_mod1.frac_mod1() * Rational(q_);
  if (!scaled.is_integer())
    throw IrrationalCharacterSum("character exponent has a denominator outside the modulus");
  auto r = scaled.to_integer().convert_to<std::size_t>();
  counts_[r] += weight;
}

Rational CyclotomicAccumulator::rational_value() const {
  // value = P(zeta_q) with P = sum counts_r x^r; rational iff P mod Phi_q is
  // constant (counts are integers, so the value is then an integer).
  std::vector<Rational> coeffs(counts_.size());
  for (std::size_t r = 0; r < counts_.size(); ++r) coeffs[r] = Rational(counts_[r]);
  Poly p{std::move(coeffs)};
  Poly rem = Poly::divmod(p, cyclotomic(q_)).second;
  if (rem.degree() > 0) {
    std::ostringstream os;
    os << "character sum does not reduce to a rational (modulus " << q_ << ")";
    throw IrrationalCharacterSum(os.str());
  }
  return rem.coeff(0);
}

namespace {

// Per-coset data for sums over the B-fixed part of the dual lattice, in dual
// coordinates: v = Q^{-1} w with w integer, ||v||^2 = w^T Q^{-1} w, and
// v.b = w.b.
struct DualFixedData {
  IMat basis;   // integer basis W of {w : B^T w = w}, n x d
  Mat gram;     // W^T Q^{-1} W
  Vec phases;   // W^T b  (dot with the coefficient vector gives v.b)
  int q = 1;    // lcm of phase denominators
};

DualFixedData dual_fixed_data(const BieberbachGroup& group, int coset_index, const Mat& dual_gram) {
  const AffineElement& e = group.coset(coset_index);
  const Eigen::Index n = group.dim();
  DualFixedData d;
  IMat bt = e.point.b.transpose();
  d.basis = integer_kernel(bt - IMat::Identity(n, n));
  Mat w = to_rational(d.basis);
  d.gram = w.transpose() * dual_gram * w;
  d.phases = w.transpose() * e.translation;
  Int q(1);
  for (Eigen::Index i = 0; i < d.phases.size(); ++i)
    q = q / boost::multiprecision::gcd(q, d.phases(i).den()) * d.phases(i).den();
  d.q = q.convert_to<int>();
  return d;
}

Rational reduce_character(const DualFixedData& data,
                          const std::vector<std::pair<IVec, Int>>& hits) {
  if (data.q <= 2) {
    // half-integer translations: plain sign sum (the diagonal-type shortcut)
    Int acc(0);
    for (const auto& [m, w] : hits) {
      Rational dot(0);
      for (Eigen::Index i = 0; i < m.size(); ++i) dot += data.phases(i) * Rational(m(i));
      Rational twice = dot * Rational(2);
      acc += (twice.to_integer() % 2 == 0) ? w : -w;
    }
    return Rational(acc);
  }
  CyclotomicAccumulator acc(data.q);
  for (const auto& [m, w] : hits) {
    Rational dot(0);
    for (Eigen::Index i = 0; i < m.size(); ++i) dot += data.phases(i) * Rational(m(i));
    acc.add(dot, w);
  }
  return acc.rational_value();
}

std::vector<std::vector<Int>> coset_traces(const BieberbachGroup& group) {
  std::vector<std::vector<Int>> traces;
  traces.reserve(static_cast<std::size_t>(group.holonomy_order()));
  for (const auto& e : group.cosets()) traces.push_back(trace_p_all(e.point.b));
  return traces;
}

Int assemble_multiplicity(const BieberbachGroup& group, const std::vector<std::vector<Int>>& traces,
                          int p, const std::vector<Rational>& e_values) {
  Rational sum(0);
  for (int i = 0; i < group.holonomy_order(); ++i)
    sum += Rational(traces[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)]) *
           e_values[static_cast<std::size_t>(i)];
  Rational d = sum / Rational(group.holonomy_order());
  if (!d.is_integer() || d.sign() < 0)
    throw Error("internal: eigenvalue multiplicity came out " + d.str() +
                ", expected a nonnegative integer");
  return d.to_integer();
}

}  // namespace

Rational e_term(const BieberbachGroup& group, int coset_index, const Rational& mu) {
  if (mu.sign() < 0) throw std::domain_error("e_term: mu must be >= 0");
  if (mu.is_zero()) return Rational(1);
  Mat dual_gram = inverse(group.gram());
  DualFixedData data = dual_fixed_data(group, coset_index, dual_gram);
  if (data.basis.cols() == 0) return Rational(0);
  std::vector<std::pair<IVec, Int>> hits;
  enumerate_affine_ball(data.gram, Mat::Identity(data.gram.rows(), data.gram.cols()),
                        Vec::Zero(data.gram.rows()), mu, [&](const IVec& m, const Rational& val) {
                          if (val == mu) hits.emplace_back(m, Int(1));
                        });
  return reduce_character(data, hits);
}

std::map<Rational, std::vector<Rational>> e_table(const BieberbachGroup& group,
                                                  const Rational& mu_max) {
  const auto order = static_cast<std::size_t>(group.holonomy_order());
  Mat dual_gram = inverse(group.gram());
  std::map<Rational, std::vector<Rational>> table;
  for (int i = 0; i < group.holonomy_order(); ++i) {
    DualFixedData data = dual_fixed_data(group, i, dual_gram);
    if (data.basis.cols() == 0) continue;
    std::map<Rational, std::vector<std::pair<IVec, Int>>> by_norm;
    enumerate_affine_ball(data.gram, Mat::Identity(data.gram.rows(), data.gram.cols()),
                          Vec::Zero(data.gram.rows()), mu_max,
                          [&](const IVec& m, const Rational& val) {
                            by_norm[val].emplace_back(m, Int(1));
                          });
    for (auto& [mu, hits] : by_norm) {
      auto it = table.find(mu);
      if (it == table.end())
        it = table.emplace(mu, std::vector<Rational>(order, Rational(0))).first;
      it->second[static_cast<std::size_t>(i)] = reduce_character(data, hits);
    }
  }
  return table;
}

Int multiplicity(const BieberbachGroup& group, int p, const Rational& mu) {
  if (p < 0 || p > group.dim()) throw std::domain_error("multiplicity: p out of range");
  if (mu.sign() < 0) throw std::domain_error("multiplicity: mu must be >= 0");
  auto traces = coset_traces(group);
  std::vector<Rational> e_values;
  e_values.reserve(static_cast<std::size_t>(group.holonomy_order()));
  for (int i = 0; i < group.holonomy_order(); ++i) e_values.push_back(e_term(group, i, mu));
  return assemble_multiplicity(group, traces, p, e_values);
}

std::vector<Int> betti_numbers(const BieberbachGroup& group) {
  const int n = group.dim();
  auto traces = coset_traces(group);
  std::vector<Int> betti(static_cast<std::size_t>(n) + 1);
  std::vector<Rational> ones(static_cast<std::size_t>(group.holonomy_order()), Rational(1));
  for (int p = 0; p <= n; ++p)
    betti[static_cast<std::size_t>(p)] = assemble_multiplicity(group, traces, p, ones);
  if (betti[0] != 1) throw Error("internal: b_0 != 1");
  Int alt(0);
  for (int p = 0; p <= n; ++p)
    alt += (p % 2 == 0) ? betti[static_cast<std::size_t>(p)] : -betti[static_cast<std::size_t>(p)];
  if (alt != 0) throw Error("internal: Euler characteristic is nonzero");
  return betti;
}

SpectrumTable spectrum_table(const BieberbachGroup& group, int p, const Rational& mu_max) {
  if (p < 0 || p > group.dim()) throw std::domain_error("spectrum_table: p out of range");
  auto traces = coset_traces(group);
  SpectrumTable table;
  table.p = p;
  for (const auto& [mu, e_values] : e_table(group, mu_max))
    table.entries[mu] = assemble_multiplicity(group, traces, p, e_values);
  return table;
}

SunadaTable sunada_numbers(const BieberbachGroup& group) {
  if (!is_diagonal_type(group))
    throw NotDiagonalType("sunada_numbers: group is not of diagonal type");
  SunadaTable table;
  table.n = group.dim();
  table.holonomy_order = group.holonomy_order();
  const Rational half(Int(1), Int(2));
  for (const auto& e : group.cosets()) {
    int d = 0, t = 0;
    for (Eigen::Index i = 0; i < e.point.b.rows(); ++i) {
      if (e.point.b(i, i) == 1) {
        ++d;
        if (e.translation(i) == half) ++t;
      }
    }
    table.counts[{d, t}] += 1;
  }
  Int total(0);
  for (const auto& [key, c] : table.counts) total += c;
  if (total != group.holonomy_order()) throw Error("internal: Sunada counts do not sum to |F|");
  return table;
}

SpectrumComparison compare_p_spectra(const BieberbachGroup& a, const BieberbachGroup& b, int p,
                                     const Rational& mu_max) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("compare_p_spectra: dimensions differ");
  SpectrumTable ta = spectrum_table(a, p, mu_max);
  SpectrumTable tb = spectrum_table(b, p, mu_max);
  std::set<Rational> mus;
  for (const auto& [mu, d] : ta.entries) mus.insert(mu);
  for (const auto& [mu, d] : tb.entries) mus.insert(mu);
  for (const Rational& mu : mus) {
    auto ia = ta.entries.find(mu);
    auto ib = tb.entries.find(mu);
    Int da = ia == ta.entries.end() ? Int(0) : ia->second;
    Int db = ib == tb.entries.end() ? Int(0) : ib->second;
    if (da != db) return SpectrumComparison{false, mu, da, db};
  }
  return SpectrumComparison{true, Rational(0), Int(0), Int(0)};
}

DiagonalCriterionReport diagonal_isospectrality_criterion(const BieberbachGroup& a,
                                                          const BieberbachGroup& b, int p) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("diagonal_isospectrality_criterion: dimensions differ");
  SunadaTable ca = sunada_numbers(a);
  SunadaTable cb = sunada_numbers(b);
  const int n = a.dim();
  DiagonalCriterionReport report;
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, v] : ca.counts) keys.insert(k);
  for (const auto& [k, v] : cb.counts) keys.insert(k);
  for (const auto& [d, t] : keys) {
    Rational k(krawtchouk(n, p, n - d));
    // |F|-normalized so groups with different holonomy orders compare honestly
    Rational lhs = k * Rational(ca.at(d, t)) / Rational(ca.holonomy_order);
    Rational rhs = k * Rational(cb.at(d, t)) / Rational(cb.holonomy_order);
    if (lhs != rhs) {
      report.isospectral = false;
      report.violations.push_back({d, t, lhs, rhs});
    }
  }
  return report;
}

bool sunada_isospectral(const BieberbachGroup& a, const BieberbachGroup& b) {
  return sunada_numbers(a) == sunada_numbers(b);
}

std::optional<std::vector<std::pair<int, int>>> bijection_certificate(
    const BieberbachGroup& a, const BieberbachGroup& b, int p,
    const std::vector<Rational>& mu_list) {
  if (!is_diagonal_type(a) || !is_diagonal_type(b))
    throw NotDiagonalType("bijection_certificate: both groups must be of diagonal type");
  if (a.holonomy_order() != b.holonomy_order()) return std::nullopt;

  auto signatures = [&](const BieberbachGroup& g) {
    auto traces = coset_traces(g);
    std::vector<std::vector<Rational>> sig(static_cast<std::size_t>(g.holonomy_order()));
    for (int i = 0; i < g.holonomy_order(); ++i) {
      for (const Rational& mu : mu_list)
        sig[static_cast<std::size_t>(i)].push_back(
            Rational(traces[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)]) *
            e_term(g, i, mu));
    }
    return sig;
  };
  auto sa = signatures(a);
  auto sb = signatures(b);

  std::vector<int> ia(sa.size()), ib(sb.size());
  for (std::size_t i = 0; i < sa.size(); ++i) ia[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < sb.size(); ++i) ib[i] = static_cast<int>(i);
  std::sort(ia.begin(), ia.end(), [&sa](int x, int y) {
    return sa[static_cast<std::size_t>(x)] < sa[static_cast<std::size_t>(y)];
  });
  std::sort(ib.begin(), ib.end(), [&sb](int x, int y) {
    return sb[static_cast<std::size_t>(x)] < sb[static_cast<std::size_t>(y)];
  });
  for (std::size_t k = 0; k < ia.size(); ++k)
    if (sa[static_cast<std::size_t>(ia[k])] != sb[static_cast<std::size_t>(ib[k])])
      return std::nullopt;
  std::vector<std::pair<int, int>> pairing(ia.size());
  for (std::size_t k = 0; k < ia.size(); ++k) pairing[k] = {ia[k], ib[k]};
  std::sort(pairing.begin(), pairing.end());
  return pairing;
}

}  // namespace flatspec
