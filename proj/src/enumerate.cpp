#include "flatspec/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "flatspec/linalg.hpp"

namespace flatspec {

namespace {

struct LevelData {
  Rational d;                // positive pivot
  std::vector<Rational> u;   // u[j] for j > level (off-diagonal / pivot)
};

// q-decomposition of a positive definite form: x^T G x = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2.
std::vector<LevelData> q_decompose(Mat g) {
  const Eigen::Index r = g.rows();
  std::vector<LevelData> levels(static_cast<std::size_t>(r));
  for (Eigen::Index i = 0; i < r; ++i) {
    Rational d = g(i, i);
    if (d <= Rational(0)) throw std::invalid_argument("enumerate: form is not positive definite");
    auto& lv = levels[static_cast<std::size_t>(i)];
    lv.d = d;
    lv.u.resize(static_cast<std::size_t>(r - i - 1));
    for (Eigen::Index j = i + 1; j < r; ++j) lv.u[static_cast<std::size_t>(j - i - 1)] = g(i, j) / d;
    for (Eigen::Index k = i + 1; k < r; ++k)
      for (Eigen::Index l = k; l < r; ++l) {
        g(k, l) -= d * lv.u[static_cast<std::size_t>(k - i - 1)] * lv.u[static_cast<std::size_t>(l - i - 1)];
        g(l, k) = g(k, l);
      }
  }
  return levels;
}

// Largest integer m with d*(m + s)^2 <= t (t >= 0), seeded from doubles and
// fixed against the exact predicate.
std::int64_t upper_int(const Rational& s, const Rational& d, const Rational& t) {
  auto fits = [&](std::int64_t m) {
    Rational z = s + Rational(m);
    return z * z * d <= t;
  };
  double est = -s.to_double() + std::sqrt(std::max(0.0, (t / d).to_double()));
  auto m = static_cast<std::int64_t>(std::floor(est));
  while (fits(m + 1)) ++m;
  while (!fits(m)) --m;
  return m;
}

std::int64_t lower_int(const Rational& s, const Rational& d, const Rational& t) {
  auto fits = [&](std::int64_t m) {
    Rational z = s + Rational(m);
    return z * z * d <= t;
  };
  double est = -s.to_double() - std::sqrt(std::max(0.0, (t / d).to_double()));
  auto m = static_cast<std::int64_t>(std::ceil(est));
  while (fits(m - 1)) --m;
  while (!fits(m)) ++m;
  return m;
}

struct Enumerator {
  const std::vector<LevelData>* levels;
  const Vec* shift;  // real minimizer w; f(m) = value at the leaves
  Rational value;    // fmin plus the squares spent on the levels entered so far
  IVec m;
  const std::function<void(const IVec&, const Rational&)>* visit;

  void recurse(int level, const Rational& budget, std::vector<Rational>& diffs) {
    if (level < 0) return (*visit)(m, value);
    const auto& lv = (*levels)[static_cast<std::size_t>(level)];
    Rational s = -(*shift)(level);
    for (std::size_t j = 0; j < lv.u.size(); ++j)
      s += lv.u[j] * diffs[static_cast<std::size_t>(level) + 1 + j];
    const std::int64_t lo = lower_int(s, lv.d, budget);
    const std::int64_t hi = upper_int(s, lv.d, budget);
    for (std::int64_t mi = lo; mi <= hi; ++mi) {
      m(level) = mi;
      diffs[static_cast<std::size_t>(level)] = Rational(mi) - (*shift)(level);
      Rational z = s + Rational(mi);
      Rational spent = z * z * lv.d;
      Rational save = value;
      value += spent;
      recurse(level - 1, budget - spent, diffs);
      value = save;
    }
  }
};

}  // namespace

void enumerate_affine_ball(const Mat& gram, const Mat& basis, const Vec& offset,
                           const Rational& bound,
                           const std::function<void(const IVec&, const Rational&)>& visit) {
  const Eigen::Index r = basis.cols();
  Rational c0 = (offset.transpose() * gram * offset)(0, 0);
  if (r == 0) {
    if (c0 <= bound) visit(IVec(0), c0);
    return;
  }
  Mat g = basis.transpose() * gram * basis;
  Vec h = basis.transpose() * gram * offset;
  Vec w = -inverse(g) * h;  // real minimizer of f
  Rational fmin = c0 + (h.transpose() * w)(0, 0);
  if (fmin > bound) return;

  std::vector<LevelData> levels = q_decompose(std::move(g));
  Enumerator e;
  e.levels = &levels;
  e.shift = &w;
  e.value = fmin;
  e.m = IVec::Zero(r);
  e.visit = &visit;
  std::vector<Rational> diffs(static_cast<std::size_t>(r), Rational(0));
  e.recurse(static_cast<int>(r) - 1, bound - fmin, diffs);
}

std::vector<IVec> enumerate_shell(const Mat& gram, const Rational& mu) {
  if (mu < Rational(0)) return {};
  if (!is_positive_definite(gram))
    throw std::invalid_argument("enumerate_shell: gram is not positive definite");
  const Eigen::Index n = gram.rows();
  std::vector<IVec> out;
  enumerate_affine_ball(gram, Mat::Identity(n, n), Vec::Zero(n), mu,
                        [&](const IVec& v, const Rational& val) {
                          if (val == mu) out.push_back(v);
                        });
  std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
  return out;
}

std::vector<BallShell> enumerate_ball(const Mat& gram, const Rational& mu_max) {
  if (!is_positive_definite(gram))
    throw std::invalid_argument("enumerate_ball: gram is not positive definite");
  const Eigen::Index n = gram.rows();
  std::map<Rational, std::vector<IVec>> shells;
  if (mu_max >= Rational(0)) {
    enumerate_affine_ball(gram, Mat::Identity(n, n), Vec::Zero(n), mu_max,
                          [&](const IVec& v, const Rational& val) { shells[val].push_back(v); });
  }
  std::vector<BallShell> out;
  out.reserve(shells.size());
  for (auto& [norm, vecs] : shells) {
    std::sort(vecs.begin(), vecs.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    out.push_back(BallShell{norm, std::move(vecs)});
  }
  return out;
}

}  // namespace flatspec
