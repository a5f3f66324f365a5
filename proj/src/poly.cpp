#include "flatspec/poly.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace flatspec {

Poly Poly::monomial(int k, Rational coeff) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
  c.back() = std::move(coeff);
  return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("Poly::divmod: zero divisor");
  std::vector<Rational> rem = num.c_;
  int dr = static_cast<int>(rem.size()) - 1;
  const int dd = den.degree();
  if (dr < dd) return {Poly(), num};
  std::vector<Rational> quo(static_cast<std::size_t>(dr - dd) + 1, Rational(0));
  while (dr >= dd) {
    if (!rem[static_cast<std::size_t>(dr)].is_zero()) {
      Rational f = rem[static_cast<std::size_t>(dr)] / den.leading();
      quo[static_cast<std::size_t>(dr - dd)] = f;
      for (int i = 0; i <= dd; ++i)
        rem[static_cast<std::size_t>(dr - dd + i)] -= f * den.coeff(i);
    }
    --dr;
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::div_exact(const Poly& den) const {
  auto [q, r] = divmod(*this, den);
  if (!r.is_zero()) throw std::domain_error("Poly::div_exact: nonzero remainder");
  return q;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
  }
  return false;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational a = coeff(k);
    if (a.is_zero()) continue;
    if (first) {
      if (a.sign() < 0) os << "-";
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    Rational m = abs(a);
    bool need_coeff = (m != Rational(1)) || k == 0;
    if (need_coeff) os << m.str();
    if (k > 0) {
      if (need_coeff) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

Poly char_poly(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: matrix not square");
  const Eigen::Index n = a.rows();
  // Faddeev-LeVerrier: exact over Q, coefficients of det(t*Id - a).
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  c[static_cast<std::size_t>(n)] = Rational(1);
  Mat m = Mat::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = (a * m).eval();
    Rational ck = c[static_cast<std::size_t>(n - k + 1)];
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) += ck;
    Rational tr(0);
    Mat am = a * m;
    for (Eigen::Index i = 0; i < n; ++i) tr += am(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / Rational(Int(k));
  }
  return Poly(std::move(c));
}

Poly cyclotomic(int q) {
  if (q < 1) throw std::domain_error("cyclotomic: q must be >= 1");
  static std::map<int, Poly> cache;
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  // x^q - 1 divided by the cyclotomics of the proper divisors
  std::vector<Rational> xq(static_cast<std::size_t>(q) + 1, Rational(0));
  xq[0] = Rational(-1);
  xq[static_cast<std::size_t>(q)] = Rational(1);
  Poly phi(std::move(xq));
  for (int d = 1; d < q; ++d) {
    if (q % d == 0) phi = phi.div_exact(cyclotomic(d));
  }
  cache[q] = phi;
  return phi;
}

}  // namespace flatspec
