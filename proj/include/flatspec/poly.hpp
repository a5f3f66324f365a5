#pragma once

#include <string>
#include <vector>

#include "flatspec/types.hpp"

namespace flatspec {

/// Dense univariate polynomial over the exact rationals, coefficients stored
/// ascending. Normalized: no trailing zero coefficients (zero poly is empty).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(Rational v) { return Poly(std::vector<Rational>{std::move(v)}); }
  /// x^k
  static Poly monomial(int k, Rational coeff = Rational(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
  }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  /// Quotient and remainder; exact over Q (divisor nonzero).
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
  /// Exact division; throws std::domain_error on nonzero remainder.
  Poly div_exact(const Poly& den) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b);  // degree, then lex on coeffs

  /// Expanded form, e.g. "t^4 - 1".
  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Exact monic characteristic polynomial det(t*Id - a).
Poly char_poly(const Mat& a);

/// q-th cyclotomic polynomial (integer coefficients), q >= 1.
Poly cyclotomic(int q);

}  // namespace flatspec
