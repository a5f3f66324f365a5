#include "flatspec/krawtchouk.hpp"

#include <stdexcept>

namespace flatspec {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return Int(0);
  Int r(1);
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

Int krawtchouk(int n, int p, int x) {
  if (p < 0 || p > n || x < 0 || x > n)
    throw std::domain_error("krawtchouk: need 0 <= p <= n and 0 <= x <= n");
  Int acc(0);
  for (int t = 0; t <= p; ++t) {
    Int term = binomial(x, t) * binomial(n - x, p - t);
    acc += (t % 2 == 0) ? term : -term;
  }
  return acc;
}

std::vector<int> integral_roots(int n, int p) {
  if (p < 0 || p > n) throw std::domain_error("integral_roots: need 0 <= p <= n");
  std::vector<int> roots;
  for (int x = 0; x <= n; ++x)
    if (krawtchouk(n, p, x) == 0) roots.push_back(x);
  return roots;
}

std::vector<Int> trace_p_all(const IMat& b) {
  // det(t*Id - B) = sum_k (-1)^k e_k t^{n-k}, and the p-exterior trace is e_p.
  Poly cp = char_poly(to_rational(b));
  const int n = static_cast<int>(b.rows());
  std::vector<Int> traces(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p <= n; ++p) {
    Rational c = cp.coeff(n - p);
    traces[static_cast<std::size_t>(p)] = (p % 2 == 0) ? c.to_integer() : (-c).to_integer();
  }
  return traces;
}

Int trace_p(const IMat& b, int p) {
  const int n = static_cast<int>(b.rows());
  if (p < 0 || p > n) throw std::domain_error("trace_p: need 0 <= p <= n");
  return trace_p_all(b)[static_cast<std::size_t>(p)];
}

Int KrawtchoukTable::value(int p, int x) {
  auto key = std::make_pair(p, x);
  auto it = values_.find(key);
  if (it != values_.end()) return it->second;
  Int v = krawtchouk(n_, p, x);
  values_.emplace(key, v);
  return v;
}

void KrawtchoukTable::warm_up() {
  for (int p = 0; p <= n_; ++p)
    for (int x = 0; x <= n_; ++x) value(p, x);
}

}  // namespace flatspec
