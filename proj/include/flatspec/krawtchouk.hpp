#pragma once

#include <map>
#include <vector>

#include "flatspec/poly.hpp"
#include "flatspec/types.hpp"

namespace flatspec {

/// Binary Krawtchouk value K_p^n(x) = sum_t (-1)^t C(x,t) C(n-x,p-t).
/// Requires 0 <= p <= n and 0 <= x <= n.
Int krawtchouk(int n, int p, int x);

/// All integer roots x in [0, n] of x -> K_p^n(x), ascending.
std::vector<int> integral_roots(int n, int p);

/// Trace of the p-th exterior power: the coefficient of t^p in det(Id + t*B).
/// Exact integer for integer B; equals K_p^n(n - n_B) when B is diagonal +-1.
Int trace_p(const IMat& b, int p);

/// All exterior traces at once (index p = 0..n), sharing one char-poly run.
std::vector<Int> trace_p_all(const IMat& b);

Int binomial(int n, int k);

/// Cache of Krawtchouk values for a fixed degree context n. Values are
/// filled on first use; safe for concurrent reads once warmed via warm_up().
class KrawtchoukTable {
 public:
  explicit KrawtchoukTable(int n) : n_(n) {}
  int n() const { return n_; }
  Int value(int p, int x);
  void warm_up();  // fills every (p, x) with 0 <= p, x <= n

 private:
  int n_;
  std::map<std::pair<int, int>, Int> values_;
};

}  // namespace flatspec
