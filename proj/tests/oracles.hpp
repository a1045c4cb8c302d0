#pragma once

// Brute-force reference computations shared by the test binaries. They
// work directly in P2 coordinates (d0; a_1..a_m) with x = d0 h - sum a_i e_i
// and use no library code beyond the number types.

#include <gmpxx.h>

#include <cmath>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<long>;

inline long dot_p2(const Vec& x, const Vec& y) {
  long s = x[0] * y[0];
  for (std::size_t i = 1; i < x.size(); ++i) s -= x[i] * y[i];
  return s;
}

/// All x in P2Blowup(m) coordinates with x.x = norm and x.K = kdeg, where
/// K = (-3; -1, ..., -1) in the (d0; a) convention, searching d0 in
/// [-dmax, dmax]. Returned in the library's coefficient order
/// (h, l_0, ..., l_{m-1}) with l coefficients -a_i.
inline std::set<Vec> p2_classes(int m, long norm, long kdeg, long dmax) {
  std::set<Vec> out;
  Vec a(static_cast<std::size_t>(m), 0);
  for (long d0 = -dmax; d0 <= dmax; ++d0) {
    // x.x = d0^2 - sum a_i^2, x.K = -3 d0 + sum a_i
    const long sq_budget = d0 * d0 - norm;
    const long sum_target = kdeg + 3 * d0;
    if (sq_budget < 0) continue;
    std::function<void(int, long, long)> rec = [&](int i, long sq_left, long sum_left) {
      const long r = m - i;
      // Cauchy-Schwarz: (sum of the remaining a)^2 <= r * (remaining squares)
      if (static_cast<double>(sum_left) * static_cast<double>(sum_left) >
          static_cast<double>(r) * static_cast<double>(sq_left) + 0.5)
        return;
      if (i == m) {
        if (sq_left == 0 && sum_left == 0) {
          Vec v{d0};
          for (long x : a) v.push_back(-x);
          out.insert(v);
        }
        return;
      }
      const long bound = static_cast<long>(std::sqrt(static_cast<double>(sq_left))) + 1;
      for (long x = -bound; x <= bound; ++x) {
        if (x * x > sq_left) continue;
        a[static_cast<std::size_t>(i)] = x;
        rec(i + 1, sq_left - x * x, sum_left - x);
      }
      a[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, sq_budget, sum_target);
  }
  return out;
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
