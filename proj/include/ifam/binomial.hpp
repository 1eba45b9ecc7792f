#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ifam {

using Integer = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; 0 when k < 0 or k > n. Negative n is rejected.
inline Integer binom(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("binom: negative n=" + std::to_string(n));
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long long t = 1; t <= k; ++t) {
    r *= n - k + t;
    r /= t;  // exact: r == C(n-k+t, t)
  }
  return r;
}

}  // namespace ifam
