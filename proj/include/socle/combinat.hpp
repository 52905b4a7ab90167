#pragma once

#include <vector>

#include "socle/monomial.hpp"

namespace socle {

/// Binomial coefficient; zero outside the Pascal triangle.
inline long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// All monomials of total degree d in n variables, in a fixed deterministic
/// order (lexicographic by exponent vector, descending).
std::vector<Monomial> monomials_of_degree(int n, int d);

}  // namespace socle
