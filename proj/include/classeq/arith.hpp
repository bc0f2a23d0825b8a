#pragma once

#include <cstdint>

namespace classeq {

/// Trial-division primality test; fine for the desk-scale arguments used here.
constexpr bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Largest power of p dividing n (n >= 1, p >= 2).
constexpr std::int64_t p_part(std::int64_t n, std::int64_t p) {
  std::int64_t pp = 1;
  while (n % p == 0) {
    n /= p;
    pp *= p;
  }
  return pp;
}

/// True iff n = p^a for some a >= 0.
constexpr bool is_power_of(std::int64_t n, std::int64_t p) {
  if (n < 1 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

/// Smallest g >= 0 with 2^g >= n (n >= 1).
constexpr int ceil_log2(std::int64_t n) {
  int g = 0;
  for (std::int64_t v = 1; v < n; v *= 2) ++g;
  return g;
}

constexpr std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace classeq
