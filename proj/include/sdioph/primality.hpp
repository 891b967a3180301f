#pragma once

#include <cstdint>
#include <initializer_list>

namespace sdioph {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                             std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

// Deterministic Miller-Rabin; the witness set below decides primality for
// every n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
  constexpr std::uint64_t witnesses[] = {2,  3,  5,  7,  11, 13,
                                         17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (std::uint64_t p : witnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : witnesses) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace sdioph
