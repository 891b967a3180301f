#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"
#include "primality.hpp"

namespace sdioph {

// The fixed set S of primes defining smoothness. Members are kept sorted
// ascending, pairwise distinct, and each one is validated by the
// deterministic Miller-Rabin check; candidates above 2^64 are rejected
// rather than tested probabilistically.
class prime_set {
 public:
  static prime_set of(std::vector<std::uint64_t> primes) {
    if (primes.empty()) fail(errc::empty_prime_set, "prime set is empty");
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
      if (primes[i] == primes[i + 1])
        fail(errc::duplicate_prime,
             "duplicate prime " + std::to_string(primes[i]));
    }
    for (std::uint64_t p : primes) {
      if (!is_prime_u64(p))
        fail(errc::not_prime, std::to_string(p) + " is not prime");
    }
    return prime_set(std::move(primes));
  }

  static prime_set of(const std::vector<mpz_class>& primes) {
    std::vector<std::uint64_t> ps;
    ps.reserve(primes.size());
    for (const mpz_class& p : primes) {
      if (p <= 1) fail(errc::not_prime, p.get_str() + " is not prime");
      if (!p.fits_ulong_p())
        fail(errc::unsupported_prime_size,
             "prime " + p.get_str() + " exceeds the supported 64-bit range");
      ps.push_back(static_cast<std::uint64_t>(p.get_ui()));
    }
    return of(std::move(ps));
  }

  std::size_t rank() const { return primes_.size(); }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::uint64_t prime(std::size_t i) const { return primes_[i]; }

  bool contains(std::uint64_t p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
  }

  bool subset_of(const prime_set& other) const {
    return std::includes(other.primes_.begin(), other.primes_.end(),
                         primes_.begin(), primes_.end());
  }

  friend bool operator==(const prime_set&, const prime_set&) = default;

 private:
  explicit prime_set(std::vector<std::uint64_t> primes)
      : primes_(std::move(primes)) {}

  std::vector<std::uint64_t> primes_;
};

}  // namespace sdioph
