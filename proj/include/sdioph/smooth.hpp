#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "prime_set.hpp"

namespace sdioph {

// Exponents over a prime set, in prime-ascending order. Non-negative when
// describing a smooth positive integer, signed when describing an element
// of the unit group generated by S.
using exponent_vec = std::vector<std::int64_t>;

// n = cofactor * prod p_i^exponents[i] with the cofactor coprime to S.
struct factorization {
  exponent_vec exponents;
  mpz_class cofactor;
};

inline factorization factor_over(const mpz_class& n, const prime_set& s) {
  if (n <= 0) fail(errc::non_positive, "factor_over requires n >= 1");
  factorization f;
  f.exponents.assign(s.rank(), 0);
  f.cofactor = n;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    const std::uint64_t p = s.prime(i);
    while (mpz_divisible_ui_p(f.cofactor.get_mpz_t(), p)) {
      mpz_divexact_ui(f.cofactor.get_mpz_t(), f.cofactor.get_mpz_t(), p);
      ++f.exponents[i];
    }
  }
  return f;
}

// True iff every prime divisor of n lies in S; 1 is smooth (empty support).
inline bool is_smooth(const mpz_class& n, const prime_set& s) {
  if (n <= 0) fail(errc::non_positive, "is_smooth requires n >= 1");
  mpz_class m = n;
  for (std::size_t i = 0; i < s.rank() && m != 1; ++i) {
    const std::uint64_t p = s.prime(i);
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  return m == 1;
}

inline bool is_smooth_u64(std::uint64_t n, const prime_set& s) {
  if (n == 0) fail(errc::non_positive, "is_smooth requires n >= 1");
  for (std::uint64_t p : s.primes()) {
    while (n % p == 0) n /= p;
    if (n == 1) return true;
  }
  return n == 1;
}

// Largest divisor of n coprime to every prime in S.
inline mpz_class s_free_part(const mpz_class& n, const prime_set& s) {
  return factor_over(n, s).cofactor;
}

// All S-smooth integers in [1, limit], strictly ascending, starting at 1.
// Ordered merge: pop the least value from a min-heap and push its products
// with primes of index >= the last index used, so every smooth number is
// generated exactly once (unique factorization, non-decreasing prime path).
inline std::vector<mpz_class> enumerate_smooth(const prime_set& s,
                                               const mpz_class& limit) {
  if (limit <= 0) fail(errc::non_positive, "enumerate_smooth requires limit >= 1");
  struct node {
    mpz_class value;
    std::size_t first;  // smallest prime index usable for children
  };
  auto later = [](const node& a, const node& b) { return a.value > b.value; };
  std::priority_queue<node, std::vector<node>, decltype(later)> heap(later);
  heap.push(node{mpz_class(1), 0});
  std::vector<mpz_class> out;
  while (!heap.empty()) {
    node cur = heap.top();
    heap.pop();
    for (std::size_t i = cur.first; i < s.rank(); ++i) {
      mpz_class next = cur.value * s.prime(i);
      if (next <= limit) heap.push(node{std::move(next), i});
    }
    out.push_back(std::move(cur.value));
  }
  return out;
}

// sign * prod p_i^exp[i]: a nonzero rational supported on S. The exponent
// vector determines the absolute value uniquely, so (sign, exp) is a
// canonical form; the defaulted ordering is the canonical solution order.
struct sunit_value {
  int sign = 1;  // +1 or -1
  exponent_vec exp;

  mpq_class value(const prime_set& s) const {
    mpz_class num = 1, den = 1;
    for (std::size_t i = 0; i < exp.size(); ++i) {
      mpz_class p = mpz_class(s.prime(i));
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(),
                 static_cast<unsigned long>(exp[i] < 0 ? -exp[i] : exp[i]));
      if (exp[i] >= 0)
        num *= pw;
      else
        den *= pw;
    }
    if (sign < 0) num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  friend auto operator<=>(const sunit_value&, const sunit_value&) = default;
};

// Exact conversion of a rational into (sign, exponent vector) form;
// empty when q is zero or has a prime factor outside S.
inline std::optional<sunit_value> to_sunit(const mpq_class& q,
                                           const prime_set& s) {
  if (q == 0) return std::nullopt;
  mpq_class canon = q;
  canon.canonicalize();
  mpz_class num = canon.get_num();
  mpz_class den = canon.get_den();
  sunit_value v;
  if (num < 0) {
    v.sign = -1;
    num = -num;
  }
  factorization fn = factor_over(num, s);
  if (fn.cofactor != 1) return std::nullopt;
  factorization fd = factor_over(den, s);
  if (fd.cofactor != 1) return std::nullopt;
  v.exp.resize(s.rank());
  for (std::size_t i = 0; i < s.rank(); ++i)
    v.exp[i] = fn.exponents[i] - fd.exponents[i];
  return v;
}

}  // namespace sdioph
