#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "test_util.hpp"

using namespace sdioph;
using test_util::code_of;
using test_util::naive_smooth;
using test_util::primes;

TEST_CASE("prime_set validates, sorts and deduplicates") {
  const prime_set s = primes({3, 2});
  REQUIRE(s.rank() == 2);
  REQUIRE(s.primes() == std::vector<std::uint64_t>{2, 3});

  CHECK(code_of([] { primes({2, 2}); }) == errc::duplicate_prime);
  CHECK(code_of([] { primes({4}); }) == errc::not_prime);
  CHECK(code_of([] { primes({}); }) == errc::empty_prime_set);
  CHECK(code_of([] { primes({1}); }) == errc::not_prime);

  // 2^61 - 1 is prime and inside the supported range
  CHECK_NOTHROW(primes({2305843009213693951ull}));

  std::vector<mpz_class> too_big{mpz_class(1) << 70};
  CHECK(code_of([&] { prime_set::of(too_big); }) == errc::unsupported_prime_size);
  std::vector<mpz_class> not_positive{mpz_class(-3)};
  CHECK(code_of([&] { prime_set::of(not_positive); }) == errc::not_prime);
}

TEST_CASE("prime_set subset relation") {
  CHECK(primes({2, 3}).subset_of(primes({2, 3, 5})));
  CHECK_FALSE(primes({2, 7}).subset_of(primes({2, 3, 5})));
}

TEST_CASE("factor_over splits smooth part and cofactor") {
  auto f = factor_over(40, primes({2, 5}));
  CHECK(f.exponents == exponent_vec{3, 1});
  CHECK(f.cofactor == 1);

  f = factor_over(40, primes({3}));
  CHECK(f.exponents == exponent_vec{0});
  CHECK(f.cofactor == 40);

  f = factor_over(1, primes({2, 3}));
  CHECK(f.exponents == exponent_vec{0, 0});
  CHECK(f.cofactor == 1);

  CHECK(code_of([] { factor_over(0, primes({2})); }) == errc::non_positive);
  CHECK(code_of([] { factor_over(-7, primes({2})); }) == errc::non_positive);
}

TEST_CASE("factor_over round trip on random 128-bit inputs") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240611ul);
  const prime_set pools[] = {primes({2, 3}), primes({2, 3, 5, 7}),
                             primes({3, 11, 13}), primes({2, 101})};
  for (int iter = 0; iter < 10000; ++iter) {
    mpz_class n = rng.get_z_bits(128) + 1;
    const prime_set& s = pools[iter % 4];
    const factorization f = factor_over(n, s);
    mpz_class rebuilt = f.cofactor;
    for (std::size_t i = 0; i < s.rank(); ++i) {
      mpz_class pw;
      mpz_class base(s.prime(i));
      mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(),
                 static_cast<unsigned long>(f.exponents[i]));
      rebuilt *= pw;
    }
    REQUIRE(rebuilt == n);
    for (std::uint64_t p : s.primes())
      REQUIRE(!mpz_divisible_ui_p(f.cofactor.get_mpz_t(), p));
  }
}

TEST_CASE("is_smooth matches the definition") {
  CHECK(is_smooth(13, primes({2, 3, 5, 7, 13})));
  CHECK_FALSE(is_smooth(13, primes({2, 3})));
  CHECK(is_smooth(288, primes({2, 3})));  // 2^5 * 3^2
  CHECK(is_smooth(1, primes({2})));
  CHECK(code_of([] { is_smooth(0, primes({2})); }) == errc::non_positive);
  CHECK(code_of([] { is_smooth_u64(0, primes({2})); }) == errc::non_positive);
}

TEST_CASE("s_free_part strips exactly the S-primes") {
  CHECK(s_free_part(720, primes({2, 3})) == 5);
  CHECK(s_free_part(7, primes({7})) == 1);
  CHECK(s_free_part(1, primes({2, 3})) == 1);

  std::mt19937_64 rng(7);
  const prime_set s = primes({2, 5, 11});
  for (int iter = 0; iter < 500; ++iter) {
    const std::uint64_t a = rng() % 100000 + 1;
    const std::uint64_t b = rng() % 100000 + 1;
    const mpz_class fa = s_free_part(a, s);
    const mpz_class fb = s_free_part(b, s);
    const mpz_class fab = s_free_part(mpz_class(a) * b, s);
    REQUIRE(fab == fa * fb);  // multiplicativity, computed independently
    REQUIRE(mpz_divisible_p(mpz_class(a).get_mpz_t(), fa.get_mpz_t()));
    for (std::uint64_t p : s.primes())
      REQUIRE(!mpz_divisible_ui_p(fa.get_mpz_t(), p));
  }
}

TEST_CASE("enumerate_smooth lists exactly the smooth values in order") {
  const std::vector<mpz_class> expected{1, 2, 3, 4, 6, 8, 9, 12, 16, 18};
  CHECK(enumerate_smooth(primes({2, 3}), 20) == expected);
}

TEST_CASE("enumerate_smooth basic windows") {
  CHECK(enumerate_smooth(primes({2}), 10) == std::vector<mpz_class>{1, 2, 4, 8});
  CHECK(enumerate_smooth(primes({2, 3, 5}), 1) == std::vector<mpz_class>{1});
  CHECK(code_of([] { enumerate_smooth(primes({2}), 0); }) == errc::non_positive);
}

TEST_CASE("enumerate_smooth agrees with a trial-division filter up to 1e6") {
  const std::vector<std::vector<std::uint64_t>> sets = {{2, 3}, {2, 3, 7}, {5, 11}};
  for (const auto& ps : sets) {
    const prime_set s = prime_set::of(std::vector<std::uint64_t>(ps));
    const std::uint64_t limit = 1000000;
    std::vector<mpz_class> expected;
    for (std::uint64_t n = 1; n <= limit; ++n) {
      if (naive_smooth(n, ps)) expected.emplace_back(n);
    }
    const std::vector<mpz_class> got = enumerate_smooth(s, limit);
    REQUIRE(got == expected);
    for (std::size_t i = 0; i + 1 < got.size(); ++i) REQUIRE(got[i] < got[i + 1]);
  }
}

TEST_CASE("sunit_value round trips through rationals") {
  const prime_set s = primes({2, 3});
  const sunit_value v{-1, {3, -2}};
  const mpq_class q = v.value(s);
  CHECK(q == mpq_class(-8, 9));
  const auto back = to_sunit(q, s);
  REQUIRE(back.has_value());
  CHECK(*back == v);

  CHECK_FALSE(to_sunit(mpq_class(0), s).has_value());
  CHECK_FALSE(to_sunit(mpq_class(5, 3), s).has_value());
  CHECK(to_sunit(mpq_class(27, 16), s).has_value());
}
