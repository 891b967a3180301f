#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "test_util.hpp"

using namespace sdioph;
using test_util::code_of;
using test_util::primes;

namespace {

quadruple quad(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return {mpz_class(a), mpz_class(b), mpz_class(c), mpz_class(d)};
}

sextuple make_sextuple(long s1, long s2, long s3, long s4, long s5, long s6) {
  sextuple sx;
  sx.s = {mpz_class(s1), mpz_class(s2), mpz_class(s3),
          mpz_class(s4), mpz_class(s5), mpz_class(s6)};
  return sx;
}

std::array<std::uint64_t, 4> random_quadruple(std::mt19937_64& rng,
                                              std::uint64_t max_value) {
  std::set<std::uint64_t> vals;
  while (vals.size() < 4) vals.insert(rng() % max_value + 1);
  std::array<std::uint64_t, 4> q{};
  std::copy(vals.begin(), vals.end(), q.begin());
  return q;
}

}  // namespace

TEST_CASE("sextuple_of produces the fixed assignment") {
  CHECK(sextuple_of(tuple_t{1, 2, 3, 4}).s ==
        std::array<mpz_class, 6>{3, 4, 5, 7, 9, 13});
  CHECK(sextuple_of(tuple_t{1, 3, 5, 7}).s ==
        std::array<mpz_class, 6>{4, 6, 8, 16, 22, 36});
  CHECK(code_of([] { sextuple_of(tuple_t{1, 2, 3}); }) == errc::not_a_quadruple);
  CHECK(code_of([] { sextuple_of(quad(4, 3, 2, 1)); }) == errc::not_a_quadruple);
  CHECK(code_of([] { sextuple_of(quad(0, 1, 2, 3)); }) == errc::not_a_quadruple);
}

TEST_CASE("certificates are present exactly when all six values are smooth") {
  const sextuple with = sextuple_of(tuple_t{1, 2, 3, 4}, primes({2, 3, 5, 7, 13}));
  REQUIRE(with.certificates.has_value());
  // s6 = 13 -> exponent vector (0,0,0,0,1)
  CHECK((*with.certificates)[5] == exponent_vec{0, 0, 0, 0, 1});

  const sextuple without = sextuple_of(tuple_t{1, 3, 5, 7}, primes({2, 3}));
  CHECK_FALSE(without.certificates.has_value());  // 22 = 2*11 is not smooth
}

TEST_CASE("product identities share one common value") {
  auto p = check_product_identities(sextuple_of(tuple_t{1, 2, 3, 4}));
  REQUIRE(p.has_value());
  CHECK(*p == 24);

  p = check_product_identities(sextuple_of(tuple_t{1, 3, 5, 7}));
  REQUIRE(p.has_value());
  CHECK(*p == 105);

  CHECK_FALSE(check_product_identities(make_sextuple(3, 4, 5, 7, 9, 14)).has_value());
}

TEST_CASE("third product identity is symmetric in s3 and s4") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 100; ++iter) {
    const auto vals = random_quadruple(rng, 5000);
    sextuple sx = sextuple_of(quad(vals[0], vals[1], vals[2], vals[3]));
    const auto before = check_product_identities(sx);
    std::swap(sx.s[2], sx.s[3]);
    REQUIRE(check_product_identities(sx) == before);
  }
}

TEST_CASE("check_system holds for genuine sextuples only") {
  CHECK(check_system(sextuple_of(tuple_t{1, 2, 3, 4})));
  CHECK(check_system(sextuple_of(tuple_t{1, 3, 5, 7})));
  CHECK_FALSE(check_system(make_sextuple(3, 4, 5, 7, 9, 12)));
}

TEST_CASE("solution_vector carries the fixed sign pattern") {
  const solution_vector6 v = solution_vector(sextuple_of(tuple_t{1, 2, 3, 4}));
  CHECK(v.y == std::array<mpz_class, 6>{39, 3, 13, 36, 4, 9});
  CHECK(solution_vector(sextuple_of(tuple_t{1, 3, 5, 7})).y ==
        std::array<mpz_class, 6>{144, 4, 36, 132, 6, 22});
  CHECK(code_of([] { solution_vector(make_sextuple(3, 4, 5, 7, 9, 12)); }) ==
        errc::system_unsatisfied);
  mpz_class total = 0;
  for (int i = 0; i < 6; ++i) total += v.signs[i] * v.y[i];
  CHECK(total == 0);
}

TEST_CASE("vanishing subsums are scanned exhaustively") {
  const subsum_report degenerate =
      find_vanishing_subsums(solution_vector(sextuple_of(tuple_t{1, 2, 3, 4})));
  REQUIRE(degenerate.vanishing_subsets ==
          std::vector<std::vector<int>>{{1, 2, 4}, {3, 5, 6}});
  CHECK(degenerate.classification == degeneracy_class::three_term_case_1);

  const subsum_report clean =
      find_vanishing_subsums(solution_vector(sextuple_of(tuple_t{1, 3, 5, 7})));
  CHECK(clean.vanishing_subsets.empty());
  CHECK(clean.classification == degeneracy_class::non_degenerate);
}

TEST_CASE("distinct odd entries never produce short vanishing subsums") {
  std::mt19937_64 rng(11);
  int built = 0;
  while (built < 200) {
    // draw distinct odd y2..y6 and solve for y1 so that the total vanishes
    std::set<std::uint64_t> draws;
    while (draws.size() < 5) draws.insert((rng() % 5000) * 2 + 1);
    std::vector<std::uint64_t> y(draws.begin(), draws.end());
    std::shuffle(y.begin(), y.end(), rng);
    const std::int64_t y1 = static_cast<std::int64_t>(y[0]) + y[1] + y[2] -
                            static_cast<std::int64_t>(y[3]) - y[4];
    if (y1 <= 0) continue;
    std::set<std::uint64_t> all(draws);
    all.insert(static_cast<std::uint64_t>(y1));
    if (all.size() != 6) continue;
    solution_vector6 v;
    v.y = {mpz_class(static_cast<unsigned long>(y1)), mpz_class(y[0]),
           mpz_class(y[1]), mpz_class(y[2]), mpz_class(y[3]), mpz_class(y[4])};
    const subsum_report report = find_vanishing_subsums(v);
    for (const auto& subset : report.vanishing_subsets)
      REQUIRE(subset.size() >= 3);
    ++built;
  }
}

TEST_CASE("classification identifies the admissible three-term splitting") {
  CHECK(classify_degenerate(sextuple_of(tuple_t{1, 2, 3, 4})) ==
        degeneracy_class::three_term_case_1);
  CHECK(classify_degenerate(sextuple_of(tuple_t{1, 3, 5, 7})) ==
        degeneracy_class::non_degenerate);
  CHECK(code_of([] { classify_degenerate(make_sextuple(3, 4, 5, 7, 9, 12)); }) ==
        errc::system_unsatisfied);
}

TEST_CASE("all-odd sextuples never classify as the first splitting") {
  // even quadruples yield all-odd shifted products; s6 = s5 + s2 would be even
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    auto q = random_quadruple(rng, 4000);
    const sextuple sx =
        sextuple_of(quad(2 * q[0], 2 * q[1], 2 * q[2], 2 * q[3]));
    CHECK(classify_degenerate(sx) != degeneracy_class::three_term_case_1);
  }
}

TEST_CASE("recover_quadruple inverts sextuple_of") {
  auto q = recover_quadruple(sextuple_of(tuple_t{1, 2, 3, 4}));
  REQUIRE(q.has_value());
  CHECK(*q == quad(1, 2, 3, 4));

  q = recover_quadruple(sextuple_of(tuple_t{1, 3, 5, 7}));
  REQUIRE(q.has_value());
  CHECK(*q == quad(1, 3, 5, 7));

  CHECK_FALSE(recover_quadruple(make_sextuple(3, 4, 5, 7, 9, 14)).has_value());
  // consistent (s1,s2,s4,s5,s6) but corrupted s3: the round trip rejects it
  CHECK_FALSE(recover_quadruple(make_sextuple(3, 4, 6, 7, 9, 13)).has_value());
}

TEST_CASE("random quadruples satisfy the full invariant bundle") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    const auto vals = random_quadruple(rng, 1000000);
    const quadruple q = quad(vals[0], vals[1], vals[2], vals[3]);
    const sextuple sx = sextuple_of(q);
    REQUIRE(check_system(sx));
    const auto product = check_product_identities(sx);
    REQUIRE(product.has_value());
    REQUIRE(*product == q[0] * q[1] * q[2] * q[3]);
    REQUIRE(sx.s[0] < sx.s[1]);
    REQUIRE(sx.s[1] < sx.s[2]);
    REQUIRE(sx.s[1] < sx.s[3]);
    REQUIRE(sx.s[2] < sx.s[4]);
    REQUIRE(sx.s[3] < sx.s[4]);
    REQUIRE(sx.s[4] < sx.s[5]);
    const auto back = recover_quadruple(sx);
    REQUIRE(back.has_value());
    REQUIRE(*back == q);
    const mpz_class witness = positivity_witness(sx);
    REQUIRE(witness > 0);
    REQUIRE(witness == sx.s[2] * sx.s[3] - sx.s[2] - sx.s[3]);
  }
}

TEST_CASE("normalize_projective fixes the first coordinate") {
  const std::vector<mpq_class> v{39, 3, 13, 36, 4, 9};
  const std::vector<mpq_class> n = normalize_projective(v);
  CHECK(n == std::vector<mpq_class>{mpq_class(1), mpq_class(1, 13), mpq_class(1, 3),
                                    mpq_class(12, 13), mpq_class(4, 39),
                                    mpq_class(3, 13)});
  std::vector<mpq_class> doubled;
  for (const mpq_class& c : v) doubled.push_back(c * 2);
  CHECK(normalize_projective(doubled) == n);

  CHECK(code_of([] {
          normalize_projective({mpq_class(0), mpq_class(1), mpq_class(1),
                                mpq_class(1), mpq_class(1), mpq_class(1)});
        }) == errc::zero_coordinate);
}

TEST_CASE("normalize_projective is idempotent and scale invariant") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<mpq_class> v;
    for (int i = 0; i < 6; ++i) {
      const long num = static_cast<long>(rng() % 2000) - 1000;
      const long den = static_cast<long>(rng() % 999) + 1;
      if (num == 0) {
        v.emplace_back(1);
      } else {
        v.emplace_back(num, den);
        v.back().canonicalize();
      }
    }
    const long lnum = static_cast<long>(rng() % 500) + 1;
    const long lden = static_cast<long>(rng() % 500) + 1;
    mpq_class lambda(lnum, lden);
    lambda.canonicalize();
    if (rng() % 2) lambda = -lambda;
    std::vector<mpq_class> scaled;
    for (const mpq_class& c : v) scaled.push_back(c * lambda);
    const auto n1 = normalize_projective(v);
    REQUIRE(normalize_projective(scaled) == n1);
    REQUIRE(normalize_projective(n1) == n1);
  }
}

TEST_CASE("positivity witness") {
  CHECK(positivity_witness(sextuple_of(tuple_t{1, 2, 3, 4})) == 23);
  CHECK(positivity_witness(sextuple_of(tuple_t{1, 3, 5, 7})) == 104);
  CHECK(code_of([] { positivity_witness(make_sextuple(1, 4, 5, 7, 9, 13)); }) ==
        errc::invalid_argument);
}

TEST_CASE("catalan scan enumerates both signs exactly") {
  CHECK(catalan_scan(3, 40) ==
        std::vector<catalan_solution>{{1, 1, -1}, {2, 1, +1}, {3, 2, -1}});
  CHECK(catalan_scan(5, 40) == std::vector<catalan_solution>{{2, 1, -1}});
  CHECK(catalan_scan(11, 40).empty());
  CHECK(code_of([] { catalan_scan(2, 10); }) == errc::invalid_argument);
  CHECK(code_of([] { catalan_scan(9, 10); }) == errc::invalid_argument);
  CHECK(code_of([] { catalan_scan(3, 0); }) == errc::invalid_argument);
}

TEST_CASE("power sum scan finds the expected splittings") {
  const auto sols = power_sum_scan(3, 4);
  auto contains = [&](std::array<std::int64_t, 6> exp) {
    return std::find_if(sols.begin(), sols.end(), [&](const power_sum_solution& s) {
             return s.exp == exp;
           }) != sols.end();
  };
  CHECK(contains({0, 1, 0, 0, 1, 0}));  // 3 = 1 + 2
  CHECK(contains({2, 1, 3, 0, 2, 0}));  // 12 = 8 + 4
  CHECK(std::is_sorted(sols.begin(), sols.end()));

  const auto sols7 = power_sum_scan(7, 1);
  CHECK(std::find_if(sols7.begin(), sols7.end(), [](const power_sum_solution& s) {
          return s.exp == std::array<std::int64_t, 6>{3, 0, 0, 0, 0, 1};
        }) != sols7.end());  // 8 = 1 + 7
}

TEST_CASE("power sum solutions satisfy the equation exactly") {
  for (std::uint64_t p : {3ull, 5ull}) {
    for (const power_sum_solution& s : power_sum_scan(p, 5)) {
      auto term = [&](std::int64_t t, std::int64_t u) {
        mpz_class v = 1;
        v <<= static_cast<unsigned long>(t);
        mpz_class pw;
        mpz_class base(p);
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(u));
        return mpz_class(v * pw);
      };
      REQUIRE(term(s.exp[0], s.exp[1]) ==
              term(s.exp[2], s.exp[3]) + term(s.exp[4], s.exp[5]));
      for (std::int64_t e : s.exp) REQUIRE(e >= 0);
      for (std::size_t i = 2; i < 6; ++i) REQUIRE(s.exp[i] <= 5);
    }
  }
}

TEST_CASE("power sum scan is closed under removing common factors") {
  const auto sols = power_sum_scan(3, 6);
  const std::set<std::array<std::int64_t, 6>> index(
      [&] {
        std::set<std::array<std::int64_t, 6>> s;
        for (const auto& x : sols) s.insert(x.exp);
        return s;
      }());
  for (const auto& s : sols) {
    const std::int64_t t = std::min({s.exp[0], s.exp[2], s.exp[4]});
    const std::int64_t u = std::min({s.exp[1], s.exp[3], s.exp[5]});
    const std::array<std::int64_t, 6> primitive{s.exp[0] - t, s.exp[1] - u,
                                                s.exp[2] - t, s.exp[3] - u,
                                                s.exp[4] - t, s.exp[5] - u};
    REQUIRE(index.count(primitive) == 1);
  }
}

TEST_CASE("catalan solutions embed into the power sum scan") {
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    const std::uint64_t cap = 10;
    const auto ps = power_sum_scan(p, cap);
    const std::set<std::array<std::int64_t, 6>> index(
        [&] {
          std::set<std::array<std::int64_t, 6>> s;
          for (const auto& x : ps) s.insert(x.exp);
          return s;
        }());
    for (const catalan_solution& c : catalan_scan(p, cap)) {
      const auto x = static_cast<std::int64_t>(c.x);
      const auto y = static_cast<std::int64_t>(c.y);
      if (c.sign == +1) {
        // 2^x = p^y + 1
        REQUIRE(index.count({x, 0, 0, y, 0, 0}) == 1);
      } else {
        // p^y = 2^x + 1
        REQUIRE(index.count({0, y, x, 0, 0, 0}) == 1);
      }
    }
  }
}

TEST_CASE("power sum scan budget") {
  CHECK(code_of([] { power_sum_scan(3, 40, 1000); }) == errc::budget_exceeded);
}
