#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tuple_search.hpp"

namespace sdioph {

// Node ceiling for exponent-grid scans (shared with the affine solver).
inline constexpr std::uint64_t default_grid_budget = 1'000'000'000ull;

using quadruple = std::array<mpz_class, 4>;

// The six shifted products of a quadruple a < b < c < d, in the fixed
// assignment s1 = ab+1, s2 = ac+1, s3 = ad+1, s4 = bc+1, s5 = bd+1,
// s6 = cd+1 (so s1 < s2 < s3 < s5 < s6 and s1 < s2 < s4 < s5 < s6, while
// s3 and s4 are incomparable). Certificates hold the exponent vectors of
// the six values over S when all of them are smooth.
struct sextuple {
  std::array<mpz_class, 6> s;
  std::optional<std::array<exponent_vec, 6>> certificates;
};

inline quadruple to_quad(const tuple_t& t) {
  if (t.size() != 4) fail(errc::not_a_quadruple, "expected exactly 4 elements");
  return {mpz_class(t[0]), mpz_class(t[1]), mpz_class(t[2]), mpz_class(t[3])};
}

inline sextuple sextuple_of(const quadruple& q) {
  if (!(q[0] >= 1 && q[0] < q[1] && q[1] < q[2] && q[2] < q[3]))
    fail(errc::not_a_quadruple, "quadruple must be strictly increasing and positive");
  sextuple out;
  out.s[0] = q[0] * q[1] + 1;
  out.s[1] = q[0] * q[2] + 1;
  out.s[2] = q[0] * q[3] + 1;
  out.s[3] = q[1] * q[2] + 1;
  out.s[4] = q[1] * q[3] + 1;
  out.s[5] = q[2] * q[3] + 1;
  return out;
}

inline sextuple sextuple_of(const quadruple& q, const prime_set& s) {
  sextuple out = sextuple_of(q);
  std::array<exponent_vec, 6> certs;
  for (std::size_t i = 0; i < 6; ++i) {
    factorization f = factor_over(out.s[i], s);
    if (f.cofactor != 1) return out;  // some value not smooth: no certificates
    certs[i] = std::move(f.exponents);
  }
  out.certificates = std::move(certs);
  return out;
}

inline sextuple sextuple_of(const tuple_t& t) { return sextuple_of(to_quad(t)); }
inline sextuple sextuple_of(const tuple_t& t, const prime_set& s) {
  return sextuple_of(to_quad(t), s);
}

// Common value of the three pair products s1s6-s1-s6+1 = s2s5-s2-s5+1
// = s3s4-s3-s4+1 (equal to abcd for a genuine quadruple), or absent.
inline std::optional<mpz_class> check_product_identities(const sextuple& sx) {
  const auto& s = sx.s;
  mpz_class p1 = s[0] * s[5] - s[0] - s[5] + 1;
  mpz_class p2 = s[1] * s[4] - s[1] - s[4] + 1;
  mpz_class p3 = s[2] * s[3] - s[2] - s[3] + 1;
  if (p1 != p2 || p1 != p3) return std::nullopt;
  return p1;
}

inline bool check_first_equation(const sextuple& sx) {
  const auto& s = sx.s;
  return s[0] * s[5] - s[0] - s[5] - s[1] * s[4] + s[1] + s[4] == 0;
}

// Both equations of the two-row unit-equation system derived from the
// product identities.
inline bool check_system(const sextuple& sx) {
  const auto& s = sx.s;
  return check_first_equation(sx) &&
         s[0] * s[5] - s[0] - s[5] - s[2] * s[3] + s[2] + s[3] == 0;
}

// Six-term form of the first system row: y1-y2-y3-y4+y5+y6 = 0 with
// y1 = s1s6, y2 = s1, y3 = s6, y4 = s2s5, y5 = s2, y6 = s5.
struct solution_vector6 {
  std::array<mpz_class, 6> y;
  static constexpr std::array<int, 6> signs{+1, -1, -1, -1, +1, +1};
};

inline solution_vector6 solution_vector(const sextuple& sx) {
  if (!check_first_equation(sx))
    fail(errc::system_unsatisfied, "sextuple does not satisfy the system");
  const auto& s = sx.s;
  solution_vector6 v;
  v.y = {s[0] * s[5], s[0], s[5], s[1] * s[4], s[1], s[4]};
  return v;
}

enum class degeneracy_class {
  non_degenerate,
  three_term_case_1,
  three_term_case_2,
  three_term_case_3,
  three_term_case_4,
  other,
};

// All nonempty proper subsets of {1..6} whose signed sum vanishes, plus the
// matched classification. Subsets are 1-based, each sorted, and listed in
// (size, lexicographic) order; the complement of a vanishing subset
// vanishes as well and both are listed.
struct subsum_report {
  std::vector<std::vector<int>> vanishing_subsets;
  degeneracy_class classification = degeneracy_class::non_degenerate;
};

namespace detail {

// The four admissible three-term splittings of the six-term equation,
// identified by the member subset containing y1; paired with complements
// {3,5,6}, {2,5,6}, {2,3,6}, {2,3,5} respectively.
inline const std::array<std::vector<int>, 4>& three_term_patterns() {
  static const std::array<std::vector<int>, 4> patterns = {
      std::vector<int>{1, 2, 4},
      std::vector<int>{1, 3, 4},
      std::vector<int>{1, 4, 5},
      std::vector<int>{1, 4, 6},
  };
  return patterns;
}

inline degeneracy_class classify_subsets(
    const std::vector<std::vector<int>>& subsets) {
  if (subsets.empty()) return degeneracy_class::non_degenerate;
  if (subsets.size() == 2) {
    // complement pairs only; pick the subset containing index 1
    const std::vector<int>& with1 =
        std::find(subsets[0].begin(), subsets[0].end(), 1) != subsets[0].end()
            ? subsets[0]
            : subsets[1];
    const auto& patterns = three_term_patterns();
    for (std::size_t k = 0; k < patterns.size(); ++k) {
      if (with1 == patterns[k])
        return static_cast<degeneracy_class>(
            static_cast<int>(degeneracy_class::three_term_case_1) + static_cast<int>(k));
    }
  }
  return degeneracy_class::other;
}

}  // namespace detail

inline subsum_report find_vanishing_subsums(const solution_vector6& v) {
  mpz_class total = 0;
  for (int i = 0; i < 6; ++i) total += v.signs[i] * v.y[i];
  if (total != 0)
    fail(errc::invalid_argument, "signed total of the six terms must vanish");
  subsum_report report;
  for (unsigned mask = 1; mask < 63u; ++mask) {
    mpz_class sum = 0;
    for (int i = 0; i < 6; ++i) {
      if (mask >> i & 1u) sum += v.signs[i] * v.y[i];
    }
    if (sum == 0) {
      std::vector<int> subset;
      for (int i = 0; i < 6; ++i) {
        if (mask >> i & 1u) subset.push_back(i + 1);
      }
      report.vanishing_subsets.push_back(std::move(subset));
    }
  }
  std::sort(report.vanishing_subsets.begin(), report.vanishing_subsets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  report.classification = detail::classify_subsets(report.vanishing_subsets);
  return report;
}

// non_degenerate when no proper subsum vanishes; three_term_case_k when the
// vanishing pattern is exactly the k-th admissible splitting; other for
// anything else (never silently dropped: callers decide what to do).
inline degeneracy_class classify_degenerate(const sextuple& sx) {
  if (!check_system(sx))
    fail(errc::system_unsatisfied, "sextuple does not satisfy the system");
  return find_vanishing_subsums(solution_vector(sx)).classification;
}

// Inverts the six shifted products back to (a,b,c,d). Succeeds only when
// each radicand is an exact integer square and re-deriving all six values
// from the result reproduces the input; the d-formula never touches s3, so
// the round trip is what enforces consistency with s3.
inline std::optional<quadruple> recover_quadruple(const sextuple& sx) {
  const auto& s = sx.s;
  for (const mpz_class& si : s) {
    if (si < 2) return std::nullopt;
  }
  auto root_of = [](const mpz_class& f1, const mpz_class& f2,
                    const mpz_class& den) -> std::optional<mpz_class> {
    mpq_class radicand(f1 * f2, den);
    radicand.canonicalize();
    if (radicand.get_den() != 1) return std::nullopt;
    const mpz_class& v = radicand.get_num();
    if (v <= 0) return std::nullopt;
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
  };
  auto a = root_of(s[0] - 1, s[1] - 1, s[3] - 1);
  auto b = root_of(s[0] - 1, s[3] - 1, s[1] - 1);
  auto c = root_of(s[1] - 1, s[3] - 1, s[0] - 1);
  auto d = root_of(s[4] - 1, s[5] - 1, s[3] - 1);
  if (!a || !b || !c || !d) return std::nullopt;
  quadruple q{*a, *b, *c, *d};
  if (!(q[0] >= 1 && q[0] < q[1] && q[1] < q[2] && q[2] < q[3]))
    return std::nullopt;
  if (sextuple_of(q).s != sx.s) return std::nullopt;
  return q;
}

// Scale every coordinate by the inverse of the first one, the canonical
// representative of the projective class: inputs differing by a nonzero
// rational factor normalize identically, and the map is idempotent.
inline std::vector<mpq_class> normalize_projective(std::vector<mpq_class> v) {
  for (const mpq_class& c : v) {
    if (c == 0) fail(errc::zero_coordinate, "projective coordinates must be nonzero");
  }
  if (v.empty()) fail(errc::invalid_argument, "empty coordinate vector");
  const mpq_class head = v.front();
  for (mpq_class& c : v) c /= head;
  return v;
}

// The fixed right-hand side a = s1*s6 - s1 - s6 of the second-row equation,
// guaranteed positive for any sextuple with s1 >= 3.
inline mpz_class positivity_witness(const sextuple& sx) {
  const auto& s = sx.s;
  if (s[0] < 3) fail(errc::invalid_argument, "positivity_witness requires s1 >= 3");
  mpz_class a = s[0] * s[5] - s[0] - s[5];
  if (a <= 0)
    fail(errc::non_positive, "witness " + a.get_str() + " is not positive");
  return a;
}

// 2^x - p^y = sign with sign in {+1,-1}, exact.
struct catalan_solution {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  int sign = 0;

  friend bool operator==(const catalan_solution&, const catalan_solution&) = default;
};

// Exhaustive scan of 2^x - p^y = ±1 over 1 <= x, y <= max_exp. The scan
// reports every solution in range (several p beyond 3 admit y = 1
// solutions; nothing is filtered).
inline std::vector<catalan_solution> catalan_scan(std::uint64_t p,
                                                  std::uint64_t max_exp) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    fail(errc::invalid_argument, "p must be an odd prime");
  if (max_exp < 1) fail(errc::invalid_argument, "max_exp must be >= 1");
  std::vector<catalan_solution> out;
  mpz_class power = 1;
  for (std::uint64_t y = 1; y <= max_exp; ++y) {
    power *= p;
    for (int sign : {-1, +1}) {
      mpz_class two_power = power + sign;  // = 2^x when a solution exists
      if (two_power < 2) continue;
      if (mpz_popcount(two_power.get_mpz_t()) != 1) continue;
      const std::uint64_t x = mpz_sizeinbase(two_power.get_mpz_t(), 2) - 1;
      if (x >= 1 && x <= max_exp) out.push_back({x, y, sign});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const catalan_solution& a, const catalan_solution& b) {
              return a.x != b.x ? a.x < b.x : a.y < b.y;
            });
  return out;
}

// One solution of 2^t0 p^u0 = 2^t1 p^u1 + 2^t2 p^u2, stored flat as
// (t0, u0, t1, u1, t2, u2).
struct power_sum_solution {
  std::array<std::int64_t, 6> exp{};

  friend bool operator==(const power_sum_solution&, const power_sum_solution&) = default;
  friend auto operator<=>(const power_sum_solution&, const power_sum_solution&) = default;
};

// Exhaustive scan of 2^t0 p^u0 = 2^t1 p^u1 + 2^t2 p^u2 with the four
// right-hand exponents in [0, max_exp]: the sum determines the left pair
// through its 2- and p-adic valuations, so (t0, u0) is reported as found.
inline std::vector<power_sum_solution> power_sum_scan(
    std::uint64_t p, std::uint64_t max_exp,
    std::uint64_t budget = default_grid_budget) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    fail(errc::invalid_argument, "p must be an odd prime");
  if (max_exp < 1) fail(errc::invalid_argument, "max_exp must be >= 1");
  const std::uint64_t side = max_exp + 1;
  mpz_class grid = mpz_class(side) * side;
  grid = grid * grid;
  if (grid > budget)
    fail(errc::budget_exceeded, "exponent grid " + grid.get_str() +
                                    " exceeds the budget " + std::to_string(budget));

  std::vector<mpz_class> terms(side * side);  // terms[t*side+u] = 2^t p^u
  {
    mpz_class pw2 = 1;
    for (std::uint64_t t = 0; t < side; ++t, pw2 <<= 1) {
      mpz_class v = pw2;
      for (std::uint64_t u = 0; u < side; ++u, v *= p) terms[t * side + u] = v;
    }
  }

  std::vector<power_sum_solution> out;
  auto classify_sum = [&](const mpz_class& sum, std::uint64_t i, std::uint64_t j) {
    const std::uint64_t t0 = mpz_scan1(sum.get_mpz_t(), 0);
    mpz_class rest = sum >> t0;
    std::uint64_t u0 = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++u0;
    }
    if (rest != 1) return;
    const auto e = [&](std::uint64_t idx) {
      return std::array<std::int64_t, 2>{
          static_cast<std::int64_t>(idx / side),
          static_cast<std::int64_t>(idx % side)};
    };
    const auto [t1, u1] = e(i);
    const auto [t2, u2] = e(j);
    out.push_back({{static_cast<std::int64_t>(t0), static_cast<std::int64_t>(u0),
                    t1, u1, t2, u2}});
    if (i != j) {
      out.push_back({{static_cast<std::int64_t>(t0), static_cast<std::int64_t>(u0),
                      t2, u2, t1, u1}});
    }
  };
  for (std::uint64_t i = 0; i < terms.size(); ++i) {
    for (std::uint64_t j = i; j < terms.size(); ++j) {
      classify_sum(terms[i] + terms[j], i, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sdioph
