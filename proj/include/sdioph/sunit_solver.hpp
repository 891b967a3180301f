#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sunit_system.hpp"

namespace sdioph {

// a1 x1 + ... + an xn = 1 with nonzero rational coefficients and the
// unknowns ranging over the unit group generated by S (and -1).
struct unit_equation {
  std::vector<mpq_class> coefficients;
  prime_set s;
};

inline unit_equation make_unit_equation(std::vector<mpq_class> coefficients,
                                        prime_set s) {
  if (coefficients.size() < 2 || coefficients.size() > 6)
    fail(errc::invalid_argument, "equation needs between 2 and 6 terms");
  for (const mpq_class& a : coefficients) {
    if (a == 0) fail(errc::invalid_argument, "coefficients must be nonzero");
  }
  return {std::move(coefficients), std::move(s)};
}

// Per-prime, per-variable cap on exponent magnitudes: the box window that
// makes the exhaustive scan finite. Documented grid size is
// (2H+1)^(r(n-1)) exponent choices times 2^(n-1) sign choices.
struct height_bound {
  std::int64_t h = 0;
};

struct solution_record {
  std::vector<sunit_value> x;
  bool degenerate = false;
};

namespace detail {

// All unit values with |exponent| <= H, in canonical (sign, exponents)
// order, paired with their rational values.
inline std::pair<std::vector<sunit_value>, std::vector<mpq_class>>
unit_candidates(const prime_set& s, std::int64_t h) {
  std::vector<sunit_value> units;
  exponent_vec exp(s.rank(), -h);
  for (int sign : {-1, +1}) {
    for (;;) {
      units.push_back({sign, exp});
      std::size_t i = exp.size();
      while (i > 0 && exp[i - 1] == h) exp[--i] = -h;
      if (i == 0) break;
      ++exp[i - 1];
    }
  }
  std::vector<mpq_class> values;
  values.reserve(units.size());
  for (const sunit_value& u : units) values.push_back(u.value(s));
  return {std::move(units), std::move(values)};
}

inline bool within_box(const exponent_vec& exp, std::int64_t h) {
  for (std::int64_t e : exp) {
    if (e > h || e < -h) return false;
  }
  return true;
}

template <typename Value>
inline bool any_proper_subsum_vanishes(const std::vector<Value>& terms) {
  const unsigned n = static_cast<unsigned>(terms.size());
  const unsigned full = (1u << n) - 1;
  for (unsigned mask = 1; mask < full; ++mask) {
    Value sum = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (mask >> i & 1u) sum += terms[i];
    }
    if (sum == 0) return true;
  }
  return false;
}

}  // namespace detail

// Exhaustive window scan: the first n-1 variables run over the full sign
// and exponent grid, the last one is solved as (1 - sum)/an and kept only
// if it is a nonzero unit inside the same box. Output is canonically
// sorted and each record carries an exact degeneracy flag.
inline std::vector<solution_record> solve_affine(
    const unit_equation& eq, height_bound h,
    std::uint64_t budget = default_grid_budget) {
  if (h.h < 0) fail(errc::invalid_argument, "height bound must be >= 0");
  const std::size_t n = eq.coefficients.size();
  const std::size_t r = eq.s.rank();

  mpz_class per_variable = 2;
  for (std::size_t i = 0; i < r; ++i) per_variable *= 2 * h.h + 1;
  mpz_class grid = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) grid *= per_variable;
  if (grid > budget)
    fail(errc::budget_exceeded, "exponent grid " + grid.get_str() +
                                    " exceeds the budget " + std::to_string(budget));

  auto [units, values] = detail::unit_candidates(eq.s, h.h);
  std::vector<solution_record> out;
  std::vector<std::size_t> chosen(n - 1, 0);
  std::vector<mpq_class> partial(n, 0);  // partial[k] = sum of first k terms

  auto emit_if_solution = [&]() {
    mpq_class rest = 1 - partial[n - 1];
    if (rest == 0) return;
    mpq_class last = rest / eq.coefficients[n - 1];
    std::optional<sunit_value> unit = to_sunit(last, eq.s);
    if (!unit || !detail::within_box(unit->exp, h.h)) return;
    solution_record rec;
    rec.x.reserve(n);
    for (std::size_t i = 0; i + 1 < n; ++i) rec.x.push_back(units[chosen[i]]);
    rec.x.push_back(std::move(*unit));
    std::vector<mpq_class> terms;
    terms.reserve(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
      terms.push_back(eq.coefficients[i] * values[chosen[i]]);
    terms.push_back(eq.coefficients[n - 1] * last);
    rec.degenerate = detail::any_proper_subsum_vanishes(terms);
    out.push_back(std::move(rec));
  };

  auto scan = [&](auto&& self, std::size_t level) -> void {
    if (level == n - 1) {
      emit_if_solution();
      return;
    }
    for (std::size_t c = 0; c < units.size(); ++c) {
      chosen[level] = c;
      partial[level + 1] = partial[level] + eq.coefficients[level] * values[c];
      self(self, level + 1);
    }
  };
  scan(scan, 0);

  std::sort(out.begin(), out.end(),
            [](const solution_record& a, const solution_record& b) {
              return a.x < b.x;
            });
  return out;
}

struct solution_counts {
  std::uint64_t total = 0;
  std::uint64_t nondegenerate = 0;
  // distinct solutions after dropping all signs (torsion-free count)
  std::uint64_t nondegenerate_sign_stripped = 0;
};

inline solution_counts count_solutions(const unit_equation& eq, height_bound h,
                                       std::uint64_t budget = default_grid_budget) {
  const std::vector<solution_record> sols = solve_affine(eq, h, budget);
  solution_counts counts;
  counts.total = sols.size();
  std::set<std::vector<exponent_vec>> stripped;
  for (const solution_record& rec : sols) {
    if (rec.degenerate) continue;
    ++counts.nondegenerate;
    std::vector<exponent_vec> key;
    key.reserve(rec.x.size());
    for (const sunit_value& u : rec.x) key.push_back(u.exp);
    stripped.insert(std::move(key));
  }
  counts.nondegenerate_sign_stripped = stripped.size();
  return counts;
}

inline std::uint64_t count_nondegenerate(const unit_equation& eq, height_bound h,
                                         std::uint64_t budget = default_grid_budget) {
  return count_solutions(eq, h, budget).nondegenerate;
}

// A projective class of the homogeneous equation sum sigma_i y_i = 0,
// stored through its canonical representative (first coordinate 1).
struct projective_solution {
  std::vector<mpq_class> coordinates;
  bool degenerate = false;
};

// Validates one candidate: positive integers, each S-smooth with exponents
// in [0, H], satisfying the signed equation exactly.
inline bool is_homogeneous_solution(const std::vector<mpz_class>& y,
                                    const std::vector<int>& signs,
                                    const prime_set& s, height_bound h) {
  if (y.size() != signs.size() || y.empty()) return false;
  mpz_class total = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < 1) return false;
    factorization f = factor_over(y[i], s);
    if (f.cofactor != 1) return false;
    for (std::int64_t e : f.exponents) {
      if (e > h.h) return false;
    }
    total += signs[i] * y[i];
  }
  return total == 0;
}

// Exhaustive window scan of the sign-patterned homogeneous equation over
// positive smooth integers with exponents in [0, H]: the first n-1
// coordinates run over the grid, the last is solved and checked. Raw
// integer solutions are normalized to first coordinate 1 and
// deduplicated, so each projective class appears once, in coordinate
// order.
inline std::vector<projective_solution> solve_homogeneous_projective(
    std::size_t n, const std::vector<int>& signs, const prime_set& s,
    height_bound h, std::uint64_t budget = default_grid_budget) {
  if (n < 3 || n > 6)
    fail(errc::invalid_argument, "homogeneous solver handles 3 to 6 terms");
  if (signs.size() != n)
    fail(errc::invalid_argument, "sign pattern length must equal the term count");
  for (int sg : signs) {
    if (sg != 1 && sg != -1)
      fail(errc::invalid_argument, "sign pattern entries must be +1 or -1");
  }
  if (h.h < 0) fail(errc::invalid_argument, "height bound must be >= 0");
  const std::size_t r = s.rank();

  mpz_class per_variable = 1;
  for (std::size_t i = 0; i < r; ++i) per_variable *= h.h + 1;
  mpz_class grid = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) grid *= per_variable;
  if (grid > budget)
    fail(errc::budget_exceeded, "exponent grid " + grid.get_str() +
                                    " exceeds the budget " + std::to_string(budget));

  // positive smooth integers with every exponent in [0, H]
  std::vector<mpz_class> candidates;
  {
    exponent_vec exp(r, 0);
    for (;;) {
      mpz_class v = 1;
      for (std::size_t i = 0; i < r; ++i) {
        mpz_class pw;
        mpz_class base = mpz_class(s.prime(i));
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(),
                   static_cast<unsigned long>(exp[i]));
        v *= pw;
      }
      candidates.push_back(std::move(v));
      std::size_t i = exp.size();
      while (i > 0 && exp[i - 1] == h.h) exp[--i] = 0;
      if (i == 0) break;
      ++exp[i - 1];
    }
  }

  std::map<std::vector<mpq_class>, bool> classes;  // coordinates -> degenerate
  std::vector<mpz_class> y(n);
  auto scan = [&](auto&& self, std::size_t level, const mpz_class& partial) -> void {
    if (level == n - 1) {
      mpz_class rest = signs[n - 1] == 1 ? mpz_class(-partial) : partial;
      if (rest < 1) return;
      factorization f = factor_over(rest, s);
      if (f.cofactor != 1) return;
      for (std::int64_t e : f.exponents) {
        if (e > h.h) return;
      }
      y[n - 1] = rest;
      std::vector<mpz_class> terms(n);
      for (std::size_t i = 0; i < n; ++i) terms[i] = signs[i] * y[i];
      const bool degenerate = detail::any_proper_subsum_vanishes(terms);
      std::vector<mpq_class> coords(y.begin(), y.end());
      classes.emplace(normalize_projective(std::move(coords)), degenerate);
      return;
    }
    for (const mpz_class& c : candidates) {
      y[level] = c;
      self(self, level + 1, mpz_class(partial + signs[level] * c));
    }
  };
  scan(scan, 0, mpz_class(0));

  std::vector<projective_solution> out;
  out.reserve(classes.size());
  for (auto& [coords, degenerate] : classes)
    out.push_back({coords, degenerate});
  return out;
}

}  // namespace sdioph
