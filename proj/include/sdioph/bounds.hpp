#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace sdioph {

// Bound values can run to tens of thousands of digits; keep the exact
// integer only while it stays below this many decimal digits.
inline constexpr std::uint64_t default_digit_budget = 1'000'000;

// Exact big integer (absent once past the digit budget) plus its natural
// logarithm, accurate to 1e-6 in absolute terms.
struct bound_value {
  std::optional<mpz_class> exact;
  double log_e = 0.0;
};

namespace detail {

inline constexpr long double ln2_l = 0.6931471805599453094172321214581765681L;
inline constexpr long double ln10_l = 2.3025850929940456840179914546843642076L;

// ln via the binary split n = frac * 2^k: the digit count carries the bulk
// of the magnitude and the leading bits refine it, so the error stays
// bounded regardless of the size of n.
inline long double log_of_mpz(const mpz_class& n) {
  signed long k = 0;
  const double frac = mpz_get_d_2exp(&k, n.get_mpz_t());
  return std::log(static_cast<long double>(frac)) +
         static_cast<long double>(k) * ln2_l;
}

// Running product in dual representation.
struct accum {
  std::optional<mpz_class> exact;
  long double log = 0.0L;

  static accum one() { return {mpz_class(1), 0.0L}; }

  static accum power(std::uint64_t base, std::uint64_t exponent,
                     std::uint64_t digit_budget) {
    accum a;
    a.log = static_cast<long double>(exponent) *
            std::log(static_cast<long double>(base));
    if (a.log / ln10_l <= static_cast<long double>(digit_budget)) {
      mpz_class v;
      mpz_ui_pow_ui(v.get_mpz_t(), base, exponent);
      a.exact = std::move(v);
    }
    return a;
  }

  accum times(const accum& other, std::uint64_t digit_budget) const {
    accum a;
    a.log = log + other.log;
    if (exact && other.exact &&
        a.log / ln10_l <= static_cast<long double>(digit_budget)) {
      a.exact = *exact * *other.exact;
    }
    return a;
  }

  // x + y computed exactly when possible, in the log domain otherwise
  // (log(x+y) = log x + log1p(exp(log y - log x)) with x the larger term).
  accum plus(const accum& other, std::uint64_t digit_budget) const {
    accum a;
    const long double hi = std::max(log, other.log);
    const long double lo = std::min(log, other.log);
    a.log = hi + std::log1p(std::exp(lo - hi));
    if (exact && other.exact &&
        a.log / ln10_l <= static_cast<long double>(digit_budget)) {
      a.exact = *exact + *other.exact;
    }
    return a;
  }

  bound_value finish() const {
    bound_value v;
    if (exact) {
      v.exact = *exact;
      v.log_e = static_cast<double>(log_of_mpz(*exact));
    } else {
      v.log_e = static_cast<double>(log);
    }
    return v;
  }
};

inline void require_rank(std::int64_t r) {
  if (r < 1) fail(errc::invalid_argument, "rank r must be >= 1");
}

inline void require_terms(std::int64_t n) {
  if (n < 2) fail(errc::invalid_argument, "term count n must be >= 2");
}

inline accum a2_accum(std::int64_t r, std::uint64_t digit_budget) {
  require_rank(r);
  return accum::power(7, static_cast<std::uint64_t>(3 + 2 * r), digit_budget)
      .times(accum::power(3, 1, digit_budget), digit_budget);
}

inline accum b_accum(std::int64_t n, std::int64_t r, std::uint64_t digit_budget) {
  require_terms(n);
  require_rank(r);
  const std::uint64_t exponent = static_cast<std::uint64_t>(6 * n * n * n * (n + r));
  return accum::power(static_cast<std::uint64_t>(8 * n), exponent, digit_budget);
}

inline accum a_recursive_accum(std::int64_t n, std::int64_t r,
                               std::uint64_t digit_budget) {
  require_terms(n);
  require_rank(r);
  accum a = a2_accum(r, digit_budget);
  for (std::int64_t k = 3; k <= n; ++k) {
    a = accum::power(2, static_cast<std::uint64_t>(k), digit_budget)
            .times(a, digit_budget)
            .times(b_accum(k, r + 1, digit_budget), digit_budget);
  }
  return a;
}

inline accum theorem_accum(std::int64_t r, bool special,
                           std::uint64_t digit_budget) {
  require_rank(r);
  accum a5 = a_recursive_accum(5, r, digit_budget);
  accum a3 = a_recursive_accum(3, r, digit_budget);
  if (special) return a5.times(a3, digit_budget);
  accum a2sq = a2_accum(r, digit_budget);
  a2sq = a2sq.times(a2sq, digit_budget);
  return a5.plus(a2sq, digit_budget).times(a3, digit_budget);
}

}  // namespace detail

// Two-term bound 3 * 7^(3+2r); small enough to stay exact for any sane r.
inline bound_value a2(std::int64_t r) {
  return detail::a2_accum(r, default_digit_budget).finish();
}

// Auxiliary bound (8n)^(6 n^3 (n+r)).
inline bound_value b_bound(std::int64_t n, std::int64_t r,
                           std::uint64_t digit_budget = default_digit_budget) {
  return detail::b_accum(n, r, digit_budget).finish();
}

// Closed-form bound (8n)^(4 n^4 (n+r+1)).
inline bound_value a_direct(std::int64_t n, std::int64_t r,
                            std::uint64_t digit_budget = default_digit_budget) {
  detail::require_terms(n);
  detail::require_rank(r);
  const std::uint64_t exponent =
      static_cast<std::uint64_t>(4 * n * n * n * n * (n + r + 1));
  return detail::accum::power(static_cast<std::uint64_t>(8 * n), exponent,
                              digit_budget)
      .finish();
}

// Recursive bound A(n,r) = 2^n A(n-1,r) B(n,r+1) with base A(2,r) = a2(r);
// noticeably sharper than the closed form. The default digit budget keeps
// the exact integer through n <= 5, r <= 50 and far beyond.
inline bound_value a_recursive(std::int64_t n, std::int64_t r,
                               std::uint64_t digit_budget = default_digit_budget) {
  return detail::a_recursive_accum(n, r, digit_budget).finish();
}

// Count bound for quadruples: (A(5,r) + A(2,r)^2) * A(3,r); the special
// variant A(5,r) * A(3,r) applies when r = 2 or 2 is not in S.
inline bound_value theorem_bound(std::int64_t r, bool special,
                                 std::uint64_t digit_budget = default_digit_budget) {
  return detail::theorem_accum(r, special, digit_budget).finish();
}

// Same statement evaluated with the closed-form A values instead of the
// recursion; kept for comparison against the recursive route.
inline bound_value remark_direct_bound(std::int64_t r,
                                       std::uint64_t digit_budget = default_digit_budget) {
  detail::require_rank(r);
  detail::accum a5 = detail::accum::power(
      40, static_cast<std::uint64_t>(2500 * (r + 6)), digit_budget);
  detail::accum a3 = detail::accum::power(
      24, static_cast<std::uint64_t>(324 * (r + 4)), digit_budget);
  detail::accum a2sq = detail::a2_accum(r, digit_budget);
  a2sq = a2sq.times(a2sq, digit_budget);
  return a5.plus(a2sq, digit_budget).times(a3, digit_budget).finish();
}

// Published exponent pairs this calculator cross-checks.
inline constexpr double published_corollary_intercept = 27398.0;
inline constexpr double published_corollary_slope = 5126.0;
inline constexpr double published_remark_intercept = 73801.0;
inline constexpr double published_remark_slope = 15378.0;

struct corollary_row {
  std::int64_t r = 0;
  double log_theorem = 0.0;
  double fitted = 0.0;
  double published = 0.0;
};

struct corollary_fit {
  double fitted_intercept = 0.0;
  double fitted_slope = 0.0;
  double published_intercept = published_corollary_intercept;
  double published_slope = published_corollary_slope;
  bool deviates_from_published = false;
  std::vector<corollary_row> rows;
};

// Least affine majorant c0 + c1 r of ln theorem_bound(r, general) over
// 1 <= r <= r_max: c1 is the largest consecutive log difference and c0 the
// r = 1 intercept, both rounded up at 0.1 resolution. The published pair
// is reported side by side; the derived slope exceeds it, and the fit
// flags that instead of hiding it.
inline corollary_fit fitted_corollary_constants(
    std::int64_t r_max, std::uint64_t digit_budget = default_digit_budget) {
  if (r_max < 2) fail(errc::invalid_argument, "r_max must be >= 2");
  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(r_max));
  for (std::int64_t r = 1; r <= r_max; ++r)
    logs.push_back(theorem_bound(r, false, digit_budget).log_e);

  long double slope_raw = 0.0L;
  for (std::size_t i = 0; i + 1 < logs.size(); ++i)
    slope_raw = std::max(slope_raw,
                         static_cast<long double>(logs[i + 1]) - logs[i]);
  auto ceil_tenth = [](long double v) {
    return static_cast<double>(std::ceil(v * 10.0L) / 10.0L);
  };
  corollary_fit fit;
  fit.fitted_slope = ceil_tenth(slope_raw);
  fit.fitted_intercept =
      ceil_tenth(static_cast<long double>(logs[0]) - fit.fitted_slope);
  // nudge the intercept up if rounding ever left a value uncovered
  for (bool covered = false; !covered;) {
    covered = true;
    for (std::size_t i = 0; i < logs.size(); ++i) {
      const double r = static_cast<double>(i + 1);
      if (logs[i] > fit.fitted_intercept + fit.fitted_slope * r) {
        fit.fitted_intercept += 0.1;
        covered = false;
        break;
      }
    }
  }
  fit.deviates_from_published =
      std::abs(fit.fitted_slope - fit.published_slope) > 0.05;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    const std::int64_t r = static_cast<std::int64_t>(i + 1);
    fit.rows.push_back({r, logs[i],
                        fit.fitted_intercept + fit.fitted_slope * r,
                        fit.published_intercept + fit.published_slope * r});
  }
  return fit;
}

struct bound_report {
  std::int64_t r = 0;
  bound_value a2_value;
  bound_value a3_recursive;
  bound_value a5_recursive;
  bound_value theorem_general;
  bound_value theorem_special;
  bound_value remark_direct;
  corollary_fit corollary;
};

inline bound_report make_bound_report(std::int64_t r,
                                      std::int64_t corollary_r_max = 10,
                                      std::uint64_t digit_budget = default_digit_budget) {
  detail::require_rank(r);
  bound_report rep;
  rep.r = r;
  rep.a2_value = a2(r);
  rep.a3_recursive = a_recursive(3, r, digit_budget);
  rep.a5_recursive = a_recursive(5, r, digit_budget);
  rep.theorem_general = theorem_bound(r, false, digit_budget);
  rep.theorem_special = theorem_bound(r, true, digit_budget);
  rep.remark_direct = remark_direct_bound(r, digit_budget);
  rep.corollary = fitted_corollary_constants(corollary_r_max, digit_budget);
  return rep;
}

}  // namespace sdioph
