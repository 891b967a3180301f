#pragma once

#include <cmath>
#include <string>

#include <json.hpp>

#include "bounds.hpp"
#include "sunit_solver.hpp"
#include "sunit_system.hpp"
#include "tuple_search.hpp"

namespace sdioph {

// Insertion-ordered JSON keeps every emitted record byte-stable.
using ojson = nlohmann::ordered_json;

// Logs are accurate to 1e-6; rounding to that resolution before printing
// keeps the serialized form short and reproducible.
inline double rounded_log(double v) { return std::round(v * 1e6) / 1e6; }

inline ojson primes_json(const prime_set& s) {
  ojson arr = ojson::array();
  for (std::uint64_t p : s.primes()) arr.push_back(p);
  return arr;
}

inline ojson tuple_record(const prime_set& s, unsigned m, std::uint64_t n_max,
                          const tuple_t& t) {
  ojson rec;
  rec["s"] = primes_json(s);
  rec["m"] = m;
  rec["n_max"] = n_max;
  rec["tuple"] = t;
  return rec;
}

inline ojson exponents_json(const exponent_vec& e) {
  ojson arr = ojson::array();
  for (std::int64_t v : e) arr.push_back(v);
  return arr;
}

inline ojson sextuple_record(const sextuple& sx) {
  ojson rec;
  ojson values = ojson::array();
  for (const mpz_class& v : sx.s) values.push_back(v.get_str());
  rec["s"] = values;
  if (sx.certificates) {
    ojson certs = ojson::array();
    for (const exponent_vec& e : *sx.certificates) certs.push_back(exponents_json(e));
    rec["certificates"] = certs;
  } else {
    rec["certificates"] = nullptr;
  }
  return rec;
}

inline std::string classification_name(degeneracy_class c) {
  switch (c) {
    case degeneracy_class::non_degenerate: return "non_degenerate";
    case degeneracy_class::three_term_case_1: return "three_term_case_1";
    case degeneracy_class::three_term_case_2: return "three_term_case_2";
    case degeneracy_class::three_term_case_3: return "three_term_case_3";
    case degeneracy_class::three_term_case_4: return "three_term_case_4";
    case degeneracy_class::other: return "other";
  }
  return "other";
}

inline ojson sunit_value_json(const sunit_value& v) {
  ojson rec;
  rec["sign"] = v.sign;
  rec["exp"] = exponents_json(v.exp);
  return rec;
}

inline ojson solution_record_json(const solution_record& rec) {
  ojson out;
  ojson xs = ojson::array();
  for (const sunit_value& v : rec.x) xs.push_back(sunit_value_json(v));
  out["x"] = xs;
  out["degenerate"] = rec.degenerate;
  return out;
}

inline ojson projective_record_json(const projective_solution& sol) {
  ojson out;
  ojson coords = ojson::array();
  for (const mpq_class& c : sol.coordinates) coords.push_back(c.get_str());
  out["coords"] = coords;
  out["degenerate"] = sol.degenerate;
  return out;
}

inline ojson catalan_record_json(std::uint64_t p, const catalan_solution& sol) {
  ojson rec;
  rec["p"] = p;
  rec["x"] = sol.x;
  rec["y"] = sol.y;
  rec["sign"] = sol.sign;
  return rec;
}

inline ojson power_sum_record_json(std::uint64_t p, const power_sum_solution& sol) {
  ojson rec;
  rec["p"] = p;
  ojson exps = ojson::array();
  for (std::int64_t e : sol.exp) exps.push_back(e);
  rec["exp"] = exps;
  return rec;
}

inline ojson bound_value_json(const bound_value& v) {
  ojson rec;
  if (v.exact)
    rec["exact"] = v.exact->get_str();
  else
    rec["exact"] = nullptr;
  rec["log_e"] = rounded_log(v.log_e);
  return rec;
}

inline ojson corollary_fit_json(const corollary_fit& fit) {
  ojson rec;
  rec["fitted_intercept"] = fit.fitted_intercept;
  rec["fitted_slope"] = fit.fitted_slope;
  rec["published_intercept"] = fit.published_intercept;
  rec["published_slope"] = fit.published_slope;
  rec["deviates_from_published"] = fit.deviates_from_published;
  ojson rows = ojson::array();
  for (const corollary_row& row : fit.rows) {
    ojson r;
    r["r"] = row.r;
    r["log_theorem"] = rounded_log(row.log_theorem);
    r["fitted"] = rounded_log(row.fitted);
    r["published"] = rounded_log(row.published);
    rows.push_back(r);
  }
  rec["rows"] = rows;
  return rec;
}

inline ojson bound_report_json(const bound_report& rep, bool special) {
  ojson rec;
  rec["r"] = rep.r;
  rec["special"] = special;
  rec["a2"] = bound_value_json(rep.a2_value);
  rec["a3_recursive"] = bound_value_json(rep.a3_recursive);
  rec["a5_recursive"] = bound_value_json(rep.a5_recursive);
  rec["theorem_general"] = bound_value_json(rep.theorem_general);
  rec["theorem_special"] = bound_value_json(rep.theorem_special);
  rec["corollary_exponent_pair"] = corollary_fit_json(rep.corollary);
  ojson direct;
  direct["log_e"] = rounded_log(rep.remark_direct.log_e);
  direct["published_intercept"] = published_remark_intercept;
  direct["published_slope"] = published_remark_slope;
  direct["published_log"] =
      rounded_log(published_remark_intercept +
                  published_remark_slope * static_cast<double>(rep.r));
  rec["direct_bound_comparison"] = direct;
  return rec;
}

}  // namespace sdioph
