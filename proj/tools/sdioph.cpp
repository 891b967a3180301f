// Command-line front end: reproducible batch search, verification, bound
// reports, and equation solving with machine-readable output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/validation error,
// 3 budget exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdioph/sdioph.hpp"

namespace {

using sdioph::ojson;

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

sdioph::prime_set parse_primes(const std::string& csv) {
  std::vector<mpz_class> primes;
  for (const std::string& part : split_csv(csv)) {
    try {
      primes.emplace_back(part, 10);
    } catch (const std::invalid_argument&) {
      sdioph::fail(sdioph::errc::invalid_argument,
                   "cannot parse prime '" + part + "'");
    }
  }
  return sdioph::prime_set::of(primes);
}

std::vector<mpq_class> parse_rationals(const std::string& csv) {
  std::vector<mpq_class> out;
  for (const std::string& part : split_csv(csv)) {
    mpq_class q;
    if (q.set_str(part, 10) != 0)
      sdioph::fail(sdioph::errc::invalid_argument,
                   "cannot parse rational '" + part + "'");
    if (q.get_den() == 0)
      sdioph::fail(sdioph::errc::invalid_argument,
                   "zero denominator in '" + part + "'");
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

sdioph::tuple_t parse_tuple(const std::string& csv) {
  sdioph::tuple_t t;
  for (const std::string& part : split_csv(csv)) {
    try {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(part);
      t.push_back(std::stoull(part));
    } catch (const std::exception&) {
      sdioph::fail(sdioph::errc::invalid_argument,
                   "cannot parse tuple element '" + part + "'");
    }
  }
  return t;
}

std::vector<int> parse_signs(const std::string& csv) {
  std::vector<int> signs;
  for (const std::string& part : split_csv(csv)) {
    if (part == "+" || part == "+1")
      signs.push_back(+1);
    else if (part == "-" || part == "-1")
      signs.push_back(-1);
    else
      sdioph::fail(sdioph::errc::invalid_argument,
                   "sign pattern entries must be + or -, got '" + part + "'");
  }
  return signs;
}

std::uint64_t env_budget(std::uint64_t fallback) {
  const char* raw = std::getenv("SDIOPH_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(raw, &pos);
    if (pos != std::string(raw).size() || v == 0)
      throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    sdioph::fail(sdioph::errc::invalid_argument,
                 "SDIOPH_BUDGET must be a positive decimal integer");
  }
}

int emit(const std::string& buffer, const std::string& output_path) {
  if (output_path.empty()) {
    std::fwrite(buffer.data(), 1, buffer.size(), stdout);
    std::fflush(stdout);
    return exit_ok;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file " << output_path << "\n";
    return exit_usage;
  }
  file << buffer;
  return exit_ok;
}

// Optional JSON config file supplying the same keys as the flags;
// explicit flags win on conflict.
ojson load_config(const std::string& path) {
  if (path.empty()) return ojson::object();
  std::ifstream file(path);
  if (!file)
    sdioph::fail(sdioph::errc::invalid_argument,
                 "cannot open config file " + path);
  ojson cfg = ojson::parse(file, nullptr, false);
  if (cfg.is_discarded() || !cfg.is_object())
    sdioph::fail(sdioph::errc::invalid_argument,
                 "config file " + path + " is not a JSON object");
  return cfg;
}

std::string join_list(const ojson& arr) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += ',';
    if (v.is_string())
      out += v.get<std::string>();
    else
      out += v.dump();
  }
  return out;
}

void overlay_string(const CLI::App* sub, const std::string& flag,
                    const ojson& cfg, const char* key, std::string& target) {
  if (sub->count(flag) > 0 || !cfg.contains(key)) return;
  const ojson& v = cfg.at(key);
  target = v.is_array() ? join_list(v) : (v.is_string() ? v.get<std::string>() : v.dump());
}

template <typename T>
void overlay_value(const CLI::App* sub, const std::string& flag,
                   const ojson& cfg, const char* key, T& target) {
  if (sub->count(flag) > 0 || !cfg.contains(key)) return;
  target = cfg.at(key).get<T>();
}

struct search_options {
  std::string primes;
  std::uint64_t n_max = 0;
  unsigned size = 0;
  unsigned partitions = 1;
  std::string format = "json-lines";
  std::string output;
  std::string config;
};

int run_search(const search_options& opt, std::uint64_t budget) {
  if (opt.primes.empty())
    sdioph::fail(sdioph::errc::invalid_argument, "--primes is required");
  if (opt.n_max == 0)
    sdioph::fail(sdioph::errc::invalid_argument, "--max is required");
  if (opt.size == 0)
    sdioph::fail(sdioph::errc::invalid_argument, "--size is required");
  const sdioph::prime_set s = parse_primes(opt.primes);
  sdioph::search_config cfg{s, opt.n_max, opt.size, opt.partitions, budget};
  const std::vector<sdioph::tuple_t> tuples = sdioph::find_tuples(cfg);
  std::string out;
  if (opt.format == "csv") {
    out += "s,m,n_max,tuple\n";
    for (const sdioph::tuple_t& t : tuples) {
      std::string ps, ts;
      for (std::uint64_t p : s.primes()) ps += (ps.empty() ? "" : " ") + std::to_string(p);
      for (std::uint64_t e : t) ts += (ts.empty() ? "" : " ") + std::to_string(e);
      out += ps + ',' + std::to_string(opt.size) + ',' + std::to_string(opt.n_max) +
             ',' + ts + '\n';
    }
  } else {
    for (const sdioph::tuple_t& t : tuples)
      out += sdioph::tuple_record(s, opt.size, opt.n_max, t).dump() + '\n';
  }
  return emit(out, opt.output);
}

struct verify_options {
  std::string tuple;
  std::string primes;
  std::string input;
  std::string output;
};

ojson annotate_record(const sdioph::tuple_t& t, const sdioph::prime_set& s) {
  ojson rec;
  rec["tuple"] = t;
  rec["s"] = sdioph::primes_json(s);
  const bool diophantine = sdioph::is_s_diophantine(t, s);
  rec["s_diophantine"] = diophantine;
  const sdioph::sextuple sx = sdioph::sextuple_of(t, s);
  rec["sextuple"] = sdioph::sextuple_record(sx);
  const bool system = sdioph::check_system(sx);
  rec["system"] = system;
  const std::optional<mpz_class> product = sdioph::check_product_identities(sx);
  rec["product"] = product ? ojson(product->get_str()) : ojson(nullptr);
  rec["classification"] =
      system ? sdioph::classification_name(sdioph::classify_degenerate(sx))
             : "unclassified";
  const std::optional<sdioph::quadruple> recovered = sdioph::recover_quadruple(sx);
  bool round_trip = false;
  if (recovered) {
    ojson arr = ojson::array();
    round_trip = true;
    for (std::size_t i = 0; i < 4; ++i) {
      arr.push_back((*recovered)[i].get_str());
      round_trip = round_trip && (*recovered)[i] == mpz_class(t[i]);
    }
    rec["recovered"] = arr;
  } else {
    rec["recovered"] = nullptr;
  }
  rec["round_trip"] = round_trip;
  rec["verified"] = diophantine && system && round_trip;
  return rec;
}

int run_verify(const verify_options& opt) {
  std::string out;
  bool all_verified = true;

  auto handle_line = [&](const std::string& line) {
    if (line.empty()) return;
    ojson parsed = ojson::parse(line, nullptr, false);
    ojson rec;
    if (parsed.is_discarded() || !parsed.is_object() ||
        !parsed.contains("tuple") || !parsed.contains("s")) {
      rec["error"] = "record must be a JSON object with 'tuple' and 's'";
      rec["raw"] = line;
      all_verified = false;
    } else {
      try {
        sdioph::tuple_t t = parsed.at("tuple").get<sdioph::tuple_t>();
        std::vector<mpz_class> raw;
        for (const auto& v : parsed.at("s"))
          raw.emplace_back(v.dump(), 10);
        const sdioph::prime_set s = sdioph::prime_set::of(raw);
        sdioph::validate_tuple(t);
        if (t.size() != 4)
          sdioph::fail(sdioph::errc::not_a_quadruple, "tuple must have 4 elements");
        rec = annotate_record(t, s);
        if (!rec["verified"].get<bool>()) all_verified = false;
      } catch (const std::exception& e) {
        rec["error"] = e.what();
        rec["raw"] = line;
        all_verified = false;
      }
    }
    out += rec.dump() + '\n';
  };

  if (!opt.tuple.empty()) {
    if (opt.primes.empty())
      sdioph::fail(sdioph::errc::invalid_argument,
                   "--primes is required with --tuple");
    const sdioph::tuple_t t = parse_tuple(opt.tuple);
    const sdioph::prime_set s = parse_primes(opt.primes);
    ojson rec;
    rec["tuple"] = ojson::array();
    for (std::uint64_t v : t) rec["tuple"].push_back(v);
    rec["s"] = ojson::array();
    for (std::uint64_t p : s.primes()) rec["s"].push_back(p);
    handle_line(rec.dump());
  } else {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!opt.input.empty() && opt.input != "-") {
      file.open(opt.input);
      if (!file)
        sdioph::fail(sdioph::errc::invalid_argument,
                     "cannot open input file " + opt.input);
      in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) handle_line(line);
  }

  int rc = emit(out, opt.output);
  if (rc != exit_ok) return rc;
  return all_verified ? exit_ok : exit_verification;
}

struct bounds_options {
  std::int64_t rank = 0;
  bool special = false;
  std::int64_t r_max = 10;
  std::uint64_t digit_budget = sdioph::default_digit_budget;
  std::string output;
};

int run_bounds(const bounds_options& opt) {
  const sdioph::bound_report rep =
      sdioph::make_bound_report(opt.rank, opt.r_max, opt.digit_budget);
  return emit(sdioph::bound_report_json(rep, opt.special).dump() + "\n", opt.output);
}

struct solve_options {
  std::string mode = "affine";
  std::string primes;
  std::string coeffs;
  std::string signs;
  std::int64_t height = -1;
  std::uint64_t p = 0;
  std::uint64_t max_exp = 0;
  std::string output;
};

int run_solve(const solve_options& opt, std::uint64_t budget) {
  std::string out;
  if (opt.mode == "affine") {
    if (opt.primes.empty() || opt.coeffs.empty() || opt.height < 0)
      sdioph::fail(sdioph::errc::invalid_argument,
                   "affine mode needs --primes, --coeffs and --height");
    const sdioph::unit_equation eq =
        sdioph::make_unit_equation(parse_rationals(opt.coeffs), parse_primes(opt.primes));
    const sdioph::height_bound h{opt.height};
    const std::vector<sdioph::solution_record> sols =
        sdioph::solve_affine(eq, h, budget);
    std::uint64_t nondeg = 0;
    std::set<std::vector<sdioph::exponent_vec>> stripped;
    for (const sdioph::solution_record& rec : sols) {
      out += sdioph::solution_record_json(rec).dump() + '\n';
      if (!rec.degenerate) {
        ++nondeg;
        std::vector<sdioph::exponent_vec> key;
        for (const sdioph::sunit_value& u : rec.x) key.push_back(u.exp);
        stripped.insert(key);
      }
    }
    ojson summary;
    summary["total"] = sols.size();
    summary["nondegenerate"] = nondeg;
    summary["nondegenerate_sign_stripped"] = stripped.size();
    out += summary.dump() + '\n';
  } else if (opt.mode == "catalan") {
    if (opt.p == 0 || opt.max_exp == 0)
      sdioph::fail(sdioph::errc::invalid_argument,
                   "catalan mode needs --p and --max-exp");
    const std::vector<sdioph::catalan_solution> sols =
        sdioph::catalan_scan(opt.p, opt.max_exp);
    for (const sdioph::catalan_solution& sol : sols)
      out += sdioph::catalan_record_json(opt.p, sol).dump() + '\n';
    ojson summary;
    summary["total"] = sols.size();
    out += summary.dump() + '\n';
  } else if (opt.mode == "eq4") {
    if (opt.p == 0 || opt.max_exp == 0)
      sdioph::fail(sdioph::errc::invalid_argument,
                   "eq4 mode needs --p and --max-exp");
    const std::vector<sdioph::power_sum_solution> sols =
        sdioph::power_sum_scan(opt.p, opt.max_exp, budget);
    for (const sdioph::power_sum_solution& sol : sols)
      out += sdioph::power_sum_record_json(opt.p, sol).dump() + '\n';
    ojson summary;
    summary["total"] = sols.size();
    out += summary.dump() + '\n';
  } else if (opt.mode == "homogeneous") {
    if (opt.primes.empty() || opt.signs.empty() || opt.height < 0)
      sdioph::fail(sdioph::errc::invalid_argument,
                   "homogeneous mode needs --primes, --signs and --height");
    const std::vector<int> signs = parse_signs(opt.signs);
    const std::vector<sdioph::projective_solution> sols =
        sdioph::solve_homogeneous_projective(signs.size(), signs,
                                             parse_primes(opt.primes),
                                             {opt.height}, budget);
    std::uint64_t nondeg = 0;
    for (const sdioph::projective_solution& sol : sols) {
      out += sdioph::projective_record_json(sol).dump() + '\n';
      if (!sol.degenerate) ++nondeg;
    }
    ojson summary;
    summary["total"] = sols.size();
    summary["nondegenerate"] = nondeg;
    out += summary.dump() + '\n';
  } else {
    sdioph::fail(sdioph::errc::invalid_argument, "unknown mode " + opt.mode);
  }
  return emit(out, opt.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-Diophantine tuple and S-unit equation workbench"};
  app.require_subcommand(1);

  search_options search_opt;
  CLI::App* search = app.add_subcommand(
      "search", "Exhaustive search for S-Diophantine m-tuples up to a bound");
  search->add_option("--primes", search_opt.primes, "comma-separated primes, e.g. 2,3");
  search->add_option("--max", search_opt.n_max, "largest allowed tuple element N");
  search->add_option("--size", search_opt.size, "tuple size m (2..6)");
  search->add_option("--partitions", search_opt.partitions,
                     "parallel work split for edge building (default 1)");
  search->add_option("--format", search_opt.format, "json-lines (default) or csv")
      ->check(CLI::IsMember({"json-lines", "csv"}));
  search->add_option("--output", search_opt.output, "write results to a file");
  search->add_option("--config", search_opt.config,
                     "JSON config file supplying the same keys (flags win)");

  verify_options verify_opt;
  CLI::App* verify = app.add_subcommand(
      "verify", "Verify quadruples: smoothness, system, classification, recovery");
  verify->add_option("--tuple", verify_opt.tuple, "single quadruple a,b,c,d");
  verify->add_option("--primes", verify_opt.primes, "primes for the single-record form");
  verify->add_option("--input", verify_opt.input,
                     "JSON-lines input file ('-' or omitted: stdin)");
  verify->add_option("--output", verify_opt.output, "write annotated records to a file");

  bounds_options bounds_opt;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "Evaluate the solution-count bounds for a given rank");
  bounds->add_option("--rank", bounds_opt.rank, "rank r = |S| (>= 1)")->required();
  bounds->add_flag("--special", bounds_opt.special,
                   "mark the report with the special case (r = 2 or 2 not in S)");
  bounds->add_option("--r-max", bounds_opt.r_max,
                     "largest rank used for the affine fit (default 10)");
  bounds->add_option("--digit-budget", bounds_opt.digit_budget,
                     "max decimal digits kept for exact values");
  bounds->add_option("--output", bounds_opt.output, "write the report to a file");

  solve_options solve_opt;
  CLI::App* solve = app.add_subcommand(
      "solve", "Height-bounded S-unit equation solver and exponent scans");
  solve->add_option("--mode", solve_opt.mode,
                    "affine (default), homogeneous, catalan, or eq4")
      ->check(CLI::IsMember({"affine", "homogeneous", "catalan", "eq4"}));
  solve->add_option("--primes", solve_opt.primes, "comma-separated primes");
  solve->add_option("--coeffs", solve_opt.coeffs,
                    "comma-separated rational coefficients, e.g. 1,1 or 1/2,-3");
  solve->add_option("--signs", solve_opt.signs,
                    "sign pattern for homogeneous mode, e.g. +,-,-");
  solve->add_option("--height", solve_opt.height,
                    "exponent window H: the scan covers (2H+1)^(r(n-1)) grid "
                    "points times 2^(n-1) sign choices");
  solve->add_option("--p", solve_opt.p, "odd prime for catalan/eq4 modes");
  solve->add_option("--max-exp", solve_opt.max_exp, "exponent cap for catalan/eq4");
  solve->add_option("--output", solve_opt.output, "write results to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    std::uint64_t search_budget = env_budget(sdioph::default_search_budget);
    std::uint64_t grid_budget = env_budget(sdioph::default_grid_budget);
    if (search->parsed()) {
      const ojson cfg = load_config(search_opt.config);
      overlay_string(search, "--primes", cfg, "primes", search_opt.primes);
      overlay_value(search, "--max", cfg, "max", search_opt.n_max);
      overlay_value(search, "--size", cfg, "size", search_opt.size);
      overlay_value(search, "--partitions", cfg, "partitions", search_opt.partitions);
      overlay_string(search, "--format", cfg, "format", search_opt.format);
      overlay_string(search, "--output", cfg, "output", search_opt.output);
      return run_search(search_opt, search_budget);
    }
    if (verify->parsed()) return run_verify(verify_opt);
    if (bounds->parsed()) return run_bounds(bounds_opt);
    if (solve->parsed()) return run_solve(solve_opt, grid_budget);
  } catch (const sdioph::error& e) {
    std::cerr << "error (" << sdioph::errc_name(e.code()) << "): " << e.what()
              << "\n";
    return e.code() == sdioph::errc::budget_exceeded ? exit_budget : exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
