#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "smooth.hpp"

namespace sdioph {

// Candidate m-tuple: strictly increasing positive integers.
using tuple_t = std::vector<std::uint64_t>;

// Default ceiling for the pair-scan bound N^2 and for the brute-force
// candidate count C(N,m); overridable per call (the CLI wires SDIOPH_BUDGET
// through here).
inline constexpr std::uint64_t default_search_budget = 10'000'000'000ull;

inline void validate_tuple(const tuple_t& t) {
  if (t.size() < 2) fail(errc::invalid_argument, "tuple needs at least 2 elements");
  if (t.front() == 0) fail(errc::invalid_argument, "tuple elements must be >= 1");
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] >= t[i + 1])
      fail(errc::invalid_argument, "tuple must be strictly increasing");
  }
}

// True iff a_i * a_j + 1 is S-smooth for every pair i < j.
inline bool is_s_diophantine(const tuple_t& t, const prime_set& s) {
  validate_tuple(t);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      mpz_class shifted = mpz_class(t[i]) * t[j] + 1;
      if (!is_smooth(shifted, s)) return false;
    }
  }
  return true;
}

// Vertices 1..n_max, one edge {a,b} per pair with a*b+1 S-smooth.
struct compatibility_graph {
  std::uint64_t n_max = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;     // sorted, a < b
  std::map<std::uint64_t, std::vector<std::uint64_t>> adjacency;  // sorted lists
};

// Smooth-first edge construction: enumerate the S-smooth values
// v <= N^2 + 1 and factor v - 1 into divisor pairs a < b <= N, instead of
// testing all N^2/2 pairs. The smooth list is split into `partitions`
// contiguous chunks whose edge sets are merged; the union is independent of
// the split, so the result does not depend on the partition count.
inline compatibility_graph build_edges(const prime_set& s, std::uint64_t n_max,
                                       unsigned partitions = 1,
                                       std::uint64_t budget = default_search_budget) {
  if (n_max < 2) fail(errc::invalid_argument, "build_edges requires N >= 2");
  if (partitions < 1) fail(errc::invalid_argument, "partitions must be >= 1");
  mpz_class limit = mpz_class(n_max) * n_max + 1;
  if (limit - 1 > budget)
    fail(errc::budget_exceeded,
         "pair-scan bound N^2 = " + mpz_class(limit - 1).get_str() +
             " exceeds the budget " + std::to_string(budget));

  const std::vector<mpz_class> smooth = enumerate_smooth(s, limit);

  using edge_list = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  auto scan_chunk = [&smooth, n_max](std::size_t lo, std::size_t hi) {
    edge_list found;
    for (std::size_t k = lo; k < hi; ++k) {
      if (smooth[k] < 3) continue;
      const std::uint64_t m = static_cast<std::uint64_t>(smooth[k].get_ui()) - 1;
      const std::uint64_t a_min = (m + n_max - 1) / n_max;
      for (std::uint64_t a = std::max<std::uint64_t>(1, a_min);
           a <= (m - 1) / a; ++a) {
        if (m % a != 0) continue;
        const std::uint64_t b = m / a;
        if (b <= n_max) found.emplace_back(a, b);
      }
    }
    return found;
  };

  compatibility_graph g;
  g.n_max = n_max;
  const std::size_t total = smooth.size();
  const std::size_t chunks = std::min<std::size_t>(partitions, std::max<std::size_t>(total, 1));
  if (chunks <= 1) {
    g.edges = scan_chunk(0, total);
  } else {
    std::vector<std::future<edge_list>> parts;
    parts.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::size_t lo = total * c / chunks;
      const std::size_t hi = total * (c + 1) / chunks;
      parts.push_back(std::async(std::launch::async, scan_chunk, lo, hi));
    }
    for (auto& part : parts) {
      edge_list es = part.get();
      g.edges.insert(g.edges.end(), es.begin(), es.end());
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (const auto& [a, b] : g.edges) {
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  }
  for (auto& [v, nbrs] : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

struct search_config {
  prime_set s;
  std::uint64_t n_max = 0;
  unsigned m = 0;
  unsigned partitions = 1;
  std::uint64_t budget = default_search_budget;
};

inline void validate_config(const search_config& cfg) {
  if (cfg.m < 2 || cfg.m > 6)
    fail(errc::invalid_argument, "tuple size must be between 2 and 6");
  if (cfg.n_max < cfg.m)
    fail(errc::invalid_argument, "bound N must be at least the tuple size");
  if (cfg.partitions < 1)
    fail(errc::invalid_argument, "partitions must be >= 1");
}

// All S-Diophantine m-tuples with max element <= N, in lexicographic order,
// found by extending cliques of the compatibility graph in ascending vertex
// order (no duplicates, deterministic output).
inline std::vector<tuple_t> find_tuples(const search_config& cfg) {
  validate_config(cfg);
  const compatibility_graph g =
      build_edges(cfg.s, cfg.n_max, cfg.partitions, cfg.budget);
  std::vector<tuple_t> out;
  if (cfg.m == 2) {
    out.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) out.push_back({a, b});
    return out;
  }
  tuple_t current;
  auto extend = [&](auto&& self, const std::vector<std::uint64_t>& cands) -> void {
    if (current.size() == cfg.m) {
      out.push_back(current);
      return;
    }
    for (std::uint64_t v : cands) {
      const auto& nbrs = g.adjacency.at(v);
      std::vector<std::uint64_t> next;
      std::set_intersection(
          std::upper_bound(cands.begin(), cands.end(), v), cands.end(),
          std::upper_bound(nbrs.begin(), nbrs.end(), v), nbrs.end(),
          std::back_inserter(next));
      current.push_back(v);
      if (current.size() + next.size() >= cfg.m) self(self, next);
      current.pop_back();
    }
  };
  for (const auto& [v, nbrs] : g.adjacency) {
    current.assign(1, v);
    std::vector<std::uint64_t> cands(
        std::upper_bound(nbrs.begin(), nbrs.end(), v), nbrs.end());
    if (1 + cands.size() >= cfg.m) extend(extend, cands);
  }
  return out;
}

// Independent oracle with the same contract as find_tuples: walks every
// m-subset of [1, N] in lexicographic order and keeps those passing the
// pairwise smoothness test directly. No smooth enumeration, no divisor
// factoring, no graph. Subsets whose prefix already fails a pair are
// skipped, which discards only subsets that cannot satisfy the definition.
inline std::vector<tuple_t> brute_force_tuples(const search_config& cfg) {
  validate_config(cfg);
  mpz_class candidates;
  mpz_bin_uiui(candidates.get_mpz_t(), cfg.n_max, cfg.m);
  if (candidates > cfg.budget)
    fail(errc::budget_exceeded,
         "C(N,m) = " + candidates.get_str() + " candidate subsets exceed the budget " +
             std::to_string(cfg.budget));
  std::vector<tuple_t> out;
  tuple_t current;
  auto extend = [&](auto&& self, std::uint64_t from) -> void {
    if (current.size() == cfg.m) {
      out.push_back(current);
      return;
    }
    const std::uint64_t slack = cfg.m - current.size() - 1;
    for (std::uint64_t v = from; v + slack <= cfg.n_max; ++v) {
      bool compatible = true;
      for (std::uint64_t u : current) {
        if (!is_smooth(mpz_class(u) * v + 1, cfg.s)) {
          compatible = false;
          break;
        }
      }
      if (!compatible) continue;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  extend(extend, 1);
  return out;
}

}  // namespace sdioph
