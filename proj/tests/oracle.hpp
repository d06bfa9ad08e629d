#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library: interpretations are plain nested vectors built by recursion.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Table = std::vector<std::uint32_t>;
using Interp = std::vector<Table>;  // one table per signal

inline void all_functions_rec(std::size_t n, Table& cur, std::vector<Table>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    cur.push_back(v);
    all_functions_rec(n, cur, out);
    cur.pop_back();
  }
}

inline bool is_bijective(const Table& t) {
  std::set<std::uint32_t> seen(t.begin(), t.end());
  return seen.size() == t.size();
}

inline bool is_constant(const Table& t) {
  return std::all_of(t.begin(), t.end(), [&](auto v) { return v == t.front(); });
}

/// Per-signal operator tables of a named family, sorted lexicographically.
inline std::vector<Table> family_tables(const std::string& family, std::size_t n) {
  std::vector<Table> all;
  Table cur;
  all_functions_rec(n, cur, all);
  std::vector<Table> out;
  for (auto& t : all) {
    if (family == "all-functions" || (family == "permutations" && is_bijective(t)) ||
        (family == "constants" && is_constant(t))) {
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void product_rec(const std::vector<Table>& ops, std::size_t signals, Interp& cur,
                        std::vector<Interp>& out) {
  if (cur.size() == signals) {
    out.push_back(cur);
    return;
  }
  for (const auto& op : ops) {
    cur.push_back(op);
    product_rec(ops, signals, cur, out);
    cur.pop_back();
  }
}

/// Every interpretation, ordered by concatenated tables.
inline std::vector<Interp> interpretations(const std::string& family, std::size_t n,
                                           std::size_t signals) {
  std::vector<Interp> out;
  Interp cur;
  product_rec(family_tables(family, n), signals, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::uint32_t> filter(const std::vector<Interp>& members,
                                         const std::vector<std::uint32_t>& candidates,
                                         std::uint32_t pre, std::uint32_t signal,
                                         std::uint32_t post) {
  std::vector<std::uint32_t> out;
  for (auto id : candidates) {
    if (members[id][signal][pre] == post) out.push_back(id);
  }
  return out;
}

inline std::vector<std::uint32_t> images(const std::vector<Interp>& members,
                                         const std::vector<std::uint32_t>& candidates,
                                         std::uint32_t signal, std::uint32_t state) {
  std::set<std::uint32_t> seen;
  for (auto id : candidates) seen.insert(members[id][signal][state]);
  return {seen.begin(), seen.end()};
}

}  // namespace oracle
