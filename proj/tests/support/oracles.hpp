#pragma once

// Hand-rolled brute-force oracles for chain posets 0 < 1 < ... < n-1. They
// work on plain index maps and never call into the library, so they can
// cross-check it.

#include <cstddef>
#include <vector>

#include "catlaw/fincat.hpp"

namespace oracle {

using Map = std::vector<std::size_t>;

inline std::vector<Map> all_maps(std::size_t n) {
  std::vector<Map> out;
  Map m(n, 0);
  if (n == 0) return {m};
  while (true) {
    out.push_back(m);
    std::size_t i = 0;
    while (i < n && ++m[i] == n) m[i++] = 0;
    if (i == n) return out;
  }
}

inline bool monotone(const Map& m) {
  for (std::size_t x = 0; x + 1 < m.size(); ++x)
    if (m[x] > m[x + 1]) return false;
  return true;
}

inline bool idempotent(const Map& m) {
  for (std::size_t x = 0; x < m.size(); ++x)
    if (m[m[x]] != m[x]) return false;
  return true;
}

inline bool inflationary(const Map& m) {
  for (std::size_t x = 0; x < m.size(); ++x)
    if (m[x] < x) return false;
  return true;
}

inline bool deflationary(const Map& m) {
  for (std::size_t x = 0; x < m.size(); ++x)
    if (m[x] > x) return false;
  return true;
}

inline std::vector<Map> closures_on_chain(std::size_t n) {
  std::vector<Map> out;
  for (const auto& m : all_maps(n))
    if (monotone(m) && inflationary(m) && idempotent(m)) out.push_back(m);
  return out;
}

inline std::vector<Map> interiors_on_chain(std::size_t n) {
  std::vector<Map> out;
  for (const auto& m : all_maps(n))
    if (monotone(m) && deflationary(m) && idempotent(m)) out.push_back(m);
  return out;
}

// a(b(x)) <= b(a(x)) everywhere
inline bool below(const Map& a, const Map& b) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[b[x]] > b[a[x]]) return false;
  return true;
}

inline std::size_t fixed_points(const Map& m) {
  std::size_t n = 0;
  for (std::size_t x = 0; x < m.size(); ++x) n += m[x] == x ? 1 : 0;
  return n;
}

inline Map object_map(const catlaw::Functor& f) {
  Map out;
  for (catlaw::Obj x : f.source().objects()) out.push_back(catlaw::ix(f(x)));
  return out;
}

}  // namespace oracle
