#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond BinaryWord and deliberately take the slowest obvious route.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pnw/word.hpp"

namespace pnw::oracle {

inline int ones_in(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '1')); }

/// F(w, i) by enumerating every factor.
inline std::vector<int> max_ones(const std::string& w) {
  std::vector<int> f(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 1; i + len <= w.size(); ++len) {
      f[len] = std::max(f[len], ones_in(w.substr(i, len)));
    }
  }
  return f;
}

inline std::vector<int> prefix_weights(const std::string& w) {
  std::vector<int> p(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) p[i + 1] = ones_in(w.substr(0, i + 1));
  return p;
}

/// Definition: F(w, i) = P(w, i) for all i.
inline bool is_prefix_normal(const std::string& w) { return max_ones(w) == prefix_weights(w); }

inline bool has_factor_with(const std::string& w, int ones, int zeros) {
  const std::size_t len = static_cast<std::size_t>(ones + zeros);
  if (len == 0) return true;
  for (std::size_t i = 0; i + len <= w.size(); ++i) {
    if (ones_in(w.substr(i, len)) == ones) return true;
  }
  return false;
}

inline std::string word_of(std::uint64_t mask, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = ((mask >> (n - 1 - i)) & 1U) ? '1' : '0';
  return s;
}

inline std::vector<std::string> all_words(int n) {
  std::vector<std::string> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(word_of(m, n));
  return out;
}

inline std::set<std::string> prefix_normal_set(int n, int weight = -1) {
  std::set<std::string> out;
  for (const auto& w : all_words(n)) {
    if ((weight < 0 || ones_in(w) == weight) && is_prefix_normal(w)) out.insert(w);
  }
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Critical prefix length by its definition, cr(1^n) = n.
inline int cr(const std::string& w) {
  std::size_t s = 0;
  while (s < w.size() && w[s] == '1') ++s;
  if (s == w.size()) return static_cast<int>(w.size());
  std::size_t t = 0;
  while (s + t < w.size() && w[s + t] == '0') ++t;
  return static_cast<int>(s + t);
}

inline std::string random_word(std::mt19937_64& rng, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (auto& c : s) c = (rng() & 1U) ? '1' : '0';
  return s;
}

/// Union of the first-01 orbits of randomly chosen seeds, optionally with one
/// member dropped afterwards (which may or may not break closure).
inline std::set<std::string> random_orbit_subset(std::mt19937_64& rng, const std::vector<std::string>& universe,
                                                  bool drop_one) {
  std::set<std::string> out;
  for (const auto& seed : universe) {
    if (rng() % 4 != 0) continue;
    std::string w = seed;
    while (out.insert(w).second) {
      const auto pos = w.find("01");
      if (pos == std::string::npos) break;
      std::swap(w[pos], w[pos + 1]);
    }
  }
  if (drop_one && !out.empty()) {
    auto it = out.begin();
    std::advance(it, static_cast<long>(rng() % out.size()));
    out.erase(it);
  }
  return out;
}

}  // namespace pnw::oracle
