#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "thompson/cantor.hpp"

namespace oracle {

/// Sum of 2^-depth over bricks, as numerator over 2^60. Requires depth <= 60.
inline std::uint64_t measure_sum_2_60(const std::vector<thompson::cantor::Brick>& bricks) {
  std::uint64_t total = 0;
  for (const auto& b : bricks)
    total += std::uint64_t{1} << (60 - b.depth());
  return total;
}

inline bool words_disjoint(const std::string& a, const std::string& b) {
  auto n = std::min(a.size(), b.size());
  return a.compare(0, n, b, 0, n) != 0;
}

/// Pairwise disjointness by comparing raw bit strings coordinate by coordinate.
inline bool bricks_disjoint(const thompson::cantor::Brick& a, const thompson::cantor::Brick& b) {
  for (std::size_t j = 0; j < a.dim(); ++j)
    if (words_disjoint(a[j].bits(), b[j].bits()))
      return true;
  return false;
}

/// First n bits of pre·period^∞ written out directly.
inline std::string expand(const std::string& pre, const std::string& period, std::size_t n) {
  std::string s = pre;
  while (s.size() < n)
    s += period;
  return s.substr(0, n);
}

/// Number of binary necklaces of length p with trivial stabilizer, by the
/// Möbius sum (1/p) Σ_{d|p} μ(d) 2^{p/d}.
inline std::uint64_t aperiodic_necklaces(unsigned p) {
  auto mobius = [](unsigned n) {
    int mu = 1;
    for (unsigned f = 2; f * f <= n; ++f) {
      if (n % f == 0) {
        n /= f;
        if (n % f == 0)
          return 0;
        mu = -mu;
      }
    }
    if (n > 1)
      mu = -mu;
    return mu;
  };
  std::int64_t sum = 0;
  for (unsigned d = 1; d <= p; ++d)
    if (p % d == 0)
      sum += mobius(d) * (std::int64_t{1} << (p / d));
  return static_cast<std::uint64_t>(sum / p);
}

/// Least rotations of the strings of length p whose minimal period is p,
/// by listing all 2^p strings.
inline std::set<std::string> brute_force_necklaces(unsigned p) {
  std::set<std::string> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << p); ++v) {
    std::string s;
    for (unsigned i = 0; i < p; ++i)
      s += ((v >> (p - 1 - i)) & 1) ? '1' : '0';
    bool primitive = true;
    for (unsigned d = 1; d < p && primitive; ++d)
      if (p % d == 0 && s.substr(d) + s.substr(0, d) == s)
        primitive = false;
    if (!primitive)
      continue;
    std::string least = s;
    for (unsigned r = 1; r < p; ++r)
      least = std::min(least, s.substr(r) + s.substr(0, r));
    out.insert(least);
  }
  return out;
}

} // namespace oracle
