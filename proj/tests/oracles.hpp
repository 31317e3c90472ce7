#pragma once
// Brute-force reference implementations. Nothing here calls the routine it checks.
#include "lenskit/lenskit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using lenskit::Int;

// plain rationals in the window, with their Farey adjacency read off as |ad - bc| = 1
struct Frac {
  long n, d;
  bool operator<(const Frac& o) const { return n * o.d < o.n * d; }
  bool operator==(const Frac& o) const { return n == o.n && d == o.d; }
};

inline long igcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::vector<Frac> window(long lo, long hi, long max_den) {
  std::vector<Frac> out;
  for (long d = 1; d <= max_den; ++d)
    for (long n = lo * d; n <= hi * d; ++n)
      if (igcd(n, d) == 1) out.push_back({n, d});
  std::sort(out.begin(), out.end());
  return out;
}

inline bool adjacent(const Frac& a, const Frac& b) {
  long m = a.n * b.d - a.d * b.n;
  return m == 1 || m == -1;
}

// shortest increasing Farey-edge walk from a to b inside the window, by dynamic programming
// over the sorted vertex list; returns the number of edges and the path if it is unique
struct Shortest {
  long edges = -1;
  std::optional<std::vector<Frac>> unique_path;
};

inline Shortest shortest(const std::vector<Frac>& verts, std::size_t from, std::size_t to) {
  const long inf = 1L << 40;
  std::vector<long> dist(verts.size(), inf), count(verts.size(), 0);
  std::vector<std::size_t> prev(verts.size(), 0);
  dist[from] = 0;
  count[from] = 1;
  for (std::size_t j = from + 1; j <= to; ++j)
    for (std::size_t i = from; i < j; ++i) {
      if (dist[i] == inf || !adjacent(verts[i], verts[j])) continue;
      if (dist[i] + 1 < dist[j]) {
        dist[j] = dist[i] + 1;
        count[j] = count[i];
        prev[j] = i;
      } else if (dist[i] + 1 == dist[j]) {
        count[j] += count[i];
      }
    }
  Shortest s;
  if (dist[to] == inf) return s;
  s.edges = dist[to];
  if (count[to] == 1) {
    std::vector<Frac> p{verts[to]};
    for (std::size_t k = to; k != from;) {
      k = prev[k];
      p.push_back(verts[k]);
    }
    std::reverse(p.begin(), p.end());
    s.unique_path = p;
  }
  return s;
}

// Markov triples with largest entry <= bound, by direct search
inline std::set<std::array<long, 3>> markov_upto(long bound) {
  std::set<std::array<long, 3>> out;
  for (long c = 1; c <= bound; ++c)
    for (long b = 1; b <= c; ++b) {
      // a^2 - 3bc a + (b^2 + c^2) = 0
      long B = 3 * b * c, C = b * b + c * c;
      long disc = B * B - 4 * C;
      if (disc < 0) continue;
      long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(disc))));
      for (long rr = std::max(0L, r - 2); rr <= r + 2; ++rr)
        if (rr * rr == disc && (B - rr) % 2 == 0) {
          long a = (B - rr) / 2;
          if (a >= 1 && a <= b) out.insert({a, b, c});
        }
    }
  return out;
}

// L(n, s1) vs L(n, s2), orientation preserving, by trying every unit
inline bool lens_equiv(long n, long s1, long s2, bool allow_mirror) {
  auto m = [n](long v) { return ((v % n) + n) % n; };
  if (n == 1) return true;
  for (long t = 0; t < n; ++t) {
    if (m(s1 * t) != 1) continue;  // t = s1^{-1}
    if (m(s2 - s1) == 0 || m(s2 - t) == 0) return true;
    if (allow_mirror && (m(s2 + s1) == 0 || m(s2 + t) == 0)) return true;
  }
  return false;
}

}  // namespace oracle
