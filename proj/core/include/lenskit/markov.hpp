#pragma once

#include "lenskit/bigint.hpp"

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace lenskit {

// solution of p1^2 + p2^2 + p3^2 = 3 p1 p2 p3, stored sorted
class MarkovTriple {
 public:
  MarkovTriple(Int a, Int b, Int c);  // sorts; throws Invariant if not Markov
  static MarkovTriple root() { return MarkovTriple(1, 1, 1); }

  const Int& p1() const { return p_[0]; }
  const Int& p2() const { return p_[1]; }
  const Int& p3() const { return p_[2]; }
  const Int& operator[](std::size_t i) const { return p_[i]; }
  const std::array<Int, 3>& values() const { return p_; }
  std::string str() const;

  friend bool operator==(const MarkovTriple&, const MarkovTriple&) = default;
  friend std::strong_ordering operator<=>(const MarkovTriple& a, const MarkovTriple& b);

 private:
  std::array<Int, 3> p_;
};

bool is_markov(const Int& p1, const Int& p2, const Int& p3);

enum class Mutation { Left, Right };
MarkovTriple mutate(const MarkovTriple& t, Mutation which);

struct TreeEntry {
  MarkovTriple triple;
  std::string word;  // over {L, R}, root first
  unsigned depth;
};

std::vector<TreeEntry> enumerate_tree(unsigned depth);

// word w with replay(w) == t; the stem steps read as L
std::string mutation_path(const MarkovTriple& t);
MarkovTriple replay(const std::string& word);

struct QTriple {
  Int q1, q2, q3;
  Int bezout_x, bezout_y;
  friend bool operator==(const QTriple&, const QTriple&) = default;
};

QTriple derive_q(const MarkovTriple& t);

struct QReport {
  bool c1 = false, c2 = false, c4 = false;
  bool c3_some = false;  // for each i, some ordering of {j, k} works
  bool c3_all = false;   // for each i, both orderings work
  bool all() const { return c1 && c2 && c3_some && c4; }
};

QReport verify_q(const MarkovTriple& t, const QTriple& q);

}  // namespace lenskit
