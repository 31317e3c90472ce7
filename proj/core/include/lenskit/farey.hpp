#pragma once

#include "lenskit/bigint.hpp"
#include "lenskit/mat2.hpp"

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lenskit {

// A point of the Farey circle: primitive (num, den) with den >= 0; infinity is (1, 0).
class Slope {
 public:
  Slope(Int num, Int den);  // reduces; throws DegenerateInput on (0, 0)
  explicit Slope(const Vec2& v) : Slope(v.x, v.y) {}

  static Slope infinity() { return Slope(1, 0); }
  static Slope integer(const Int& n) { return Slope(n, 1); }
  static Slope parse(std::string_view text);  // "a/b", "n", "inf"

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }
  Vec2 vec() const { return {num_, den_}; }
  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  // total order used for containers; equals the clockwise order starting at infinity
  friend std::strong_ordering operator<=>(const Slope& u, const Slope& v);

 private:
  Int num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

Int farey_mult(const Slope& u, const Slope& v);
bool farey_adjacent(const Slope& u, const Slope& v);
Slope farey_sum(const Slope& u, const Slope& v);
// raw-vector mediant, no renormalisation of the inputs; (0, 0) -> DegenerateInput
Slope farey_sum(const Vec2& u, const Vec2& v);

// Moebius action of a matrix on a Farey point
Slope act(const IntMat2& m, const Slope& s);

// x strictly inside the clockwise arc running from a to c (a == c: everything except a)
bool in_clockwise_arc(const Slope& x, const Slope& a, const Slope& c);

// ((s)^c, (s)^a): the clockwise and counterclockwise Stern-Brocot neighbours
std::pair<Slope, Slope> farey_neighbors(const Slope& s);

// unique minimal clockwise Farey path; throws Precondition if from == to
std::vector<Slope> minimal_path(const Slope& from, const Slope& to);

bool is_minimal(const std::vector<Slope>& slopes);

enum class EdgeSign { Plus, Minus, Ring };
EdgeSign opposite(EdgeSign s);
std::string_view sign_symbol(EdgeSign s);  // "+", "-", "o"
std::string_view sign_glyph(EdgeSign s);   // "+", "-", "∘"
EdgeSign parse_sign(std::string_view text);

struct DecoratedPath {
  std::vector<Slope> slopes;
  std::vector<EdgeSign> signs;

  // Farey edges, strictly clockwise, sign count; throws Invariant
  void validate() const;
  // additionally: Ring exactly on the two outer edges
  void validate_closed() const;

  friend bool operator==(const DecoratedPath&, const DecoratedPath&) = default;
};

struct ShortenResult {
  DecoratedPath path;
  bool opposite_junction = false;
  std::vector<Slope> removed;            // in removal order
  std::vector<Slope> opposite_at;        // removed vertices whose flanking signs disagreed
};

ShortenResult shorten(const DecoratedPath& p);

enum class Tightness { Tight, UniversallyTight, VirtuallyOvertwisted, Overtwisted, Undetermined };
std::string_view tightness_name(Tightness t);

Tightness classify(const DecoratedPath& p);

// minimal paths lens -> at -> 0 glued; edges clockwise of `at` carry clockwise_sign
DecoratedPath totally_inconsistent_path(const Slope& lens_slope, const Slope& at,
                                        EdgeSign clockwise_sign = EdgeSign::Minus);

}  // namespace lenskit
