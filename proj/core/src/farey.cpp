#include "lenskit/farey.hpp"

#include "lenskit/error.hpp"

namespace lenskit {

Slope::Slope(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_ == 0 && den_ == 0) fail(ErrorKind::DegenerateInput, "slope (0, 0) is not a Farey point");
  Int g = gcd(num_, den_);
  num_ /= g;
  den_ /= g;
  if (den_ < 0 || (den_ == 0 && num_ < 0)) {
    num_ = -num_;
    den_ = -den_;
  }
}

Slope Slope::parse(std::string_view text) {
  if (text == "inf" || text == "oo" || text == "∞") return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(parse_int(text), 1);
  return Slope(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Slope::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

std::strong_ordering operator<=>(const Slope& u, const Slope& v) {
  if (u.is_infinite() || v.is_infinite()) {
    if (u.is_infinite() && v.is_infinite()) return std::strong_ordering::equal;
    return u.is_infinite() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  int c = cmp(Int(u.num_ * v.den_), Int(v.num_ * u.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

Int farey_mult(const Slope& u, const Slope& v) { return u.num() * v.den() - u.den() * v.num(); }

bool farey_adjacent(const Slope& u, const Slope& v) { return abs(farey_mult(u, v)) == 1; }

Slope farey_sum(const Slope& u, const Slope& v) { return farey_sum(u.vec(), v.vec()); }

Slope farey_sum(const Vec2& u, const Vec2& v) {
  Vec2 w = u + v;
  if (w.x == 0 && w.y == 0) fail(ErrorKind::DegenerateInput, "Farey sum of opposite vectors");
  return Slope(w);
}

Slope act(const IntMat2& m, const Slope& s) { return Slope(m * s.vec()); }

bool in_clockwise_arc(const Slope& x, const Slope& a, const Slope& c) {
  if (x == a || x == c) return false;
  if (a == c) return true;
  if (a < c) return a < x && x < c;
  return x > a || x < c;
}

std::pair<Slope, Slope> farey_neighbors(const Slope& s) {
  if (s.is_infinite()) return {Slope::integer(0), Slope::integer(1)};
  if (s.den() == 1) {
    // the Bezout families both contain infinity; fall back on circular order
    if (s.num() <= 0) return {Slope::integer(s.num() + 1), Slope::infinity()};
    return {Slope::infinity(), Slope::integer(s.num() - 1)};
  }
  // Stern-Brocot parents: left n1/d1 with n d1 - d n1 = 1, 0 < d1 < d
  const Int& n = s.num();
  const Int& d = s.den();
  Int d1 = *inverse_mod(n, d);
  Int n1 = (n * d1 - 1) / d;
  Slope left(n1, d1);
  Slope right(n - n1, d - d1);
  return {right, left};
}

std::vector<Slope> minimal_path(const Slope& from, const Slope& to) {
  if (from == to) fail(ErrorKind::Precondition, "minimal_path needs distinct endpoints");
  std::vector<Slope> path{from};
  Slope v = from;
  constexpr std::size_t kMaxSteps = 10'000'000;
  while (path.size() < kMaxSteps) {
    IntMat2 m = frame_to_x_axis(v.vec());  // v -> infinity
    Slope t = act(m, to);
    if (t.den() == 1) {
      path.push_back(to);
      return path;
    }
    v = act(m.inverse(), Slope::integer(floor_div(t.num(), t.den())));
    path.push_back(v);
  }
  fail(ErrorKind::Unsupported, "minimal path exceeds step limit");
}

bool is_minimal(const std::vector<Slope>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (farey_adjacent(s[i], s[j]) != (j == i + 1)) return false;
  return true;
}

EdgeSign opposite(EdgeSign s) {
  switch (s) {
    case EdgeSign::Plus: return EdgeSign::Minus;
    case EdgeSign::Minus: return EdgeSign::Plus;
    case EdgeSign::Ring: return EdgeSign::Ring;
  }
  return s;
}

std::string_view sign_symbol(EdgeSign s) {
  switch (s) {
    case EdgeSign::Plus: return "+";
    case EdgeSign::Minus: return "-";
    case EdgeSign::Ring: return "o";
  }
  return "?";
}

std::string_view sign_glyph(EdgeSign s) { return s == EdgeSign::Ring ? "∘" : sign_symbol(s); }

EdgeSign parse_sign(std::string_view t) {
  if (t == "+") return EdgeSign::Plus;
  if (t == "-" || t == "−") return EdgeSign::Minus;
  if (t == "o" || t == "∘") return EdgeSign::Ring;
  fail(ErrorKind::Parse, "unknown edge sign '" + std::string(t) + "'");
}

void DecoratedPath::validate() const {
  if (slopes.size() < 2) fail(ErrorKind::Invariant, "decorated path needs at least two slopes");
  if (signs.size() + 1 != slopes.size())
    fail(ErrorKind::Invariant, "decorated path needs one sign per edge");
  for (std::size_t i = 1; i < slopes.size(); ++i) {
    if (!farey_adjacent(slopes[i - 1], slopes[i]))
      fail(ErrorKind::Invariant, "non-edge " + slopes[i - 1].str() + " -> " + slopes[i].str());
    if (!in_clockwise_arc(slopes[i], slopes[i - 1], slopes.front()))
      fail(ErrorKind::Invariant, "path does not move clockwise at " + slopes[i].str());
  }
}

void DecoratedPath::validate_closed() const {
  validate();
  if (signs.front() != EdgeSign::Ring || signs.back() != EdgeSign::Ring)
    fail(ErrorKind::Invariant, "closed path must start and end with a ring edge");
  for (std::size_t i = 1; i + 1 < signs.size(); ++i)
    if (signs[i] == EdgeSign::Ring) fail(ErrorKind::Invariant, "interior ring edge");
}

ShortenResult shorten(const DecoratedPath& p) {
  p.validate();
  ShortenResult r{p, false, {}, {}};
  auto& s = r.path.slopes;
  auto& e = r.path.signs;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      if (!farey_adjacent(s[i - 1], s[i + 1])) continue;
      EdgeSign a = e[i - 1], b = e[i];
      EdgeSign merged = a;
      if (a == EdgeSign::Ring || b == EdgeSign::Ring) {
        merged = EdgeSign::Ring;
      } else if (a != b) {
        r.opposite_junction = true;
        r.opposite_at.push_back(s[i]);
      }
      r.removed.push_back(s[i]);
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
      e[i - 1] = merged;
      e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
      again = true;
      break;
    }
  }
  return r;
}

std::string_view tightness_name(Tightness t) {
  switch (t) {
    case Tightness::Tight: return "Tight";
    case Tightness::UniversallyTight: return "UniversallyTight";
    case Tightness::VirtuallyOvertwisted: return "VirtuallyOvertwisted";
    case Tightness::Overtwisted: return "Overtwisted";
    case Tightness::Undetermined: return "Undetermined";
  }
  return "?";
}

Tightness classify(const DecoratedPath& p) {
  p.validate_closed();
  if (is_minimal(p.slopes)) {
    for (std::size_t i = 2; i + 1 < p.signs.size(); ++i)
      if (p.signs[i] != p.signs[1]) return Tightness::VirtuallyOvertwisted;
    return Tightness::UniversallyTight;
  }
  return shorten(p).opposite_junction ? Tightness::Overtwisted : Tightness::Undetermined;
}

DecoratedPath totally_inconsistent_path(const Slope& lens_slope, const Slope& at,
                                        EdgeSign clockwise_sign) {
  const Slope zero = Slope::integer(0);
  if (!in_clockwise_arc(at, lens_slope, zero))
    fail(ErrorKind::Precondition, at.str() + " is not strictly between " + lens_slope.str() + " and 0");
  if (clockwise_sign == EdgeSign::Ring) fail(ErrorKind::Precondition, "interior sign cannot be a ring");
  DecoratedPath p;
  p.slopes = minimal_path(lens_slope, at);
  p.signs.assign(p.slopes.size() - 1, opposite(clockwise_sign));
  auto tail = minimal_path(at, zero);
  p.slopes.insert(p.slopes.end(), tail.begin() + 1, tail.end());
  p.signs.insert(p.signs.end(), tail.size() - 1, clockwise_sign);
  p.signs.front() = EdgeSign::Ring;
  p.signs.back() = EdgeSign::Ring;
  return p;
}

}  // namespace lenskit
