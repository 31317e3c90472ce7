#include "lenskit/lens.hpp"

#include "lenskit/error.hpp"

#include <algorithm>

namespace lenskit {

namespace {

Int canonical_residue(const Int& s, const Int& n) {
  Int a = mod(s, n);
  auto inv = inverse_mod(a, n);
  if (!inv) fail(ErrorKind::Internal, "lens parameter not a unit");
  return std::min(a, *inv);
}

}  // namespace

LensSpace::LensSpace(const Int& r, const Int& s) : kind_(Kind::Lens), reversed_(false) {
  if (gcd(r, s) != 1)
    fail(ErrorKind::Invariant, "L(" + to_string(r) + "," + to_string(s) + ") needs coprime entries");
  n_ = abs(r);
  if (n_ == 0) {
    kind_ = Kind::S1xS2;
    s_ = 1;
    return;
  }
  if (n_ == 1) {
    kind_ = Kind::S3;
    s_ = 0;
    return;
  }
  s_ = canonical_residue(s, n_);
  reversed_ = r < 0 && n_ > 2;
}

Int LensSpace::positive_s() const {
  if (kind_ != Kind::Lens) return s_;
  return reversed_ ? canonical_residue(-s_, n_) : s_;
}

LensSpace LensSpace::mirror() const {
  if (kind_ != Kind::Lens) return *this;
  return LensSpace(reversed_ ? n_ : Int(-n_), s_);
}

std::string LensSpace::str() const {
  switch (kind_) {
    case Kind::S3: return "S^3";
    case Kind::S1xS2: return "S^1xS^2";
    case Kind::Lens: break;
  }
  return "L(" + to_string(n_) + "," + to_string(positive_s()) + ")";
}

bool operator==(const LensSpace& a, const LensSpace& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != LensSpace::Kind::Lens) return true;
  return a.n_ == b.n_ && a.positive_s() == b.positive_s();
}

bool lens_homeomorphic(const LensSpace& a, const LensSpace& b, Orientation o) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() != LensSpace::Kind::Lens) return true;
  if (a.order() != b.order()) return false;
  if (a == b) return true;
  return o == Orientation::Either && a == b.mirror();
}

ThreeManifold::ThreeManifold(std::vector<LensSpace> summands) {
  for (auto& l : summands)
    if (l.kind() != LensSpace::Kind::S3) summands_.push_back(std::move(l));
}

std::size_t ThreeManifold::s1xs2_count() const {
  return static_cast<std::size_t>(std::count_if(summands_.begin(), summands_.end(), [](const LensSpace& l) {
    return l.kind() == LensSpace::Kind::S1xS2;
  }));
}

ThreeManifold ThreeManifold::connect(const ThreeManifold& other) const {
  auto all = summands_;
  all.insert(all.end(), other.summands_.begin(), other.summands_.end());
  return ThreeManifold(std::move(all));
}

std::string ThreeManifold::str() const {
  if (summands_.empty()) return "S^3";
  std::string out;
  for (const auto& l : summands_) {
    if (!out.empty()) out += " # ";
    out += l.str();
  }
  return out;
}

bool manifolds_match(const ThreeManifold& a, const ThreeManifold& b, Orientation o) {
  const auto& x = a.summands();
  std::vector<LensSpace> y = b.summands();
  if (x.size() != y.size()) return false;
  for (const auto& l : x) {
    auto it = std::find_if(y.begin(), y.end(), [&](const LensSpace& m) { return lens_homeomorphic(l, m, o); });
    if (it == y.end()) return false;
    y.erase(it);
  }
  return true;
}

LensSpace boundary_Bpq(const Int& p, const Int& q) {
  if (p < 1 || gcd(p, q) != 1) fail(ErrorKind::Precondition, "B_{p,q} needs p >= 1 and gcd(p, q) = 1");
  return LensSpace(p * p, p * q - 1);
}

std::string_view knot_kind_name(KnotKind k) {
  switch (k) {
    case KnotKind::Positive: return "Positive";
    case KnotKind::Negative: return "Negative";
    case KnotKind::Trivial: return "Trivial";
  }
  return "?";
}

KnotClass classify_torus_knot(const TorusKnot& k) {
  if (gcd(k.p, k.q) != 1) fail(ErrorKind::Precondition, "torus knot needs gcd(p, q) = 1");
  if (gcd(k.r, k.s) != 1) fail(ErrorKind::Precondition, "ambient lens space needs gcd(r, s) = 1");
  if (k.r == 0) fail(ErrorKind::DegenerateInput, "ambient slope coincides with 0");
  const Slope sigma = k.farey_point();
  const Slope amb = k.ambient_slope();
  const Slope zero = Slope::integer(0);
  if (sigma == amb || sigma == zero) fail(ErrorKind::DegenerateInput, "knot slope " + sigma.str() + " is degenerate");

  KnotClass c;
  c.sign = in_clockwise_arc(sigma, amb, zero) ? KnotSign::Negative : KnotSign::Positive;
  bool boundary_parallel = abs(Int(k.p * k.r + k.q * k.s)) == 1;
  c.trivial = boundary_parallel || abs(k.q) == 1;
  c.trivial_alternate = boundary_parallel || abs(k.p) == 1;
  return c;
}

LensSpace lens_from_meridian_slopes(const Slope& m1, const Slope& m2) {
  if (m1 == m2) return LensSpace::s1xs2();
  // M = [[y1, -x1], [g, d]] sends m1 to 0/1, with g x1 + d y1 = 1
  Bezout e = ext_gcd(m1.num(), m1.den());
  Int a = -farey_mult(m1, m2);
  Int b = e.x * m2.num() + e.y * m2.den();
  return LensSpace(a, b);
}

ThreeManifold torus_framing_surgery_splitting(const TorusKnot& k) {
  const Slope sigma = k.farey_point();
  return ThreeManifold({lens_from_meridian_slopes(sigma, Slope::integer(0)),
                        lens_from_meridian_slopes(k.ambient_slope(), sigma)});
}

ThreeManifold nonloose_surgery_result(const TorusKnot& k) {
  KnotClass c = classify_torus_knot(k);
  if (c.kind() != KnotKind::Negative)
    fail(ErrorKind::Precondition, std::string("surgery needs a negative nontrivial knot, got ") +
                                      std::string(knot_kind_name(c.kind())));
  return torus_framing_surgery_splitting(k);
}

ThreeManifold surgery_closed_formula(const TorusKnot& k) {
  const Slope sigma = k.farey_point();
  const Int& N = sigma.num();
  const Int& D = sigma.den();
  Bezout e = ext_gcd(N, D);  // e.x N + e.y D = 1
  // N d' - n' D = -1
  Int dbar = -e.x, nbar = e.y;
  if (N != 0) {
    // shift to 0 <= n' < |N|; (n', d') -> (n' + tN, d' + tD) keeps the relation
    Int t = floor_div(nbar, abs(N));
    Int step = N > 0 ? Int(-t) : t;
    nbar += step * N;
    dbar += step * D;
  }
  return ThreeManifold({LensSpace(N, -D), LensSpace(N * k.s + D * k.r, nbar * k.s + dbar * k.r)});
}

}  // namespace lenskit
