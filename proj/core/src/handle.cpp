#include "lenskit/handle.hpp"

#include "lenskit/error.hpp"

#include <algorithm>

namespace lenskit {

void TorusCurve::validate() const {
  if (gcd(mu, lambda) != 1) fail(ErrorKind::Invariant, "torus curve is not primitive");
  if (framing != -1 && framing != 1) fail(ErrorKind::Invariant, "framing offset must be -1 or +1");
}

Int intersection(const TorusCurve& a, const TorusCurve& b) { return a.mu * b.lambda - a.lambda * b.mu; }

IntMat2 twist_matrix(const TorusCurve& c) {
  c.validate();
  const Int& gl = c.lambda;
  const Int& gm = c.mu;
  // v + det(v, g) g on (lambda; mu)
  IntMat2 m{1 + gl * gm, -gl * gl, gm * gm, 1 - gl * gm};
  return c.framing == -1 ? m : m.inverse();
}

Vec2 push_past(const Vec2& v, const TorusCurve& surgery) { return twist_matrix(surgery) * v; }

TorusCurve push_past(const TorusCurve& v, const TorusCurve& surgery) {
  return TorusCurve::from_column(push_past(v.column(), surgery), v.framing);
}

IntMat2 diagram_matrix(const HorizontalDiagram& d, PushDirection dir) {
  IntMat2 m = IntMat2::identity();
  if (dir == PushDirection::Inward) {
    for (const auto& c : d.curves) m = twist_matrix(c) * m;
  } else {
    for (const auto& c : d.curves) m = m * twist_matrix(c).inverse();
  }
  return m;
}

Vec2 pushed_longitude(const HorizontalDiagram& d) { return diagram_matrix(d) * Vec2{1, 0}; }

ThreeManifold boundary_of_diagram(const HorizontalDiagram& d) {
  if (d.handles.h0 != 1 || d.handles.h1 != 1)
    fail(ErrorKind::Invariant, "genus-one horizontal diagrams have one 0-handle and one 1-handle");
  Vec2 v{1, 0};
  for (const auto& c : d.curves) {
    v = push_past(v, c);
    if (!is_primitive(v)) fail(ErrorKind::Internal, "pushed class became imprimitive");
  }
  // class read as mu-coefficient over lambda-coefficient, against the inner meridian 0/1
  LensSpace l = lens_from_meridian_slopes(Slope(v.y, v.x), Slope::integer(0));
  unsigned h3 = d.handles.h3;
  if (l.kind() == LensSpace::Kind::S1xS2 && h3 > 0) {
    l = LensSpace::s3();
    --h3;
  }
  if (h3 > 0) fail(ErrorKind::Invariant, "more 3-handles than S^1xS^2 summands");
  return ThreeManifold({l});
}

HorizontalDiagram one_curve_diagram(const Int& p, const Int& q) {
  HorizontalDiagram d;
  d.curves.push_back({-p, q, -1});
  d.curves.front().validate();
  return d;
}

HorizontalDiagram build_Z(const MarkovTriple& t, const QTriple& q) {
  if (!verify_q(t, q).all()) fail(ErrorKind::Precondition, "q-triple fails verification");
  HorizontalDiagram d;
  d.curves = {{-t.p2(), q.q2, -1}, {t.p1(), q.q1, -1}};
  return d;
}

HorizontalDiagram build_X(const MarkovTriple& t, const QTriple& q) {
  HorizontalDiagram d = build_Z(t, q);
  d.curves.push_back({t.p3(), q.q3, -1});
  d.handles.h3 = 1;
  d.handles.h4 = 1;
  return d;
}

Cp2Recognition recognize_cp2(const HorizontalDiagram& d) {
  if (d.curves.size() != 3) fail(ErrorKind::Precondition, "CP^2 recognition needs exactly three curves");
  for (const auto& c : d.curves) {
    c.validate();
    if (c.framing != -1) fail(ErrorKind::Precondition, "CP^2 recognition needs framing -1 throughout");
  }
  const auto& g = d.curves;
  Cp2Recognition r;
  r.x1 = intersection(g[1], g[2]);
  r.x2 = intersection(g[0], g[2]);
  r.x3 = intersection(g[0], g[1]);
  bool nonzero = r.x1 != 0 || r.x2 != 0 || r.x3 != 0;
  r.cp2 = nonzero && r.x1 * r.x1 + r.x2 * r.x2 + r.x3 * r.x3 == r.x1 * r.x2 * r.x3;
  return r;
}

HorizontalDiagram slide_mutation(const HorizontalDiagram& d, Slot slot) {
  if (d.curves.size() < 2) fail(ErrorKind::Precondition, "mutation slide needs two curves");
  HorizontalDiagram out = d;
  auto& c = out.curves;
  if (slot == Slot::Second) {
    // attaching circles are unoriented; keep the orientation that reads -(q'; p')
    TorusCurve moved = push_past(d.curves[0], d.curves[1]);
    moved.mu = -moved.mu;
    moved.lambda = -moved.lambda;
    c[0] = d.curves[1];
    c[1] = moved;
    return out;
  }
  // flip (mu, lambda) -> (mu, -lambda); it also reverses the levels,
  // so the first pair ends up outermost, then slide the old first curve past the second
  std::reverse(c.begin(), c.end());
  for (auto& x : c) x.lambda = -x.lambda;
  std::size_t n = c.size();
  TorusCurve fixed = c[n - 1];
  TorusCurve moved = push_past(c[n - 2], fixed);
  c[n - 2] = fixed;
  c[n - 1] = moved;
  return out;
}

}  // namespace lenskit
