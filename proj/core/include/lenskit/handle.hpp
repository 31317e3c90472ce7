#pragma once

#include "lenskit/bigint.hpp"
#include "lenskit/lens.hpp"
#include "lenskit/markov.hpp"
#include "lenskit/mat2.hpp"

#include <vector>

namespace lenskit {

// mu * mu_U + lambda * lambda_U on the Heegaard torus, framing relative to the surface
struct TorusCurve {
  Int mu, lambda;
  int framing = -1;

  Vec2 column() const { return {lambda, mu}; }  // (lambda; mu)
  static TorusCurve from_column(const Vec2& v, int framing = -1) { return {v.y, v.x, framing}; }
  void validate() const;
  friend bool operator==(const TorusCurve&, const TorusCurve&) = default;
};

// algebraic intersection a . b = a.mu * b.lambda - a.lambda * b.mu
Int intersection(const TorusCurve& a, const TorusCurve& b);

struct HandleCounts {
  unsigned h0 = 1, h1 = 1, h3 = 0, h4 = 0;
  friend bool operator==(const HandleCounts&, const HandleCounts&) = default;
};

struct HorizontalDiagram {
  std::vector<TorusCurve> curves;  // innermost level first
  HandleCounts handles;
  friend bool operator==(const HorizontalDiagram&, const HorizontalDiagram&) = default;
};

IntMat2 twist_matrix(const TorusCurve& c);
Vec2 push_past(const Vec2& v, const TorusCurve& surgery);
TorusCurve push_past(const TorusCurve& v, const TorusCurve& surgery);

enum class PushDirection { Inward, Outward };
// Inward: composite of the twists in list order; Outward: its inverse, composed the other way
IntMat2 diagram_matrix(const HorizontalDiagram& d, PushDirection dir = PushDirection::Inward);
// image of lambda_U under the inward composite
Vec2 pushed_longitude(const HorizontalDiagram& d);

ThreeManifold boundary_of_diagram(const HorizontalDiagram& d);

HorizontalDiagram one_curve_diagram(const Int& p, const Int& q);  // -p mu + q lambda
HorizontalDiagram build_X(const MarkovTriple& t, const QTriple& q);
// the first two curves of build_X, no 3- or 4-handles
HorizontalDiagram build_Z(const MarkovTriple& t, const QTriple& q);

struct Cp2Recognition {
  bool cp2 = false;
  Int x1, x2, x3;
};
Cp2Recognition recognize_cp2(const HorizontalDiagram& d);

enum class Slot { First, Second };
HorizontalDiagram slide_mutation(const HorizontalDiagram& d, Slot slot);

}  // namespace lenskit
