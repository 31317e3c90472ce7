#pragma once

#include "lenskit/bigint.hpp"

#include <ostream>

namespace lenskit {

struct Vec2 {
  Int x, y;
  friend bool operator==(const Vec2&, const Vec2&) = default;
  Vec2 operator-() const { return {-x, -y}; }
};

inline Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
inline Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
inline Vec2 operator*(const Int& s, const Vec2& v) { return {s * v.x, s * v.y}; }

inline Int det(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline bool is_primitive(const Vec2& v) { return gcd(v.x, v.y) == 1; }

// row-major [[a, b], [c, d]]
struct IntMat2 {
  Int a, b, c, d;

  static IntMat2 identity() { return {1, 0, 0, 1}; }

  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }

  // exact inverse; throws unless det = +-1
  IntMat2 inverse() const;

  IntMat2 operator*(const IntMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

  friend bool operator==(const IntMat2&, const IntMat2&) = default;
};

// some M in SL(2,Z) with M * v = (1, 0); v primitive
IntMat2 frame_to_x_axis(const Vec2& v);

std::ostream& operator<<(std::ostream& os, const Vec2& v);
std::ostream& operator<<(std::ostream& os, const IntMat2& m);

}  // namespace lenskit
