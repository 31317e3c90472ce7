#include "lenskit/bigint.hpp"

#include "lenskit/error.hpp"
#include "lenskit/mat2.hpp"

#include <limits>

namespace lenskit {

std::string_view error_kind_name(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Invariant: return "invariant";
    case ErrorKind::Unsupported: return "unsupported-configuration";
    case ErrorKind::Internal: return "internal-consistency";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

int sign(const Int& a) { return sgn(a); }
int sign(const Rat& a) { return sgn(a); }

Bezout ext_gcd(const Int& a, const Int& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::optional<Int> inverse_mod(const Int& a, const Int& m) {
  if (m <= 0) return std::nullopt;
  if (m == 1) return Int(0);
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return mod(r, m);
}

Int parse_int(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(ErrorKind::Parse, "empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) fail(ErrorKind::Parse, "malformed integer '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') fail(ErrorKind::Parse, "malformed integer '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int n = parse_int(text.substr(0, slash));
  Int d = parse_int(text.substr(slash + 1));
  if (d == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& v) { return v.get_str(10); }
std::string to_string(const Rat& v) { return v.get_str(10); }

bool fits_int64(const Int& v) {
  static const Int lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Int hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return v >= lo && v <= hi;
}

std::int64_t to_int64(const Int& v) {
  if (!fits_int64(v)) fail(ErrorKind::Precondition, "integer does not fit in 64 bits");
  return std::stoll(v.get_str(10));
}

IntMat2 IntMat2::inverse() const {
  Int dt = det();
  if (dt == 1) return {d, -b, -c, a};
  if (dt == -1) return {-d, b, c, -a};
  fail(ErrorKind::Precondition, "matrix is not invertible over the integers");
}

IntMat2 frame_to_x_axis(const Vec2& v) {
  Bezout e = ext_gcd(v.x, v.y);
  if (e.g != 1) fail(ErrorKind::Precondition, "vector is not primitive");
  // rows (x', y') and (-v.y, v.x): det = x' v.x + y' v.y = 1
  return {e.x, e.y, -v.y, v.x};
}

std::ostream& operator<<(std::ostream& os, const Vec2& v) {
  return os << '(' << v.x << ", " << v.y << ')';
}

std::ostream& operator<<(std::ostream& os, const IntMat2& m) {
  return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

}  // namespace lenskit
