#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lenskit {

using Int = mpz_class;
using Rat = mpq_class;

// floor division and non-negative remainder (m > 0)
Int floor_div(const Int& a, const Int& b);
Int mod(const Int& a, const Int& m);
Int gcd(const Int& a, const Int& b);
int sign(const Int& a);
int sign(const Rat& a);

struct Bezout {
  Int g, x, y;  // g = a*x + b*y, g >= 0
};
Bezout ext_gcd(const Int& a, const Int& b);

// a^{-1} mod m, if it exists (m >= 1)
std::optional<Int> inverse_mod(const Int& a, const Int& m);

Int parse_int(std::string_view text);
Rat parse_rat(std::string_view text);  // "n" or "n/d"
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

bool fits_int64(const Int& v);
std::int64_t to_int64(const Int& v);

}  // namespace lenskit
