#pragma once

#include "lenskit/bigint.hpp"
#include "lenskit/farey.hpp"

#include <string>
#include <vector>

namespace lenskit {

// L(r, s); negative r means the orientation reversal of L(|r|, s)
class LensSpace {
 public:
  enum class Kind { S3, S1xS2, Lens };

  LensSpace(const Int& r, const Int& s);  // throws Invariant if gcd(r, s) != 1
  static LensSpace s3() { return LensSpace(1, 0); }
  static LensSpace s1xs2() { return LensSpace(0, 1); }

  Kind kind() const { return kind_; }
  const Int& order() const { return n_; }  // |r|
  const Int& s() const { return s_; }      // normal form, 0 <= s < |r|
  bool reversed() const { return reversed_; }

  // L(n, s+) with the orientation folded into the second entry
  Int positive_s() const;
  LensSpace mirror() const;
  Int signed_r() const { return reversed_ ? Int(-n_) : n_; }
  std::string str() const;

  // same oriented manifold
  friend bool operator==(const LensSpace& a, const LensSpace& b);

 private:
  Kind kind_;
  Int n_, s_;
  bool reversed_;
};

enum class Orientation { Preserving, Either };
bool lens_homeomorphic(const LensSpace& a, const LensSpace& b,
                       Orientation o = Orientation::Preserving);

// connected sum; S^3 summands are dropped
class ThreeManifold {
 public:
  ThreeManifold() = default;
  explicit ThreeManifold(std::vector<LensSpace> summands);

  const std::vector<LensSpace>& summands() const { return summands_; }
  bool is_s3() const { return summands_.empty(); }
  std::size_t s1xs2_count() const;
  ThreeManifold connect(const ThreeManifold& other) const;
  std::string str() const;

 private:
  std::vector<LensSpace> summands_;
};

// multiset match with a summand-wise lens_homeomorphic test
bool manifolds_match(const ThreeManifold& a, const ThreeManifold& b,
                     Orientation o = Orientation::Preserving);

LensSpace boundary_Bpq(const Int& p, const Int& q);

struct TorusKnot {
  Int p, q;  // homology class p*lambda + q*mu; Farey point q/p
  Int r, s;  // ambient L(r, s)

  Slope farey_point() const { return Slope(q, p); }
  Slope ambient_slope() const { return Slope(-r, s); }
  LensSpace ambient() const { return LensSpace(r, s); }
};

enum class KnotSign { Positive, Negative };
enum class KnotKind { Positive, Negative, Trivial };
std::string_view knot_kind_name(KnotKind k);

struct KnotClass {
  KnotSign sign;
  bool trivial;            // |pr + qs| = 1 or |q| = 1
  bool trivial_alternate;  // |pr + qs| = 1 or |p| = 1
  bool readings_disagree() const { return trivial != trivial_alternate; }
  KnotKind kind() const {
    if (trivial) return KnotKind::Trivial;
    return sign == KnotSign::Positive ? KnotKind::Positive : KnotKind::Negative;
  }
};

KnotClass classify_torus_knot(const TorusKnot& k);

LensSpace lens_from_meridian_slopes(const Slope& m1, const Slope& m2);

// lens(point, 0) # lens(ambient, point), no sign requirement
ThreeManifold torus_framing_surgery_splitting(const TorusKnot& k);
// same, but only for negative nontrivial knots
ThreeManifold nonloose_surgery_result(const TorusKnot& k);
// L(N, -D) # L(Ns + Dr, n's + d'r) with point N/D and N d' - n' D = -1
ThreeManifold surgery_closed_formula(const TorusKnot& k);

}  // namespace lenskit
