#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lenskit;

namespace {

Point P(long x, long y) { return {Rat(x), Rat(y)}; }

std::size_t corner_node(const AtfDiagram& d) {
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (node_corner(d, i).p > 1) return i;
  return d.nodes.size();
}

// exact signed area via the shoelace formula
Rat area2(const AtfDiagram& d) {
  Rat a = 0;
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    const Point& u = d.vertices[i];
    const Point& v = d.vertices[(i + 1) % d.vertices.size()];
    a += u.x * v.y - u.y * v.x;
  }
  return a;
}

}  // namespace

TEST(Atf, MonodromyExample) {
  EXPECT_EQ(monodromy(2, 1), (IntMat2{-1, 4, -1, 3}));
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      if (std::gcd(a, b) != 1) continue;
      IntMat2 m = monodromy(a, b);
      EXPECT_EQ(m.det(), 1);
      EXPECT_EQ(m.trace(), 2);
      EXPECT_EQ((m * Vec2{a, b}), (Vec2{a, b}));
    }
}

TEST(Atf, StandardTriangle) {
  AtfDiagram d = standard_cp2();
  EXPECT_EQ(d.vertices.size(), 3u);
  EXPECT_TRUE(d.nodes.empty());
  EXPECT_TRUE(check_consistency(d).ok());
  EXPECT_GT(area2(d), 0);  // counterclockwise
}

TEST(Atf, TradesGiveSphereReadouts) {
  AtfDiagram d = standard_cp2();
  for (std::size_t v = 0; v < 3; ++v) {
    d = nodal_trade(d, v);
    ASSERT_TRUE(check_consistency(d).ok()) << "after trade " << v;
  }
  ASSERT_EQ(d.nodes.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(node_boundary_lens(d, i).kind(), LensSpace::Kind::S3);
  EXPECT_TRUE(affine_equivalent(d, atf_for_markov(MarkovTriple::root())));
}

TEST(Atf, SlidesKeepReadouts) {
  AtfDiagram d = atf_for_markov(MarkovTriple(1, 2, 5));
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    LensSpace before = node_boundary_lens(d, i);
    AtfDiagram s = nodal_slide_scaled(d, i, Rat(1, 2));
    ASSERT_TRUE(check_consistency(s).ok());
    EXPECT_EQ(node_boundary_lens(s, i), before);
    EXPECT_EQ(s.vertices, d.vertices);
  }
  EXPECT_THROW(nodal_slide_scaled(d, 0, Rat(0)), Error);
  EXPECT_THROW(nodal_slide(d, 0, P(100, 100)), Error);
}

TEST(Atf, TransferToTheNextTriple) {
  AtfDiagram d = atf_for_markov(MarkovTriple::root());
  AtfDiagram moved = d;
  bool found = false;
  for (std::size_t i = 0; i < d.nodes.size() && !found; ++i) {
    try {
      moved = transfer_cut(d, i);
      found = true;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
    }
  }
  ASSERT_TRUE(found);
  ASSERT_TRUE(check_consistency(moved).ok());
  std::size_t k = corner_node(moved);
  ASSERT_LT(k, moved.nodes.size());
  EXPECT_EQ(node_boundary_lens(moved, k), LensSpace(4, 1));
  // same polygon as the (1,1,2) picture; node positions depend on the slides taken
  AtfDiagram a = moved, b = atf_for_markov(MarkovTriple(1, 1, 2));
  a.nodes.clear();
  b.nodes.clear();
  EXPECT_TRUE(affine_equivalent(a, b));
  // area is an integral-affine invariant
  EXPECT_EQ(area2(moved), area2(d));
}

TEST(Atf, DoubleTransferIsIdentity) {
  for (const auto& e : enumerate_tree(4)) {
    AtfDiagram d = atf_for_markov(e.triple);
    std::size_t done = 0;
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
      try {
        AtfDiagram once = transfer_cut(d, i);
        EXPECT_TRUE(check_consistency(once).ok());
        EXPECT_TRUE(affine_equivalent(transfer_cut(once, i), d)) << e.triple.str() << " node " << i;
        ++done;
      } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::Unsupported);
      }
    }
    EXPECT_GE(done, 1u) << e.triple.str();
  }
}

TEST(Atf, PipelineReadoutsMatchBallBoundaries) {
  for (const auto& e : enumerate_tree(5)) {
    const auto& m = e.triple;
    std::size_t moves = 0;
    AtfDiagram d = atf_for_markov(m, [&](const AtfMove&, const AtfDiagram& x) {
      ++moves;
      EXPECT_TRUE(check_consistency(x).ok()) << m.str();
    });
    EXPECT_GE(moves, 3 + e.depth);
    QTriple q = derive_q(m);
    std::vector<LensSpace> want{boundary_Bpq(m.p1(), q.q1), boundary_Bpq(m.p2(), q.q2), boundary_Bpq(m.p3(), q.q3)};
    std::vector<LensSpace> got;
    for (std::size_t i = 0; i < d.nodes.size(); ++i) got.push_back(node_boundary_lens(d, i));
    EXPECT_TRUE(manifolds_match(ThreeManifold(got), ThreeManifold(want), Orientation::Either)) << m.str();
    std::multiset<Int> orders, squares;
    for (std::size_t i = 0; i < 3; ++i) {
      orders.insert(node_corner(d, i).p);
      squares.insert(m[i]);
    }
    EXPECT_EQ(orders, squares);
  }
}

TEST(Atf, ReadoutsFor125) {
  AtfDiagram d = atf_for_markov(MarkovTriple(1, 2, 5));
  std::multiset<Int> orders;
  for (std::size_t i = 0; i < 3; ++i) {
    LensSpace l = node_boundary_lens(d, i);
    orders.insert(l.kind() == LensSpace::Kind::S3 ? Int(1) : l.order());
  }
  EXPECT_EQ(orders, (std::multiset<Int>{1, 4, 25}));
}

TEST(Atf, ConsistencyCatchesBrokenDiagrams) {
  AtfDiagram d = atf_for_markov(MarkovTriple(1, 1, 2));
  AtfDiagram flipped = d;
  flipped.nodes[0].eigenvector = Vec2{flipped.nodes[0].eigenvector.y, -flipped.nodes[0].eigenvector.x};
  EXPECT_FALSE(check_consistency(flipped).ok());
  AtfDiagram outside = d;
  outside.nodes[1].position = P(50, 50);
  EXPECT_FALSE(check_consistency(outside).ok());
  AtfDiagram dented = d;
  dented.vertices.insert(dented.vertices.begin() + 1, P(0, 0));
  EXPECT_FALSE(check_consistency(dented).ok());
}

TEST(Atf, CanonicalFormIsAffineInvariant) {
  AtfDiagram d = atf_for_markov(MarkovTriple(1, 2, 5));
  std::vector<IntMat2> frames{{1, 1, 0, 1}, {2, 1, 1, 1}, {0, -1, 1, 0}, {5, 2, 2, 1}};
  for (const auto& f : frames) {
    AtfDiagram e = apply_affine(d, f, {Rat(7, 3), Rat(-2)});
    EXPECT_EQ(canonical_form(e), canonical_form(d));
    EXPECT_TRUE(check_consistency(e).ok());
  }
  // reflections reverse orientation and are not allowed
  AtfDiagram mirrored = apply_affine(d, {1, 0, 0, -1}, {0, 0});
  EXPECT_FALSE(affine_equivalent(mirrored, d));
  EXPECT_FALSE(affine_equivalent(atf_for_markov(MarkovTriple(1, 1, 2)), d));
}

TEST(Atf, MoveErrors) {
  AtfDiagram d = standard_cp2();
  EXPECT_THROW(nodal_trade(d, 5), Error);
  EXPECT_THROW(transfer_cut(d, 0), Error);
  EXPECT_THROW(node_boundary_lens(d, 0), Error);
}
