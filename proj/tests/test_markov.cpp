#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lenskit;

namespace {
MarkovTriple M(long a, long b, long c) { return MarkovTriple(a, b, c); }
}

TEST(Markov, Validation) {
  EXPECT_TRUE(is_markov(1, 1, 1));
  EXPECT_TRUE(is_markov(2, 5, 29));
  EXPECT_TRUE(is_markov(29, 2, 5));
  EXPECT_FALSE(is_markov(2, 3, 5));
  EXPECT_THROW(M(2, 3, 5), Error);
  EXPECT_THROW(is_markov(0, 1, 1), Error);
  EXPECT_EQ(M(29, 5, 2), M(2, 5, 29));
}

TEST(Markov, MutationExamples) {
  EXPECT_EQ(mutate(M(1, 2, 5), Mutation::Left), M(2, 5, 29));
  EXPECT_EQ(mutate(M(1, 2, 5), Mutation::Right), M(1, 5, 13));
  EXPECT_EQ(mutate(M(1, 1, 1), Mutation::Left), M(1, 1, 2));
  EXPECT_EQ(mutate(M(1, 1, 1), Mutation::Right), M(1, 1, 2));
}

TEST(Markov, TreeDepthFourLeaves) {
  auto t = enumerate_tree(4);
  auto has = [&](const MarkovTriple& m) {
    return std::any_of(t.begin(), t.end(), [&](const TreeEntry& e) { return e.triple == m && e.depth == 4; });
  };
  EXPECT_TRUE(has(M(5, 29, 433)));
  EXPECT_TRUE(has(M(2, 29, 169)));
  EXPECT_TRUE(has(M(5, 13, 194)));
  EXPECT_TRUE(has(M(1, 13, 34)));
}

TEST(Markov, TreeIsDistinctAndCoversSmallTriples) {
  auto t = enumerate_tree(8);
  EXPECT_EQ(t.size(), 129u);
  std::set<std::string> distinct;
  std::set<std::array<long, 3>> seen;
  for (const auto& e : t) {
    ASSERT_TRUE(is_markov(e.triple.p1(), e.triple.p2(), e.triple.p3()));
    distinct.insert(e.triple.str());
    if (fits_int64(e.triple.p3()))
      seen.insert({to_int64(e.triple.p1()), to_int64(e.triple.p2()), to_int64(e.triple.p3())});
  }
  EXPECT_EQ(distinct.size(), t.size());
  for (const auto& m : oracle::markov_upto(1000)) EXPECT_TRUE(seen.count(m)) << m[0] << "," << m[1] << "," << m[2];
}

TEST(Markov, PathReplays) {
  EXPECT_EQ(mutation_path(M(2, 5, 29)).size(), 3u);
  EXPECT_EQ(replay(mutation_path(M(2, 5, 29))), M(2, 5, 29));
  for (const auto& e : enumerate_tree(9)) {
    EXPECT_EQ(replay(e.word), e.triple);
    EXPECT_EQ(replay(mutation_path(e.triple)), e.triple);
  }
  EXPECT_THROW(replay("LX"), Error);
}

TEST(Markov, DeriveQExamples) {
  QTriple a = derive_q(M(1, 1, 1));
  EXPECT_EQ(a.q1, 0);
  EXPECT_EQ(a.q2, 3);
  EXPECT_EQ(a.q3, 3);
  QTriple b = derive_q(M(1, 2, 5));
  EXPECT_EQ(b.q1, 0);
  EXPECT_EQ(b.q2, 15);
  EXPECT_EQ(b.q3, 6);
  QTriple c = derive_q(M(2, 5, 29));
  EXPECT_EQ(c.q1, -87);
  EXPECT_EQ(c.q2, 261);
  EXPECT_EQ(c.q3, -1254);
  EXPECT_EQ(c.bezout_x, 3);
  EXPECT_EQ(c.bezout_y, -1);
}

// the four conditions, restated directly
TEST(Markov, DerivedQSatisfiesConditionsByHand) {
  for (const auto& e : enumerate_tree(8)) {
    const auto& m = e.triple;
    QTriple q = derive_q(m);
    EXPECT_EQ(m.p1() * q.bezout_x + m.p2() * q.bezout_y, 1);
    EXPECT_GE(q.bezout_x, 0);
    EXPECT_LE(q.bezout_y, 0);
    const Int &p1 = m.p1(), &p2 = m.p2(), &p3 = m.p3();
    EXPECT_EQ(p3 * p3, (p1 * q.q1 - 1) * p2 * p2 + p1 * p1 * (p2 * q.q2 - 1)) << m.str();
    EXPECT_EQ(p3 * q.q3 - 1, p2 * p2 * q.q1 * q.q1 + (p1 * q.q1 + 1) * (p2 * q.q2 - 1)) << m.str();
    EXPECT_LE(q.q1, 0);
    // condition (3) by search: q_i = +-3 p_j / p_k mod p_i for one of the two orderings
    std::array<Int, 3> pv{p1, p2, p3}, qv{q.q1, q.q2, q.q3};
    for (int i = 0; i < 3; ++i) {
      if (pv[i] == 1) continue;
      const Int& pj = pv[(i + 1) % 3];
      const Int& pk = pv[(i + 2) % 3];
      bool found = false;
      for (const auto& [a, b] : {std::pair{pj, pk}, std::pair{pk, pj}})
        for (int sgn : {1, -1})
          // q b = +-3 a (mod p_i) is the same as q = +-3 a b^{-1}
          if (mod(qv[i] * b - sgn * 3 * a, pv[i]) == 0) found = true;
      EXPECT_TRUE(found) << m.str() << " index " << i;
    }
    QReport r = verify_q(m, q);
    EXPECT_TRUE(r.all()) << m.str();
  }
}

TEST(Markov, VerifyQRejectsPerturbedTriples) {
  MarkovTriple m = M(1, 2, 5);
  QTriple q = derive_q(m);
  q.q3 += 1;
  EXPECT_FALSE(verify_q(m, q).all());
  QTriple r = derive_q(M(1, 1, 1));
  r.q1 = 1;
  EXPECT_FALSE(verify_q(M(1, 1, 1), r).c1);
}

TEST(Markov, VerifyExampleConditionThree) {
  QReport r = verify_q(M(1, 2, 5), derive_q(M(1, 2, 5)));
  EXPECT_TRUE(r.c3_some);
  // q3 = 6 = 1 mod 5 and -(3 * 1 * 2^{-1}) = -(3 * 3) = 1 mod 5
  EXPECT_EQ(mod(6, 5), mod(-9, 5));
}

TEST(Markov, LargeDepthTriplesStayExact) {
  auto t = enumerate_tree(12);
  Int biggest = 0;
  for (const auto& e : t) biggest = std::max(biggest, e.triple.p3());
  EXPECT_FALSE(fits_int64(biggest));
  for (std::size_t i = t.size() - 20; i < t.size(); ++i) EXPECT_TRUE(verify_q(t[i].triple, derive_q(t[i].triple)).all());
}
