#include "lenskit/markov.hpp"

#include "lenskit/error.hpp"

#include <algorithm>

namespace lenskit {

namespace {

bool markov_equation(const Int& a, const Int& b, const Int& c) {
  return a * a + b * b + c * c == 3 * a * b * c;
}

}  // namespace

bool is_markov(const Int& p1, const Int& p2, const Int& p3) {
  if (p1 <= 0 || p2 <= 0 || p3 <= 0) fail(ErrorKind::Precondition, "Markov entries must be positive");
  return markov_equation(p1, p2, p3);
}

MarkovTriple::MarkovTriple(Int a, Int b, Int c) : p_{std::move(a), std::move(b), std::move(c)} {
  std::sort(p_.begin(), p_.end());
  if (p_[0] <= 0) fail(ErrorKind::Invariant, "Markov entries must be positive");
  if (!markov_equation(p_[0], p_[1], p_[2])) fail(ErrorKind::Invariant, str() + " is not a Markov triple");
}

std::string MarkovTriple::str() const {
  return "(" + to_string(p_[0]) + "," + to_string(p_[1]) + "," + to_string(p_[2]) + ")";
}

std::strong_ordering operator<=>(const MarkovTriple& a, const MarkovTriple& b) {
  // by maximum first, so numerically larger triples sort later
  for (int i = 2; i >= 0; --i) {
    int c = cmp(a.p_[i], b.p_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

MarkovTriple mutate(const MarkovTriple& t, Mutation which) {
  const Int &a = t.p1(), &b = t.p2(), &c = t.p3();
  if (which == Mutation::Left) return MarkovTriple(b, c, 3 * b * c - a);
  return MarkovTriple(a, c, 3 * a * c - b);
}

std::vector<TreeEntry> enumerate_tree(unsigned depth) {
  std::vector<TreeEntry> out{{MarkovTriple::root(), "", 0}};
  std::vector<TreeEntry> level = out;
  for (unsigned d = 1; d <= depth; ++d) {
    std::vector<TreeEntry> next;
    for (const auto& e : level) {
      next.push_back({mutate(e.triple, Mutation::Left), e.word + "L", d});
      // the stem: (1,1,1) and (1,1,2) have a single child
      if (d >= 3) next.push_back({mutate(e.triple, Mutation::Right), e.word + "R", d});
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::string mutation_path(const MarkovTriple& t) {
  std::string rev;
  MarkovTriple cur = t;
  while (cur != MarkovTriple::root()) {
    Int reduced = 3 * cur.p1() * cur.p2() - cur.p3();
    MarkovTriple parent(cur.p1(), cur.p2(), reduced);
    if (!(parent < cur)) fail(ErrorKind::Internal, "reverse mutation did not descend");
    rev.push_back(reduced == parent.p1() ? 'L' : 'R');
    cur = parent;
  }
  return {rev.rbegin(), rev.rend()};
}

MarkovTriple replay(const std::string& word) {
  MarkovTriple t = MarkovTriple::root();
  for (char ch : word) {
    if (ch != 'L' && ch != 'R') fail(ErrorKind::Parse, "mutation words use only L and R");
    t = mutate(t, ch == 'L' ? Mutation::Left : Mutation::Right);
  }
  return t;
}

QTriple derive_q(const MarkovTriple& t) {
  const Int &p1 = t.p1(), &p2 = t.p2(), &p3 = t.p3();
  Int x, y;
  if (p2 == 1) {
    x = 1;
    y = 0;
  } else {
    auto inv = inverse_mod(p1, p2);
    if (!inv) fail(ErrorKind::Internal, "p1 not invertible mod p2");
    x = *inv;
    y = (1 - p1 * x) / p2;
  }
  QTriple q;
  q.bezout_x = x;
  q.bezout_y = y;
  q.q1 = 3 * p3 * y;
  q.q2 = 3 * p3 * x;
  q.q3 = -3 * p1 * y + 3 * p2 * x + 9 * p2 * p3 * y;
  return q;
}

namespace {

// q == +-3 pj pk^{-1} (mod pi)
bool congruence(const Int& qi, const Int& pi, const Int& pj, const Int& pk) {
  auto inv = inverse_mod(pk, pi);
  if (!inv) fail(ErrorKind::Internal, "Markov entry not invertible modulo another");
  Int target = mod(Int(3 * pj * *inv), pi);
  Int r = mod(qi, pi);
  return r == target || r == mod(Int(-target), pi);
}

}  // namespace

QReport verify_q(const MarkovTriple& t, const QTriple& q) {
  const Int &p1 = t.p1(), &p2 = t.p2(), &p3 = t.p3();
  QReport r;
  r.c1 = p3 * p3 == (p1 * q.q1 - 1) * p2 * p2 + p1 * p1 * (p2 * q.q2 - 1);
  r.c2 = p3 * q.q3 - 1 == p2 * p2 * q.q1 * q.q1 + (p1 * q.q1 + 1) * (p2 * q.q2 - 1);
  r.c4 = q.q1 <= 0;

  const std::array<const Int*, 3> p{&p1, &p2, &p3};
  const std::array<const Int*, 3> qs{&q.q1, &q.q2, &q.q3};
  r.c3_some = r.c3_all = true;
  for (int i = 0; i < 3; ++i) {
    if (*p[i] == 1) continue;
    const Int& pj = *p[(i + 1) % 3];
    const Int& pk = *p[(i + 2) % 3];
    bool a = congruence(*qs[i], *p[i], pj, pk);
    bool b = congruence(*qs[i], *p[i], pk, pj);
    r.c3_some = r.c3_some && (a || b);
    r.c3_all = r.c3_all && a && b;
  }
  return r;
}

}  // namespace lenskit
