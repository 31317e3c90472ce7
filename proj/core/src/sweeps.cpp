#include "lenskit/sweeps.hpp"

#include "lenskit/atf.hpp"
#include "lenskit/error.hpp"
#include "lenskit/farey.hpp"
#include "lenskit/handle.hpp"
#include "lenskit/json.hpp"
#include "lenskit/lens.hpp"
#include "lenskit/markov.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace lenskit {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Tally {
  std::size_t checked = 0, failed = 0;
  std::string first_failure;
  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
  bool ok() const { return failed == 0 && checked > 0; }
  std::string str() const {
    std::ostringstream os;
    os << checked - failed << "/" << checked;
    if (failed) os << " (first: " << first_failure << ")";
    return os.str();
  }
};

CriterionResult finish(int id, std::string title, bool pass, std::string detail, Clock::time_point t0) {
  return {id, std::move(title), pass, std::move(detail), since(t0)};
}

CriterionResult guarded(int id, const char* title, const std::function<CriterionResult()>& body) {
  auto t0 = Clock::now();
  try {
    return body();
  } catch (const std::exception& e) {
    return finish(id, title, false, std::string("exception: ") + e.what(), t0);
  }
}

std::vector<TreeEntry> tree(unsigned depth) { return enumerate_tree(depth); }

CriterionResult c1_q_sweep(const SweepOptions& o) {
  return guarded(1, "q-triple conditions over the Markov tree", [&] {
    auto t0 = Clock::now();
    Tally t;
    for (const auto& e : tree(o.depth)) {
      QReport r = verify_q(e.triple, derive_q(e.triple));
      t.record(r.c1 && r.c2 && r.c4 && r.c3_some, e.triple.str());
    }
    double s = since(t0);
    bool pass = t.ok() && s < 10.0;
    std::ostringstream d;
    d << "depth " << o.depth << ": " << t.str() << " triples, " << s << " s";
    return finish(1, "q-triple conditions over the Markov tree", pass, d.str(), t0);
  });
}

CriterionResult c2_cp2(const SweepOptions& o) {
  const char* title = "CP^2 recognition of the three-curve diagram";
  return guarded(2, title, [&] {
    auto t0 = Clock::now();
    Tally t;
    for (const auto& e : tree(o.depth)) {
      Cp2Recognition r = recognize_cp2(build_X(e.triple, derive_q(e.triple)));
      bool identity = r.x1 * r.x1 + r.x2 * r.x2 + r.x3 * r.x3 == r.x1 * r.x2 * r.x3;
      t.record(r.cp2 && identity, e.triple.str());
    }
    auto spot = [](int a, int b, int c) {
      MarkovTriple m(a, b, c);
      return recognize_cp2(build_X(m, derive_q(m)));
    };
    Cp2Recognition s1 = spot(1, 1, 1), s2 = spot(1, 2, 5);
    bool spots = s1.x1 == 3 && s1.x2 == -6 && s1.x3 == -3 && s2.x1 == 6 && s2.x2 == -87 && s2.x3 == -15;
    std::ostringstream d;
    d << "depth " << o.depth << ": " << t.str() << "; spot values " << (spots ? "match" : "differ");
    return finish(2, title, t.ok() && spots, d.str(), t0);
  });
}

CriterionResult c3_boundary(const SweepOptions& o) {
  const char* title = "two-curve boundary equals L(-p3^2, p3 q3 - 1)";
  return guarded(3, title, [&] {
    auto t0 = Clock::now();
    Tally t;
    for (const auto& e : tree(o.depth)) {
      const auto& m = e.triple;
      QTriple q = derive_q(m);
      ThreeManifold b = boundary_of_diagram(build_Z(m, q));
      LensSpace expect(-m.p3() * m.p3(), m.p3() * q.q3 - 1);
      t.record(b.summands() == ThreeManifold({expect}).summands(), m.str());
    }
    MarkovTriple m(1, 2, 5);
    Vec2 v = pushed_longitude(build_Z(m, derive_q(m)));
    bool spot = v == Vec2{-29, -25};
    std::ostringstream d;
    d << "depth " << o.depth << ": " << t.str() << "; (1,2,5) pushes lambda to " << v;
    return finish(3, title, t.ok() && spot, d.str(), t0);
  });
}

CriterionResult c4_surgery(const SweepOptions& o) {
  const char* title = "torus-framing surgery splitting";
  return guarded(4, title, [&] {
    auto t0 = Clock::now();
    TorusKnot k{5, -8, 3, 1};
    ThreeManifold r = nonloose_surgery_result(k);
    std::string wire = to_json(r).dump();
    bool example = wire == R"([{"lens":[8,5]},{"lens":[7,3]}])";
    bool formula = manifolds_match(r, surgery_closed_formula(k), Orientation::Preserving);

    unsigned depth = std::min(o.depth, 6u);
    Tally t;
    std::size_t preserving = 0;
    for (const auto& e : tree(depth)) {
      const auto& m = e.triple;
      QTriple q = derive_q(m);
      TorusKnot dual{m.p1() * q.q1 + 1, m.p1() * m.p1(), -m.p3() * m.p3(), m.p3() * q.q3 - 1};
      ThreeManifold split = torus_framing_surgery_splitting(dual);
      ThreeManifold expect({boundary_Bpq(m.p1(), q.q1), boundary_Bpq(m.p2(), q.q2)});
      t.record(manifolds_match(split, expect, Orientation::Either), m.str());
      if (manifolds_match(split, expect, Orientation::Preserving)) ++preserving;
    }
    std::ostringstream d;
    d << "T(5,-8) in L(3,1) -> " << wire << (formula ? " (closed formula agrees)" : " (closed formula differs)")
      << "; depth " << depth << " splittings " << t.str() << " (" << preserving << " orientation-preserving)";
    return finish(4, title, example && formula && t.ok(), d.str(), t0);
  });
}

CriterionResult c5_paths(const SweepOptions&) {
  const char* title = "decorated-path classification of the worked examples";
  return guarded(5, title, [&] {
    auto t0 = Clock::now();
    auto S = [](const char* s) { return Slope::parse(s); };
    using E = EdgeSign;
    struct Case {
      DecoratedPath p;
      Tightness expect;
      const char* name;
    };
    std::vector<Case> cases{
        {{{S("-3"), S("-2"), S("-5/3"), S("-8/5"), S("-3/2"), S("-1"), S("0")},
          {E::Ring, E::Plus, E::Plus, E::Minus, E::Minus, E::Ring}},
         Tightness::Overtwisted,
         "L(3,1) at -8/5"},
        {{{S("-3"), S("-2"), S("-5/3"), S("-8/5")}, {E::Ring, E::Plus, E::Ring}},
         Tightness::UniversallyTight,
         "L(7,3)"},
        {{{S("-8/5"), S("-3/2"), S("-1"), S("0")}, {E::Ring, E::Minus, E::Ring}},
         Tightness::UniversallyTight,
         "L(8,5)"},
    };
    bool pass = true;
    std::ostringstream d;
    for (const auto& c : cases) {
      auto a = Clock::now();
      Tightness got = classify(c.p);
      double us = since(a) * 1e6;
      bool ok = got == c.expect && us < 1000.0;
      pass = pass && ok;
      d << c.name << ": " << tightness_name(got) << " (" << static_cast<long>(us) << " us) ";
    }
    bool built = totally_inconsistent_path(S("-3"), S("-8/5")) == cases[0].p;
    pass = pass && built;
    d << (built ? "; generated path matches" : "; generated path differs");
    return finish(5, title, pass, d.str(), t0);
  });
}

CriterionResult c6_slide(const SweepOptions& o) {
  const char* title = "mutation slide matrix identity and boundary";
  return guarded(6, title, [&] {
    auto t0 = Clock::now();
    Tally t;
    for (const auto& e : tree(o.depth)) {
      const auto& m = e.triple;
      QTriple q = derive_q(m);
      HorizontalDiagram z = build_Z(m, q);
      ThreeManifold before = boundary_of_diagram(z);

      HorizontalDiagram f = slide_mutation(z, Slot::First);
      Vec2 want_f = -Vec2{3 * q.q2 * m.p3() + q.q1, 3 * m.p2() * m.p3() - m.p1()};
      HorizontalDiagram s = slide_mutation(z, Slot::Second);
      Vec2 want_s = -Vec2{3 * q.q1 * m.p3() + q.q2, 3 * m.p1() * m.p3() - m.p2()};

      bool ok = f.curves[1].column() == want_f && s.curves[1].column() == want_s &&
                manifolds_match(before, boundary_of_diagram(f)) && manifolds_match(before, boundary_of_diagram(s));
      t.record(ok, m.str());
    }
    std::ostringstream d;
    d << "depth " << o.depth << ": " << t.str() << " triples, both slots";
    return finish(6, title, t.ok(), d.str(), t0);
  });
}

// brute-force shortest clockwise Farey path over a finite vertex set
struct FareyOracle {
  std::vector<Slope> verts;  // sorted in clockwise order from infinity
  std::vector<std::vector<std::size_t>> adj;

  explicit FareyOracle(std::vector<Slope> v) : verts(std::move(v)) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    adj.resize(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (farey_adjacent(verts[i], verts[j])) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
  }

  struct Answer {
    std::size_t length = 0;
    bool unique = false;
    std::vector<Slope> path;
    bool reachable = false;
  };

  Answer solve(std::size_t from, std::size_t to) const {
    const std::size_t n = verts.size();
    auto rel = [&](std::size_t x) { return (x + n - from) % n; };
    const std::size_t end = rel(to);
    constexpr std::size_t inf = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(n, inf), count(n, 0), pred(n, inf);
    dist[from] = 0;
    count[from] = 1;
    for (std::size_t step = 0; step < end; ++step) {
      std::size_t u = (from + step) % n;
      if (dist[u] == inf) continue;
      for (std::size_t v : adj[u]) {
        if (rel(v) <= step || rel(v) > end) continue;
        if (dist[u] + 1 < dist[v]) {
          dist[v] = dist[u] + 1;
          count[v] = count[u];
          pred[v] = u;
        } else if (dist[u] + 1 == dist[v]) {
          count[v] = std::min<std::size_t>(2, count[v] + count[u]);
        }
      }
    }
    Answer a;
    if (dist[to] == inf) return a;
    a.reachable = true;
    a.length = dist[to];
    a.unique = count[to] == 1;
    for (std::size_t x = to; x != inf; x = pred[x]) a.path.push_back(verts[x]);
    std::reverse(a.path.begin(), a.path.end());
    return a;
  }
};

std::vector<Slope> farey_range(long lo_num, long hi_num, long max_den, bool with_infinity) {
  // all a/b with lo_num <= a/b <= hi_num, b <= max_den
  std::vector<Slope> out;
  for (long b = 1; b <= max_den; ++b)
    for (long a = lo_num * b; a <= hi_num * b; ++a)
      if (gcd(Int(a), Int(b)) == 1) out.emplace_back(a, b);
  if (with_infinity) out.push_back(Slope::infinity());
  return out;
}

Tally oracle_sweep(const FareyOracle& g) {
  Tally t;
  for (std::size_t i = 0; i < g.verts.size(); ++i)
    for (std::size_t j = 0; j < g.verts.size(); ++j) {
      if (i == j) continue;
      auto want = g.solve(i, j);
      auto got = minimal_path(g.verts[i], g.verts[j]);
      bool ok = want.reachable && got.size() == want.length + 1 && (!want.unique || got == want.path);
      t.record(ok, g.verts[i].str() + " -> " + g.verts[j].str());
    }
  return t;
}

CriterionResult c7_oracle(const SweepOptions& o) {
  const char* title = "minimal path against breadth-first search";
  return guarded(7, title, [&] {
    auto t0 = Clock::now();
    long den = static_cast<long>(o.farey_den);
    Tally unit = oracle_sweep(FareyOracle(farey_range(0, 1, den, true)));
    Tally window = oracle_sweep(FareyOracle(farey_range(-3, 0, std::min(den, 10L), true)));
    double s = since(t0);
    std::ostringstream d;
    d << "[0,1] u {inf}, den <= " << den << ": " << unit.str() << " pairs; [-3,0] u {inf}, den <= "
      << std::min(den, 10L) << ": " << window.str() << "; " << s << " s";
    return finish(7, title, unit.ok() && window.ok() && s < 30.0, d.str(), t0);
  });
}

CriterionResult c8_atf(const SweepOptions& o) {
  const char* title = "almost-toric pipeline";
  return guarded(8, title, [&] {
    auto t0 = Clock::now();
    unsigned depth = std::min(o.depth, 5u);
    Tally moves, readouts, doubles;
    for (const auto& e : tree(depth)) {
      const auto& m = e.triple;
      std::size_t bad = 0, count = 0;
      AtfDiagram d = atf_for_markov(m, [&](const AtfMove&, const AtfDiagram& x) {
        ++count;
        if (!check_consistency(x).ok()) ++bad;
      });
      moves.record(bad == 0 && count > 0, m.str());

      QTriple q = derive_q(m);
      std::vector<LensSpace> got, want;
      for (std::size_t i = 0; i < d.nodes.size(); ++i) got.push_back(node_boundary_lens(d, i));
      want = {boundary_Bpq(m.p1(), q.q1), boundary_Bpq(m.p2(), q.q2), boundary_Bpq(m.p3(), q.q3)};
      bool orders = true;
      for (const auto& l : got) {
        bool found = false;
        for (const auto& p : m.values())
          if (l.kind() == LensSpace::Kind::S3 ? p == 1 : l.order() == p * p) found = true;
        orders = orders && found;
      }
      readouts.record(orders && manifolds_match(ThreeManifold(got), ThreeManifold(want), Orientation::Either),
                      m.str());

      bool any = false, all = true;
      for (std::size_t k = 0; k < d.nodes.size(); ++k) {
        AtfDiagram once;
        try {
          once = transfer_cut(d, k);
        } catch (const Error& err) {
          if (err.kind() == ErrorKind::Unsupported) continue;
          throw;
        }
        any = true;
        all = all && check_consistency(once).ok() && affine_equivalent(transfer_cut(once, k), d);
      }
      doubles.record(any && all, m.str());
    }

    AtfDiagram d112 = atf_for_markov(MarkovTriple(1, 1, 2));
    bool l41 = false;
    for (std::size_t i = 0; i < d112.nodes.size(); ++i)
      if (node_boundary_lens(d112, i) == LensSpace(4, 1)) l41 = true;

    std::ostringstream d;
    d << "depth " << depth << ": consistency " << moves.str() << ", readouts " << readouts.str()
      << ", double transfer " << doubles.str() << "; (1,1,2) corner " << (l41 ? "reads L(4,1)" : "misses L(4,1)");
    return finish(8, title, moves.ok() && readouts.ok() && doubles.ok() && l41, d.str(), t0);
  });
}

CriterionResult c9_bpq(const SweepOptions& o) {
  const char* title = "B_{p,q} boundary against the one-curve diagram";
  return guarded(9, title, [&] {
    auto t0 = Clock::now();
    Tally t;
    for (long p = 1; p <= static_cast<long>(o.bpq_max); ++p)
      for (long q = (p == 1 ? 0 : 1); q < std::max(p, 1L); ++q) {
        if (gcd(Int(p), Int(q)) != 1) continue;
        ThreeManifold r = boundary_of_diagram(one_curve_diagram(p, q));
        LensSpace l = r.is_s3() ? LensSpace::s3() : r.summands().front();
        t.record(r.summands().size() <= 1 && l == boundary_Bpq(p, q),
                 "(" + std::to_string(p) + "," + std::to_string(q) + ")");
      }
    std::ostringstream d;
    d << "p <= " << o.bpq_max << ": " << t.str() << " pairs";
    return finish(9, title, t.ok(), d.str(), t0);
  });
}

}  // namespace

const std::vector<CriterionFn>& acceptance_criteria() {
  static const std::vector<CriterionFn> all{c1_q_sweep, c2_cp2,   c3_boundary, c4_surgery, c5_paths,
                                            c6_slide,   c7_oracle, c8_atf,      c9_bpq};
  return all;
}

std::vector<CriterionResult> run_acceptance(const SweepOptions& opts) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) out.push_back(c(opts));
  return out;
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream os;
  os << "[" << (r.pass ? "PASS" : "FAIL") << "] criterion " << r.id << ": " << r.title << " -- " << r.detail;
  return os.str();
}

}  // namespace lenskit
