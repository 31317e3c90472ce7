#include "lenskit/atf.hpp"

#include "lenskit/error.hpp"
#include "lenskit/handle.hpp"

#include <algorithm>
#include <optional>

namespace lenskit {

namespace {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point scale(const Rat& s, const Point& p) { return {s * p.x, s * p.y}; }
Point to_point(const Vec2& v) { return {Rat(v.x), Rat(v.y)}; }
Rat cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

Point apply(const IntMat2& m, const Point& p) {
  return {Rat(m.a) * p.x + Rat(m.b) * p.y, Rat(m.c) * p.x + Rat(m.d) * p.y};
}

// primitive integer vector along a nonzero rational direction
Vec2 primitive_dir(const Point& v) {
  if (v.x == 0 && v.y == 0) fail(ErrorKind::Internal, "zero direction");
  Int l;
  mpz_lcm(l.get_mpz_t(), v.x.get_den_mpz_t(), v.y.get_den_mpz_t());
  Int x = Int(v.x * l), y = Int(v.y * l);
  Int g = gcd(x, y);
  return {x / g, y / g};
}

std::size_t next_i(const AtfDiagram& d, std::size_t i) { return (i + 1) % d.vertices.size(); }
std::size_t prev_i(const AtfDiagram& d, std::size_t i) { return (i + d.vertices.size() - 1) % d.vertices.size(); }

std::optional<std::size_t> vertex_index(const AtfDiagram& d, const Point& p) {
  for (std::size_t i = 0; i < d.vertices.size(); ++i)
    if (d.vertices[i] == p) return i;
  return std::nullopt;
}

Vec2 edge_out(const AtfDiagram& d, std::size_t i) { return primitive_dir(d.vertices[next_i(d, i)] - d.vertices[i]); }
Vec2 edge_back(const AtfDiagram& d, std::size_t i) { return primitive_dir(d.vertices[prev_i(d, i)] - d.vertices[i]); }

struct Exit {
  Rat s;
  std::size_t edge;
  Rat t;  // position along that edge, 0..1
};

// first boundary crossing of p + s*dir, s > 0
Exit ray_exit(const AtfDiagram& d, const Point& p, const Point& dir) {
  std::optional<Exit> best;
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    const Point& a = d.vertices[i];
    Point e = d.vertices[next_i(d, i)] - a;
    Rat den = cross(dir, e);
    if (den == 0) continue;
    Point ap = a - p;
    Rat s = cross(ap, e) / den;
    Rat t = cross(ap, dir) / den;
    if (s > 0 && t >= 0 && t <= 1 && (!best || s < best->s)) best = Exit{s, i, t};
  }
  if (!best) fail(ErrorKind::Internal, "ray does not leave the polygon");
  return *best;
}

int orient(const Point& a, const Point& b, const Point& c) { return sign(cross(b - a, c - a)); }

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// closed segments [a,b] and [c,e] meet
bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& e) {
  int o1 = orient(a, b, c), o2 = orient(a, b, e), o3 = orient(c, e, a), o4 = orient(c, e, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, e) || on_segment(c, e, a) || on_segment(c, e, b);
}

bool strictly_inside(const AtfDiagram& d, const Point& p) {
  for (std::size_t i = 0; i < d.vertices.size(); ++i)
    if (orient(d.vertices[i], d.vertices[next_i(d, i)], p) <= 0) return false;
  return true;
}

bool strictly_convex(const std::vector<Point>& v) {
  if (v.size() < 3) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[(i + v.size() - 1) % v.size()];
    const Point& b = v[i];
    const Point& c = v[(i + 1) % v.size()];
    if (cross(b - a, c - b) <= 0) return false;
  }
  return true;
}

// other nodes whose cut meets [from, to]
std::vector<std::size_t> blockers(const AtfDiagram& d, std::size_t skip, const Point& from, const Point& to) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < d.nodes.size(); ++j) {
    if (j == skip) continue;
    if (segments_meet(from, to, d.nodes[j].position, d.nodes[j].cut_end)) out.push_back(j);
  }
  return out;
}

struct Chord {
  Point from, to;  // old cut end, opposite exit point
  Exit exit;
};

Chord chord_of(const AtfDiagram& d, std::size_t k) {
  const AtfNode& n = d.nodes[k];
  Exit ex = ray_exit(d, n.position, to_point(-n.eigenvector));
  return {n.cut_end, n.position + scale(ex.s, to_point(-n.eigenvector)), ex};
}

void check_node_index(const AtfDiagram& d, std::size_t k) {
  if (k >= d.nodes.size()) fail(ErrorKind::Precondition, "node index out of range");
}

bool flanking_ok(const AtfDiagram& d, const AtfNode& n) {
  auto vi = vertex_index(d, n.cut_end);
  if (!vi) return false;
  Vec2 u_out = edge_out(d, *vi);
  Vec2 u_in = -edge_back(d, *vi);
  return monodromy(n.eigenvector) * u_out == u_in;
}

}  // namespace

IntMat2 monodromy(const Int& a, const Int& b) {
  if (gcd(a, b) != 1) fail(ErrorKind::Precondition, "monodromy needs a primitive eigenvector");
  return {1 - a * b, a * a, -b * b, 1 + a * b};
}

AtfDiagram standard_cp2() {
  AtfDiagram d;
  d.vertices = {{0, 0}, {3, 0}, {0, 3}};
  return d;
}

AtfDiagram nodal_trade(const AtfDiagram& d, std::size_t vertex) {
  if (vertex >= d.vertices.size()) fail(ErrorKind::Precondition, "vertex index out of range");
  const Point& v = d.vertices[vertex];
  for (const auto& n : d.nodes)
    if (n.cut_end == v) fail(ErrorKind::Precondition, "vertex already carries a node");
  Vec2 eo = edge_out(d, vertex), eb = edge_back(d, vertex);
  Int n = det(eo, eb);
  Int p = sqrt(n);
  if (n <= 0 || p * p != n) fail(ErrorKind::Precondition, "corner is not of type p^2");
  Vec2 sum = eo + eb;
  if (mod(sum.x, p) != 0 || mod(sum.y, p) != 0) fail(ErrorKind::Precondition, "corner admits no nodal trade");
  Vec2 w{sum.x / p, sum.y / p};
  if (!is_primitive(w)) fail(ErrorKind::Precondition, "corner admits no nodal trade");

  Exit ex = ray_exit(d, v, to_point(w));
  Rat t = ex.s / 3;
  for (int tries = 0; tries < 64; ++tries, t /= 2) {
    Point pos = v + scale(t, to_point(w));
    if (!blockers(d, d.nodes.size(), pos, v).empty()) continue;
    AtfDiagram out = d;
    out.nodes.push_back({pos, -w, v});
    return out;
  }
  fail(ErrorKind::Unsupported, "no room for a node at this corner");
}

AtfDiagram nodal_slide(const AtfDiagram& d, std::size_t node, const Point& target) {
  check_node_index(d, node);
  const AtfNode& n = d.nodes[node];
  if (cross(to_point(n.eigenvector), target - n.position) != 0)
    fail(ErrorKind::Precondition, "slide target is off the eigenline");
  if (!strictly_inside(d, target)) fail(ErrorKind::Precondition, "slide target is not interior");
  if (!blockers(d, node, target, n.cut_end).empty())
    fail(ErrorKind::Unsupported, "slide would run the cut into another node");
  AtfDiagram out = d;
  out.nodes[node].position = target;
  return out;
}

AtfDiagram nodal_slide_scaled(const AtfDiagram& d, std::size_t node, const Rat& t) {
  check_node_index(d, node);
  const AtfNode& n = d.nodes[node];
  return nodal_slide(d, node, n.cut_end + scale(t, n.position - n.cut_end));
}

AtfDiagram transfer_cut(const AtfDiagram& d, std::size_t k) {
  check_node_index(d, k);
  const AtfNode& node = d.nodes[k];
  auto vi = vertex_index(d, node.cut_end);
  if (!vi) fail(ErrorKind::Unsupported, "cut does not end at a vertex");
  if (!flanking_ok(d, node)) fail(ErrorKind::Precondition, "node is inconsistent");

  Chord ch = chord_of(d, k);
  if (!blockers(d, k, ch.from, ch.to).empty())
    fail(ErrorKind::Unsupported, "eigenline runs through another node or cut");

  const Point& P = node.position;
  const Point w = to_point(node.eigenvector);
  const IntMat2 A = monodromy(node.eigenvector);
  auto side = [&](const Point& x) { return sign(cross(w, x - P)); };
  // the piece holding the outgoing edge at the old corner is the one that moves
  const int moving = side(d.vertices[next_i(d, *vi)]);
  if (moving == 0) fail(ErrorKind::Internal, "degenerate chord");
  auto tr = [&](const Point& x) { return P + apply(A, x - P); };

  std::vector<Point> raw;
  const bool q_is_vertex = ch.exit.t == 0 || ch.exit.t == 1;
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    const Point& x = d.vertices[i];
    raw.push_back(side(x) == moving ? tr(x) : x);
    if (i == ch.exit.edge && !q_is_vertex) raw.push_back(ch.to);
  }
  std::vector<Point> verts;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Point& a = raw[(i + raw.size() - 1) % raw.size()];
    const Point& c = raw[(i + 1) % raw.size()];
    if (cross(raw[i] - a, c - raw[i]) != 0) verts.push_back(raw[i]);
  }
  if (std::find(verts.begin(), verts.end(), ch.from) != verts.end())
    fail(ErrorKind::Internal, "old corner did not straighten");
  if (std::find(verts.begin(), verts.end(), ch.to) == verts.end())
    fail(ErrorKind::Unsupported, "new corner collapsed");
  if (!strictly_convex(verts)) fail(ErrorKind::Unsupported, "transfer leaves a non-convex base");

  AtfDiagram out;
  out.vertices = std::move(verts);
  for (std::size_t j = 0; j < d.nodes.size(); ++j) {
    const AtfNode& n = d.nodes[j];
    if (j == k) {
      out.nodes.push_back({P, -node.eigenvector, ch.to});
    } else if (side(n.position) == moving) {
      out.nodes.push_back({tr(n.position), A * n.eigenvector, tr(n.cut_end)});
    } else {
      out.nodes.push_back(n);
    }
  }
  return out;
}

bool ConsistencyReport::ok() const {
  return convex && primitive_edges && nodes_interior &&
         std::all_of(nodes.begin(), nodes.end(), [](const NodeCheck& n) { return n.ok(); });
}

ConsistencyReport check_consistency(const AtfDiagram& d) {
  ConsistencyReport r;
  r.convex = strictly_convex(d.vertices);
  r.primitive_edges = true;
  for (std::size_t i = 0; i < d.vertices.size(); ++i)
    if (d.vertices[i] == d.vertices[next_i(d, i)]) r.primitive_edges = false;
  r.nodes_interior = r.convex;
  for (const auto& n : d.nodes) {
    NodeCheck c;
    bool prim = is_primitive(n.eigenvector);
    c.eigen_fixed = prim && monodromy(n.eigenvector) * n.eigenvector == n.eigenvector;
    c.endpoint_vertex = vertex_index(d, n.cut_end).has_value();
    c.cut_parallel = n.cut_end != n.position && cross(to_point(n.eigenvector), n.cut_end - n.position) == 0;
    c.flanking_edges = prim && c.endpoint_vertex && r.convex && flanking_ok(d, n);
    if (r.convex && !strictly_inside(d, n.position)) r.nodes_interior = false;
    r.nodes.push_back(c);
  }
  return r;
}

CornerData node_corner(const AtfDiagram& d, std::size_t k) {
  check_node_index(d, k);
  ConsistencyReport rep = check_consistency(d);
  if (!rep.convex || !rep.nodes[k].ok()) fail(ErrorKind::Precondition, "node is inconsistent");
  const AtfNode& n = d.nodes[k];
  Vec2 eo = edge_out(d, *vertex_index(d, n.cut_end));
  // frame with the outgoing edge along (1, 0); the eigenvector becomes (a', b')
  Vec2 w = frame_to_x_axis(eo) * n.eigenvector;
  Int kk = det(n.eigenvector, eo);
  CornerData c;
  c.p = abs(kk);
  c.q = kk > 0 ? Int(-w.x) : w.x;
  return c;
}

LensSpace node_boundary_lens(const AtfDiagram& d, std::size_t k) {
  CornerData c = node_corner(d, k);
  ThreeManifold m = boundary_of_diagram(one_curve_diagram(c.p, c.q));
  return m.is_s3() ? LensSpace::s3() : m.summands().front();
}

AtfDiagram atf_for_markov(const MarkovTriple& t, const AtfObserver& observer) {
  auto notify = [&](AtfMove::Kind kind, std::size_t i, const AtfDiagram& d) {
    if (observer) observer(AtfMove{kind, i}, d);
  };
  AtfDiagram d = standard_cp2();
  for (std::size_t i = 0; i < 3; ++i) {
    d = nodal_trade(d, i);
    notify(AtfMove::Kind::Trade, i, d);
  }
  std::array<Int, 3> ps{1, 1, 1};
  const Rat half(1, 2);
  for (char letter : mutation_path(t)) {
    std::array<Int, 3> sorted = ps;
    std::sort(sorted.begin(), sorted.end());
    const Int& replaced = letter == 'L' ? sorted[0] : sorted[1];
    std::size_t k = static_cast<std::size_t>(std::find(ps.begin(), ps.end(), replaced) - ps.begin());
    Int others = 1;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != k) others *= ps[j];

    // shorten whatever sits on the eigenline, then transfer
    for (int guard = 0;; ++guard) {
      if (guard > 256) fail(ErrorKind::Internal, "could not clear the eigenline");
      Chord ch = chord_of(d, k);
      auto blocked = blockers(d, k, ch.from, ch.to);
      if (blocked.empty()) break;
      for (std::size_t j : blocked) {
        d = nodal_slide_scaled(d, j, half);
        notify(AtfMove::Kind::Slide, j, d);
      }
    }
    d = transfer_cut(d, k);
    notify(AtfMove::Kind::Transfer, k, d);
    ps[k] = 3 * others - ps[k];
    d = nodal_slide_scaled(d, k, half);
    notify(AtfMove::Kind::Slide, k, d);
  }
  for (std::size_t j = 0; j < 3; ++j)
    if (node_corner(d, j).p != ps[j]) fail(ErrorKind::Internal, "corner types drifted from the Markov triple");
  return d;
}

AtfDiagram apply_affine(const AtfDiagram& d, const IntMat2& m, const Point& shift) {
  Int dt = m.det();
  if (dt != 1 && dt != -1) fail(ErrorKind::Precondition, "integral-affine maps need det +-1");
  auto f = [&](const Point& p) { return apply(m, p) + shift; };
  AtfDiagram out;
  for (const auto& v : d.vertices) out.vertices.push_back(f(v));
  if (dt == -1) std::reverse(out.vertices.begin(), out.vertices.end());
  for (const auto& n : d.nodes) out.nodes.push_back({f(n.position), m * n.eigenvector, f(n.cut_end)});
  return out;
}

std::string canonical_form(const AtfDiagram& d) {
  std::optional<std::string> best;
  const std::size_t n = d.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    IntMat2 f = frame_to_x_axis(edge_out(d, i));
    Vec2 back = f * edge_back(d, i);
    if (back.y <= 0) continue;  // not a convex corner
    IntMat2 shear{1, -floor_div(back.x, back.y), 0, 1};
    IntMat2 g = shear * f;
    const Point origin = d.vertices[i];
    auto map = [&](const Point& p) { return apply(g, p - origin); };
    auto pt = [&](const Point& p) {
      Point q = map(p);
      return "(" + to_string(q.x) + "," + to_string(q.y) + ")";
    };
    std::string key = "V";
    for (std::size_t j = 0; j < n; ++j) key += pt(d.vertices[(i + j) % n]);
    std::vector<std::string> nodes;
    for (const auto& nd : d.nodes) {
      Vec2 w = g * nd.eigenvector;
      nodes.push_back(pt(nd.position) + "<" + to_string(w.x) + "," + to_string(w.y) + ">" + pt(nd.cut_end));
    }
    std::sort(nodes.begin(), nodes.end());
    key += "N";
    for (const auto& s : nodes) key += s + ";";
    if (!best || key < *best) best = key;
  }
  if (!best) fail(ErrorKind::Invariant, "diagram has no convex corner");
  return *best;
}

bool affine_equivalent(const AtfDiagram& a, const AtfDiagram& b) {
  return a.vertices.size() == b.vertices.size() && a.nodes.size() == b.nodes.size() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace lenskit
