#include "lenskit/json.hpp"

#include "lenskit/error.hpp"

namespace lenskit {

namespace {

const Int& safe_limit() {
  static const Int lim = Int(1) << 53;
  return lim;
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array_of(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || (n != 0 && j.size() != n)) fail(ErrorKind::Parse, std::string("malformed ") + what);
  return j;
}

Rat json_to_rat(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  return Rat(json_to_int(j));
}

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Point point_from_json(const Json& j) {
  array_of(j, 2, "point");
  return {json_to_rat(j[0]), json_to_rat(j[1])};
}

}  // namespace

Json int_json(const Int& v) {
  if (abs(v) < safe_limit()) return Json(to_int64(v));
  return Json(to_string(v));
}

Json int_string(const Int& v) { return Json(to_string(v)); }

Int json_to_int(const Json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) return parse_int(j.get<std::string>());
  fail(ErrorKind::Parse, "expected an integer");
}

Json to_json(const Slope& s) { return Json::array({to_string(s.num()), to_string(s.den())}); }

Slope slope_from_json(const Json& j) {
  if (j.is_string()) return Slope::parse(j.get<std::string>());
  array_of(j, 2, "slope");
  return Slope(json_to_int(j[0]), json_to_int(j[1]));
}

Json to_json(const DecoratedPath& p) {
  Json slopes = Json::array(), signs = Json::array();
  for (const auto& s : p.slopes) slopes.push_back(to_json(s));
  for (auto e : p.signs) signs.push_back(std::string(sign_symbol(e)));
  return Json{{"slopes", slopes}, {"signs", signs}};
}

DecoratedPath path_from_json(const Json& j) {
  DecoratedPath p;
  for (const auto& s : array_of(member(j, "slopes"), 0, "slopes")) p.slopes.push_back(slope_from_json(s));
  for (const auto& e : array_of(member(j, "signs"), 0, "signs")) {
    if (!e.is_string()) fail(ErrorKind::Parse, "signs are strings");
    p.signs.push_back(parse_sign(e.get<std::string>()));
  }
  p.validate();
  return p;
}

Json to_json(const MarkovTriple& t) { return Json::array({int_json(t.p1()), int_json(t.p2()), int_json(t.p3())}); }

Json to_json(const QTriple& q) {
  return Json{{"q", Json::array({int_json(q.q1), int_json(q.q2), int_json(q.q3)})},
              {"bezout", Json::array({int_json(q.bezout_x), int_json(q.bezout_y)})}};
}

Json to_json(const QReport& r) {
  return Json{{"c1", r.c1}, {"c2", r.c2}, {"c3_some", r.c3_some}, {"c3_all", r.c3_all}, {"c4", r.c4}, {"all", r.all()}};
}

Json to_json(const LensSpace& l) {
  switch (l.kind()) {
    case LensSpace::Kind::S3: return Json{{"lens", Json::array({1, 0})}};
    case LensSpace::Kind::S1xS2: return Json{{"lens", Json::array({0, 1})}};
    case LensSpace::Kind::Lens: break;
  }
  return Json{{"lens", Json::array({int_json(l.order()), int_json(l.positive_s())})}};
}

LensSpace lens_from_json(const Json& j) {
  const Json& a = array_of(member(j, "lens"), 2, "lens");
  return LensSpace(json_to_int(a[0]), json_to_int(a[1]));
}

Json to_json(const ThreeManifold& m) {
  Json out = Json::array();
  for (const auto& l : m.summands()) out.push_back(to_json(l));
  return out;
}

Json to_json(const HorizontalDiagram& d) {
  Json curves = Json::array();
  for (const auto& c : d.curves)
    curves.push_back(Json{{"mu", to_string(c.mu)}, {"lambda", to_string(c.lambda)}, {"framing", c.framing}});
  const auto& h = d.handles;
  return Json{{"curves", curves}, {"handles", Json{{"h0", h.h0}, {"h1", h.h1}, {"h3", h.h3}, {"h4", h.h4}}}};
}

HorizontalDiagram diagram_from_json(const Json& j) {
  HorizontalDiagram d;
  for (const auto& c : array_of(member(j, "curves"), 0, "curves")) {
    TorusCurve t{json_to_int(member(c, "mu")), json_to_int(member(c, "lambda")), -1};
    if (c.contains("framing")) t.framing = static_cast<int>(to_int64(json_to_int(c.at("framing"))));
    t.validate();
    d.curves.push_back(t);
  }
  if (j.contains("handles")) {
    const Json& h = j.at("handles");
    auto get = [&](const char* k, unsigned dflt) {
      return h.contains(k) ? static_cast<unsigned>(to_int64(json_to_int(h.at(k)))) : dflt;
    };
    d.handles = {get("h0", 1), get("h1", 1), get("h3", 0), get("h4", 0)};
  }
  return d;
}

Json to_json(const Cp2Recognition& r) {
  return Json{{"cp2", r.cp2}, {"x", Json::array({int_json(r.x1), int_json(r.x2), int_json(r.x3)})}};
}

Json to_json(const AtfDiagram& d) {
  Json verts = Json::array(), nodes = Json::array();
  for (const auto& v : d.vertices) verts.push_back(point_json(v));
  for (const auto& n : d.nodes)
    nodes.push_back(Json{{"position", point_json(n.position)},
                         {"eigenvector", Json::array({to_string(n.eigenvector.x), to_string(n.eigenvector.y)})},
                         {"cut", point_json(n.cut_end)}});
  return Json{{"vertices", verts}, {"nodes", nodes}};
}

AtfDiagram atf_from_json(const Json& j) {
  AtfDiagram d;
  for (const auto& v : array_of(member(j, "vertices"), 0, "vertices")) d.vertices.push_back(point_from_json(v));
  for (const auto& n : array_of(member(j, "nodes"), 0, "nodes")) {
    const Json& e = array_of(member(n, "eigenvector"), 2, "eigenvector");
    d.nodes.push_back({point_from_json(member(n, "position")), Vec2{json_to_int(e[0]), json_to_int(e[1])},
                       point_from_json(member(n, "cut"))});
  }
  return d;
}

}  // namespace lenskit
