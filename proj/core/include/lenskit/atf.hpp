#pragma once

#include "lenskit/bigint.hpp"
#include "lenskit/lens.hpp"
#include "lenskit/markov.hpp"
#include "lenskit/mat2.hpp"

#include <functional>
#include <string>
#include <vector>

namespace lenskit {

struct Point {
  Rat x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct AtfNode {
  Point position;
  Vec2 eigenvector;  // primitive, oriented from the node towards the cut end
  Point cut_end;     // a polygon vertex
  friend bool operator==(const AtfNode&, const AtfNode&) = default;
};

struct AtfDiagram {
  std::vector<Point> vertices;  // counterclockwise
  std::vector<AtfNode> nodes;
  friend bool operator==(const AtfDiagram&, const AtfDiagram&) = default;
};

IntMat2 monodromy(const Int& a, const Int& b);
inline IntMat2 monodromy(const Vec2& w) { return monodromy(w.x, w.y); }

AtfDiagram standard_cp2();

AtfDiagram nodal_trade(const AtfDiagram& d, std::size_t vertex);
AtfDiagram nodal_slide(const AtfDiagram& d, std::size_t node, const Point& target);
// slide to cut_end + t (position - cut_end), t > 0
AtfDiagram nodal_slide_scaled(const AtfDiagram& d, std::size_t node, const Rat& t);
AtfDiagram transfer_cut(const AtfDiagram& d, std::size_t node);

struct NodeCheck {
  bool eigen_fixed = false;
  bool flanking_edges = false;
  bool cut_parallel = false;
  bool endpoint_vertex = false;
  bool ok() const { return eigen_fixed && flanking_edges && cut_parallel && endpoint_vertex; }
};

struct ConsistencyReport {
  bool convex = false;
  bool primitive_edges = false;
  bool nodes_interior = false;
  std::vector<NodeCheck> nodes;
  bool ok() const;
};

ConsistencyReport check_consistency(const AtfDiagram& d);

struct CornerData {
  Int p, q;  // the node reads as B_{p,q}
};
CornerData node_corner(const AtfDiagram& d, std::size_t node);
LensSpace node_boundary_lens(const AtfDiagram& d, std::size_t node);

struct AtfMove {
  enum class Kind { Trade, Slide, Transfer } kind;
  std::size_t index;
};
using AtfObserver = std::function<void(const AtfMove&, const AtfDiagram&)>;

AtfDiagram atf_for_markov(const MarkovTriple& t, const AtfObserver& observer = {});

// x |-> m x + shift
AtfDiagram apply_affine(const AtfDiagram& d, const IntMat2& m, const Point& shift);
// orientation-preserving integral-affine normal form, as a comparable string
std::string canonical_form(const AtfDiagram& d);
bool affine_equivalent(const AtfDiagram& a, const AtfDiagram& b);

std::string to_svg(const AtfDiagram& d);

}  // namespace lenskit
