#include "lenskit/atf.hpp"
#include "lenskit/error.hpp"
#include "lenskit/json.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace lenskit {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string to_svg(const AtfDiagram& d) {
  if (d.vertices.empty()) fail(ErrorKind::Precondition, "empty diagram");
  double minx = d.vertices[0].x.get_d(), maxx = minx;
  double miny = d.vertices[0].y.get_d(), maxy = miny;
  for (const auto& v : d.vertices) {
    minx = std::min(minx, v.x.get_d());
    maxx = std::max(maxx, v.x.get_d());
    miny = std::min(miny, v.y.get_d());
    maxy = std::max(maxy, v.y.get_d());
  }
  const double size = 480, margin = 40;
  double span = std::max({maxx - minx, maxy - miny, 1e-9});
  double k = (size - 2 * margin) / span;
  auto X = [&](const Rat& x) { return num(margin + (x.get_d() - minx) * k); };
  auto Y = [&](const Rat& y) { return num(size - margin - (y.get_d() - miny) * k); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "<!-- lenskit-atf " << to_json(d).dump() << " -->\n";
  os << "<polygon fill=\"#f4f1ea\" stroke=\"#222\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < d.vertices.size(); ++i)
    os << (i ? " " : "") << X(d.vertices[i].x) << ',' << Y(d.vertices[i].y);
  os << "\"/>\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const auto& n = d.nodes[i];
    os << "<line x1=\"" << X(n.position.x) << "\" y1=\"" << Y(n.position.y) << "\" x2=\"" << X(n.cut_end.x)
       << "\" y2=\"" << Y(n.cut_end.y) << "\" stroke=\"#555\" stroke-dasharray=\"6,4\"/>\n";
    double cx = margin + (n.position.x.get_d() - minx) * k;
    double cy = size - margin - (n.position.y.get_d() - miny) * k;
    os << "<path d=\"M" << num(cx - 5) << ',' << num(cy - 5) << " L" << num(cx + 5) << ',' << num(cy + 5) << " M"
       << num(cx - 5) << ',' << num(cy + 5) << " L" << num(cx + 5) << ',' << num(cy - 5)
       << "\" stroke=\"#b00\" stroke-width=\"2\"/>\n";
    std::string label;
    try {
      label = node_boundary_lens(d, i).str();
    } catch (const Error&) {
      label = "?";
    }
    os << "<text x=\"" << num(cx + 8) << "\" y=\"" << num(cy - 8) << "\" font-family=\"sans-serif\" font-size=\"12\">"
       << label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace lenskit
