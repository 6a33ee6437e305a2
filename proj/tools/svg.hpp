#pragma once

// Minimal SVG writer for the planar constructions: body outlined, barrier
// stroked, convexification outlined boldly.

#include <opaque/measures.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

namespace opaque::svg {

struct Scene {
  const Polytope* body = nullptr;
  const Barrier* barrier = nullptr;
  const Polytope* convexification = nullptr;
};

inline void write_scene(const std::string& path, const Scene& scene) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  auto grow = [&](const Vec3& p) {
    x0 = std::min(x0, p.x());
    x1 = std::max(x1, p.x());
    y0 = std::min(y0, p.y());
    y1 = std::max(y1, p.y());
  };
  if (scene.body)
    for (const auto& v : scene.body->vertices) grow(v);
  if (scene.convexification)
    for (const auto& v : scene.convexification->vertices) grow(v);
  if (scene.barrier)
    for (const auto& p : scene.barrier->pieces)
      for (int k = 0; k < p.npts; ++k) grow(p.p[k]);
  if (x0 > x1) {
    x0 = y0 = -1;
    x1 = y1 = 1;
  }
  double mx = 0.05 * std::max(x1 - x0, y1 - y0);
  x0 -= mx;
  y0 -= mx;
  x1 += mx;
  y1 += mx;
  double W = x1 - x0, H = y1 - y0;
  double stroke = 0.004 * std::max(W, H);

  std::ostringstream os;
  os.precision(10);
  // y axis flipped so the mathematical orientation matches the picture
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << ' ' << -y1 << ' '
     << W << ' ' << H << "\" width=\"640\" height=\"" << 640.0 * H / W << "\">\n";

  auto polygon_path = [&](const Polytope& P, const char* color, double width) {
    os << "<path d=\"";
    for (std::size_t i = 0; i < P.vertices.size(); ++i) {
      const Vec3& v = P.vertices[i];
      os << (i == 0 ? 'M' : 'L') << v.x() << ' ' << -v.y() << ' ';
    }
    os << "Z\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width << "\"/>\n";
  };

  if (scene.body) polygon_path(*scene.body, "#999999", stroke);
  if (scene.barrier)
    for (const auto& p : scene.barrier->pieces)
      os << "<line x1=\"" << p.p[0].x() << "\" y1=\"" << -p.p[0].y() << "\" x2=\""
         << p.p[1].x() << "\" y2=\"" << -p.p[1].y() << "\" stroke=\"#c03030\" stroke-width=\""
         << 1.5 * stroke << "\"/>\n";
  if (scene.convexification) polygon_path(*scene.convexification, "#000000", 2.5 * stroke);
  os << "</svg>\n";

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write svg: " + path);
  out << os.str();
}

}  // namespace opaque::svg
