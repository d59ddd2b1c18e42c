#include "apollo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace apollo {

namespace {

struct Circle2 {
  double x, y, r;
};
struct HalfPlane2 {
  double nx, ny, c;  // region <q, n> >= c
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v == 0 ? 0.0 : v);  // avoid "-0"
  return buf;
}

/// Clips the viewport rectangle against <q,n> >= c (Sutherland-Hodgman).
std::vector<std::pair<double, double>> clip_rect(double x0, double y0, double x1, double y1,
                                                 const HalfPlane2& h) {
  std::vector<std::pair<double, double>> poly{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  std::vector<std::pair<double, double>> out;
  auto inside = [&](const std::pair<double, double>& p) {
    return h.nx * p.first + h.ny * p.second >= h.c;
  };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    auto a = poly[i], b = poly[(i + 1) % poly.size()];
    bool ia = inside(a), ib = inside(b);
    if (ia) out.push_back(a);
    if (ia != ib) {
      double da = h.nx * a.first + h.ny * a.second - h.c;
      double db = h.nx * b.first + h.ny * b.second - h.c;
      double t = da / (da - db);
      out.emplace_back(a.first + t * (b.first - a.first), a.second + t * (b.second - a.second));
    }
  }
  return out;
}

}  // namespace

std::string render_packing_svg(const Packing<double>& p,
                               const std::optional<CrossSectionPlane>& plane) {
  std::vector<Circle2> circles;
  std::vector<HalfPlane2> halves;

  if (p.dim == 2) {
    for (const auto& b : p.balls) {
      if (b.finite())
        circles.push_back({b.point[0], b.point[1], b.radius()});
      else
        halves.push_back({b.point[0], b.point[1], b.offset});
    }
  } else if (p.dim == 3) {
    if (!plane) throw std::invalid_argument("render: 3-dimensional packings need a cross-section plane");
    std::vector<double> n = plane->normal;
    if (int(n.size()) != 3) throw std::invalid_argument("render: plane normal must have 3 entries");
    double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (len == 0) throw std::invalid_argument("render: zero plane normal");
    for (double& x : n) x /= len;
    const double off = plane->offset / len;
    // orthonormal in-plane basis, deterministically from the first usable axis
    std::vector<double> u(3, 0.0), v(3, 0.0);
    for (int k = 0; k < 3; ++k) {
      std::vector<double> cand(3, 0.0);
      cand[k] = 1;
      double pr = cand[0] * n[0] + cand[1] * n[1] + cand[2] * n[2];
      for (int l = 0; l < 3; ++l) cand[l] -= pr * n[l];
      double m = std::sqrt(cand[0] * cand[0] + cand[1] * cand[1] + cand[2] * cand[2]);
      if (m > 0.5) {
        for (int l = 0; l < 3; ++l) u[l] = cand[l] / m;
        break;
      }
    }
    v = {n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0]};
    std::vector<double> p0 = {n[0] * off, n[1] * off, n[2] * off};

    for (const auto& b : p.balls) {
      if (b.finite()) {
        double h = b.point[0] * n[0] + b.point[1] * n[1] + b.point[2] * n[2] - off;
        double r = b.radius();
        if (std::abs(h) >= r) continue;  // plane misses the ball
        double rho = std::sqrt(r * r - h * h);
        std::vector<double> q(3);
        for (int k = 0; k < 3; ++k) q[k] = b.point[k] - h * n[k] - p0[k];
        circles.push_back({q[0] * u[0] + q[1] * u[1] + q[2] * u[2],
                           q[0] * v[0] + q[1] * v[1] + q[2] * v[2], rho});
      } else {
        double mu = b.point[0] * u[0] + b.point[1] * u[1] + b.point[2] * u[2];
        double mv = b.point[0] * v[0] + b.point[1] * v[1] + b.point[2] * v[2];
        double beta = b.offset - (b.point[0] * p0[0] + b.point[1] * p0[1] + b.point[2] * p0[2]);
        if (std::hypot(mu, mv) < 1e-12) continue;  // section parallel to the boundary
        halves.push_back({mu, mv, beta});
      }
    }
  } else {
    throw std::invalid_argument("render: only 2- and 3-dimensional packings are drawable");
  }

  double x0 = -2, y0 = -2, x1 = 2, y1 = 2;
  if (!circles.empty()) {
    x0 = y0 = 1e300;
    x1 = y1 = -1e300;
    for (const auto& c : circles) {
      x0 = std::min(x0, c.x - c.r);
      x1 = std::max(x1, c.x + c.r);
      y0 = std::min(y0, c.y - c.r);
      y1 = std::max(y1, c.y + c.r);
    }
    double mx = 0.1 * std::max(x1 - x0, y1 - y0) + 0.1;
    x0 -= mx, y0 -= mx, x1 += mx, y1 += mx;
  }

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
  svg += fmt(x0) + " " + fmt(y0) + " " + fmt(x1 - x0) + " " + fmt(y1 - y0) + "\">\n";
  const double stroke = std::max(x1 - x0, y1 - y0) / 400.0;
  for (const auto& h : halves) {
    auto poly = clip_rect(x0, y0, x1, y1, h);
    if (poly.size() < 3) continue;
    svg += "<polygon fill=\"#dddddd\" stroke=\"black\" stroke-width=\"" + fmt(stroke) +
           "\" points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (i) svg += ' ';
      svg += fmt(poly[i].first) + "," + fmt(poly[i].second);
    }
    svg += "\"/>\n";
  }
  for (const auto& c : circles) {
    svg += "<circle fill=\"none\" stroke=\"black\" stroke-width=\"" + fmt(stroke) + "\" cx=\"" +
           fmt(c.x) + "\" cy=\"" + fmt(c.y) + "\" r=\"" + fmt(c.r) + "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace apollo
