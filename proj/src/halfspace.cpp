#include "hbl/halfspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hbl {

namespace {

std::int64_t cross(Vec2 o, Vec2 a, Vec2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;  // counterclockwise
}

Vec2 primitive(Vec2 v) {
  std::int64_t g = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
  if (g > 1) return {v.x / g, v.y / g};
  return v;
}

}  // namespace

std::vector<Vec2> halfspace_candidates(const std::vector<Vec2>& gens) {
  auto hull = convex_hull(gens);
  std::vector<Vec2> cands;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (!(hull[i] == Vec2{0, 0})) cands.push_back(primitive(hull[i]));
    if (hull.size() >= 2) {
      Vec2 a = hull[i], b = hull[(i + 1) % hull.size()];
      Vec2 n{b.y - a.y, a.x - b.x};  // outward for a counterclockwise hull
      if (!(n == Vec2{0, 0})) cands.push_back(primitive(n));
    }
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  if (cands.empty()) throw std::invalid_argument("halfspace: degenerate generator set");
  return cands;
}

std::int64_t halfspace_deficit(const std::vector<Vec2>& points, const std::vector<Vec2>& gens,
                               Vec2 u) {
  std::int64_t speed = 0;
  for (const auto& s : gens) speed = std::max(speed, u.x * s.x + u.y * s.y);
  std::int64_t k = 0;
  for (std::size_t t = 0; t < points.size(); ++t) {
    std::int64_t lhs = u.x * points[t].x + u.y * points[t].y;
    k = std::max(k, static_cast<std::int64_t>(t) * speed - lhs);
  }
  return k;
}

std::optional<HalfspaceCertificate> halfspace_certificate(const std::vector<Vec2>& points,
                                                          const std::vector<Vec2>& gens,
                                                          std::int64_t k_max) {
  if (points.empty() || !(points.front() == Vec2{0, 0}))
    throw std::invalid_argument("halfspace: path must start at the origin");
  std::optional<HalfspaceCertificate> best;
  for (const auto& u : halfspace_candidates(gens)) {
    std::int64_t k = halfspace_deficit(points, gens, u);
    if (!best || k < best->k) best = HalfspaceCertificate{u, k};
  }
  if (best && best->k <= k_max) return best;
  return std::nullopt;
}

}  // namespace hbl
