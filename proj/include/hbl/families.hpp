#pragma once

#include <cmath>

#include "hbl/heisenberg.hpp"
#include "hbl/lamplighter.hpp"
#include "hbl/window.hpp"

namespace hbl {

// The grazing-ball family whose window limits give P = H3 \ ({0}x{0}xN):
// centers (0,0,-(2N^2+1)) with radius |(0,0,2N^2+1)| - 1 (one less than the
// formula norm, so the origin is excluded while (0,0,-1) is kept).
// Distances from the odd-coset center are taken through the formula norm,
// which extends the word metric to the full central extension.
inline BallFamily<H3> h3_central_family() {
  return {"h3-central", [](std::int64_t n) {
            std::int64_t c = 2 * n * n + 1;
            return std::make_pair(h3(0, 0, -c), h3_norm(h3(0, 0, c)) - 1);
          }};
}

inline std::int64_t h3_family_norm(std::int64_t n) { return h3_norm(h3(0, 0, 2 * n * n + 1)); }

inline BallFamily<Lamplighter> lamplighter_3n_family() {
  return {"lamplighter-3n", [](std::int64_t n) { return lamplighter_horoball_family(n); }};
}

inline BallFamily<H3> constant_family() {
  return {"constant", [](std::int64_t n) { return std::make_pair(H3().identity(), n); }};
}

// Predicted horoballs evaluated pointwise on a window.
inline WindowSet<H3> predicted_p_h3(const H3& g, const WindowPtr<H3>& w) {
  return window_set_by(g, w, [](const H3Elem& e) {
    bool excluded = e.a[0] == 0 && e.b[0] == 0 && e.c >= 0;
    return excluded ? Status::OUT : Status::IN;
  });
}

inline WindowSet<Lamplighter> predicted_p_lamp(const Lamplighter& g,
                                               const WindowPtr<Lamplighter>& w) {
  return window_set_by(g, w,
                       [](const LampElem& e) { return e.head < 0 ? Status::IN : Status::OUT; });
}

// Coordinate-box windows.
inline WindowPtr<H3> h3_box_window(const H3& g, std::int64_t amax, std::int64_t bmax,
                                   std::int64_t cmax) {
  std::vector<H3Elem> es;
  for (std::int64_t a = -amax; a <= amax; ++a)
    for (std::int64_t b = -bmax; b <= bmax; ++b)
      for (std::int64_t c = -cmax; c <= cmax; ++c) es.push_back(h3(a, b, c));
  return std::make_shared<Window<H3>>(g, "box(" + std::to_string(amax) + "," +
                                             std::to_string(bmax) + "," + std::to_string(cmax) + ")",
                                      std::move(es));
}

// Heads in [-w,w], lamps on edges within [-w,w] (stored odd coordinates in
// [-2w+1, 2w-1]); all lamp subsets enumerated.
inline WindowPtr<Lamplighter> lamplighter_box_window(const Lamplighter& g, std::int64_t w) {
  if (w < 0 || w > 10) throw std::invalid_argument("lamplighter window: need 0 <= w <= 10");
  std::vector<std::int32_t> edges;
  for (std::int32_t l = static_cast<std::int32_t>(-2 * w + 1); l <= 2 * w - 1; l += 2)
    edges.push_back(l);
  std::vector<LampElem> es;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask)
    for (std::int32_t head = static_cast<std::int32_t>(-w); head <= w; ++head) {
      LampElem e;
      e.head = head;
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (mask & (1u << i)) e.lamps.push_back(edges[i]);
      es.push_back(std::move(e));
    }
  return std::make_shared<Window<Lamplighter>>(g, "lampbox(" + std::to_string(w) + ")",
                                               std::move(es));
}

// Busemann ray prefixes, long enough for certificates up to n_max.
inline Word h3_east_ray(std::int64_t n) { return Word(static_cast<std::size_t>(n), 1); }
inline Word lamp_left_ray(std::int64_t n) { return Word(static_cast<std::size_t>(n), 3); }

// The reversed grazing geodesic: sweep left flipping the lamp at -N+1/2,
// then walk right forever.
inline Word lamp_gn_reversed_ray(std::int64_t big_n, std::int64_t len) {
  Word w;
  for (std::int64_t i = 0; i + 1 < big_n; ++i) w.push_back(3);  // a^-1
  w.push_back(4);                                               // b^-1 flips -N+1/2
  while (static_cast<std::int64_t>(w.size()) < len) w.push_back(1);  // a
  return w;
}

// Deficit-certificate horizons (the scan length after which a positive
// deficit tail certifies OUT for these families).
inline std::int64_t h3_ray_horizon(const H3Elem& e) {
  auto abs64 = [](std::int64_t v) { return v < 0 ? -v : v; };
  return abs64(e.a[0]) + abs64(e.b[0]) + abs64(e.c) + 6;
}

inline std::int64_t lamp_ray_horizon(const LampElem& e) {
  std::int64_t reach = std::abs(std::int64_t(e.head));
  if (!e.lamps.empty())
    reach = std::max({reach, std::abs(std::int64_t(e.lamps.front())) / 2 + 1,
                      std::abs(std::int64_t(e.lamps.back())) / 2 + 1});
  return reach + lamp_norm(e) + 2;
}

// The reversed ray turns around at -N; deficits settle only once its head
// has passed back beyond the element's reach, 2N steps later.
inline std::int64_t lamp_gn_reversed_horizon(std::int64_t big_n, const LampElem& e) {
  return 2 * big_n + lamp_ray_horizon(e);
}

}  // namespace hbl
