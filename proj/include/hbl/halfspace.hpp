#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hbl {

struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

// Linear functional u with deficit k certifying linear-speed escape:
//   u . p(t) >= t * max_s(u . s) - k  for every point of the path.
struct HalfspaceCertificate {
  Vec2 u;
  std::int64_t k = 0;
};

// Searches the finitely many combinatorial types of optimal functionals:
// outward normals of the generator hull's edges plus the hull vertices
// themselves, in exact integer arithmetic.  Returns the best certificate if
// its deficit is at most k_max.
std::optional<HalfspaceCertificate> halfspace_certificate(const std::vector<Vec2>& points,
                                                          const std::vector<Vec2>& gens,
                                                          std::int64_t k_max);

// Deficit of a fixed functional over the path (max over t).
std::int64_t halfspace_deficit(const std::vector<Vec2>& points, const std::vector<Vec2>& gens,
                               Vec2 u);

// Candidate functionals for a generator set (deduplicated, primitive).
std::vector<Vec2> halfspace_candidates(const std::vector<Vec2>& gens);

}  // namespace hbl
