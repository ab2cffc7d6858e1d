#include "hbl/wreath.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace hbl {

namespace wreath_detail {

std::string coord_str(std::int64_t c) { return std::to_string(c); }

std::string coord_str(std::pair<std::int32_t, std::int32_t> c) {
  return std::to_string(c.first) + "|" + std::to_string(c.second);
}

std::int64_t coord_parse_z(std::string_view s) {
  std::int64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("wreath: bad coordinate");
  return v;
}

std::pair<std::int32_t, std::int32_t> coord_parse_z2(std::string_view s) {
  auto bar = s.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("wreath: bad coordinate");
  return {static_cast<std::int32_t>(coord_parse_z(s.substr(0, bar))),
          static_cast<std::int32_t>(coord_parse_z(s.substr(bar + 1)))};
}

namespace {

template <class Elem, class CoordParse>
Elem decode_impl(std::string_view s, unsigned m, CoordParse parse) {
  if (s.rfind("table=", 0) != 0) throw std::invalid_argument("wreath: bad tuple");
  s.remove_prefix(6);
  auto semi = s.find(";head=");
  if (semi == std::string_view::npos) throw std::invalid_argument("wreath: bad tuple");
  std::string_view table = s.substr(0, semi);
  Elem g;
  g.head = parse(s.substr(semi + 6));
  while (!table.empty()) {
    auto comma = table.find(',');
    std::string_view tok = table.substr(0, comma);
    auto colon = tok.rfind(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("wreath: bad table entry");
    unsigned v = 0;
    auto res = std::from_chars(tok.data() + colon + 1, tok.data() + tok.size(), v);
    if (res.ec != std::errc() || v == 0 || v >= m)
      throw std::invalid_argument("wreath: bad table value");
    g.table.emplace_back(parse(tok.substr(0, colon)), static_cast<std::uint8_t>(v));
    if (comma == std::string_view::npos) break;
    table.remove_prefix(comma + 1);
  }
  if (!std::is_sorted(g.table.begin(), g.table.end()))
    throw std::invalid_argument("wreath: table must be sorted");
  return g;
}

}  // namespace
}  // namespace wreath_detail

WreathZ::Element WreathZ::decode(std::string_view s) const {
  return wreath_detail::decode_impl<Element>(s, m_, wreath_detail::coord_parse_z);
}

WreathZ2::Element WreathZ2::decode(std::string_view s) const {
  return wreath_detail::decode_impl<Element>(s, m_, [](std::string_view t) {
    return wreath_detail::coord_parse_z2(t);
  });
}

namespace {

std::int64_t tour_length(std::int64_t left, std::int64_t right, std::int64_t head) {
  std::int64_t left_first = (0 - left) + (right - head);
  std::int64_t right_first = (right - 0) + (head - left);
  return (right - left) + std::min(left_first, right_first);
}

}  // namespace

std::int64_t wreath_z_norm(const WreathZ::Element& g) {
  std::int64_t left = std::min<std::int64_t>(0, g.head);
  std::int64_t right = std::max<std::int64_t>(0, g.head);
  if (!g.table.empty()) {
    left = std::min(left, g.table.front().first);
    right = std::max(right, g.table.back().first);
  }
  return static_cast<std::int64_t>(g.table.size()) + tour_length(left, right, g.head);
}

std::int64_t wreath_z_dist(const WreathZ& w, const WreathZ::Element& g,
                           const WreathZ::Element& h) {
  return wreath_z_norm(w.mul(w.inv(g), h));
}

Theorem1Instance construct_theorem1_instance_z(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("theorem-1 instance needs N >= 2");
  WreathZ w;
  Theorem1Instance out;
  out.g.table = {{-n, 1}, {n, 1}};
  out.g.head = 0;
  out.norm_g = wreath_z_norm(out.g);  // 4N + 2 with this generating set

  // Blocking: inside the trimmed ball, an element with both marks erased
  // cannot have its head in the middle band (farther than N-1 from both
  // marks).  The cheapest such elements are the plain (empty, j), whose
  // distance from g is 2 + tour covering both marks; extra lamps only add.
  auto blocked = [&](std::int64_t c_prime) {
    std::int64_t radius = out.norm_g - c_prime;
    for (std::int64_t j = -3 * n; j <= 3 * n; ++j) {
      bool middle = std::llabs(j - n) > n - 1 && std::llabs(j + n) > n - 1;
      if (!middle) continue;
      std::int64_t d = 2 + tour_length(std::min<std::int64_t>(-n, j),
                                       std::max<std::int64_t>(n, j), j);
      if (d <= radius) return false;
    }
    return true;
  };
  std::int64_t c_prime = 1;
  while (c_prime <= 8 && !blocked(c_prime)) ++c_prime;
  if (c_prime > 8) throw InvariantViolation("theorem-1 instance: no blocking trim found");
  out.c_prime = c_prime;
  out.trim_radius = out.norm_g - c_prime;

  // Erase the two marks in the two orders; park the head just past the
  // origin on the side reached last, at the edge of the trimmed ball.
  out.g1.head = -c_prime;  // erased +N first, then -N, walked back right
  out.g2.head = c_prime;   // erased -N first, then +N, walked back left
  return out;
}

Theorem1InstanceZ2 construct_theorem1_instance_z2(std::int64_t n, std::int64_t c_prime) {
  if (n < 2) throw std::invalid_argument("theorem-1 instance needs N >= 2");
  Theorem1InstanceZ2 out;
  auto xi = [](std::int64_t v) {
    return std::pair<std::int32_t, std::int32_t>{static_cast<std::int32_t>(v), 0};
  };
  out.g.table = {{xi(-n), 1}, {xi(n), 1}};
  std::sort(out.g.table.begin(), out.g.table.end());
  out.g.head = xi(0);
  out.g1.head = xi(-c_prime);
  out.g2.head = xi(c_prime);
  return out;
}

}  // namespace hbl
