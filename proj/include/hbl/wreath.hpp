#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hbl/common.hpp"

namespace hbl {

// Wreath products H wr K for cyclic H = Z_m and K in {Z, Z^2}, with the
// walk-or-write generating set {e} u {translations by K generators}
// u {write h at the head : h != e_H}.  Elements are cofinitely-trivial
// labelings plus a head.

template <class Coord>
struct WreathElem {
  std::vector<std::pair<Coord, std::uint8_t>> table;  // sorted by coord, values in [1,m)
  Coord head{};

  friend bool operator==(const WreathElem&, const WreathElem&) = default;
  friend auto operator<=>(const WreathElem&, const WreathElem&) = default;
};

namespace wreath_detail {

inline std::int64_t coord_add(std::int64_t a, std::int64_t b) { return a + b; }
inline std::int64_t coord_neg(std::int64_t a) { return -a; }
inline std::pair<std::int32_t, std::int32_t> coord_add(std::pair<std::int32_t, std::int32_t> a,
                                                       std::pair<std::int32_t, std::int32_t> b) {
  return {a.first + b.first, a.second + b.second};
}
inline std::pair<std::int32_t, std::int32_t> coord_neg(std::pair<std::int32_t, std::int32_t> a) {
  return {-a.first, -a.second};
}

std::string coord_str(std::int64_t c);
std::string coord_str(std::pair<std::int32_t, std::int32_t> c);
std::int64_t coord_parse_z(std::string_view s);
std::pair<std::int32_t, std::int32_t> coord_parse_z2(std::string_view s);

}  // namespace wreath_detail

template <class Coord, class Derived>
struct WreathBase {
  using Element = WreathElem<Coord>;

  explicit WreathBase(unsigned lamp_modulus) : m_(lamp_modulus) {
    if (lamp_modulus < 2) throw std::invalid_argument("wreath: lamp group needs order >= 2");
  }

  unsigned lamp_modulus() const { return m_; }

  Element identity() const { return {}; }

  Element mul(const Element& g, const Element& h) const {
    Element r;
    r.head = wreath_detail::coord_add(g.head, h.head);
    r.table.reserve(g.table.size() + h.table.size());
    std::size_t i = 0, j = 0;
    while (i < g.table.size() || j < h.table.size()) {
      bool take_g;
      Coord hc{};
      if (j < h.table.size()) hc = wreath_detail::coord_add(h.table[j].first, g.head);
      if (i >= g.table.size()) take_g = false;
      else if (j >= h.table.size()) take_g = true;
      else if (g.table[i].first == hc) {
        auto v = static_cast<std::uint8_t>((g.table[i].second + h.table[j].second) % m_);
        if (v != 0) r.table.emplace_back(g.table[i].first, v);
        ++i;
        ++j;
        continue;
      } else
        take_g = g.table[i].first < hc;
      if (take_g) {
        r.table.push_back(g.table[i]);
        ++i;
      } else {
        r.table.emplace_back(hc, h.table[j].second);
        ++j;
      }
    }
    return r;
  }

  Element inv(const Element& g) const {
    Element r;
    r.head = wreath_detail::coord_neg(g.head);
    r.table.reserve(g.table.size());
    for (const auto& [c, v] : g.table)
      r.table.emplace_back(wreath_detail::coord_add(c, r.head),
                           static_cast<std::uint8_t>(m_ - v));
    std::sort(r.table.begin(), r.table.end());
    return r;
  }

  std::string encode(const Element& g) const {
    std::string s = "table=";
    for (std::size_t i = 0; i < g.table.size(); ++i) {
      if (i) s += ',';
      s += wreath_detail::coord_str(g.table[i].first);
      s += ':';
      s += std::to_string(g.table[i].second);
    }
    s += ";head=";
    s += wreath_detail::coord_str(g.head);
    return s;
  }

  std::uint64_t hash(const Element& g) const {
    std::uint64_t h = 0x2545f4914f6cdd1dull;
    h = hash_mix(h, Derived::coord_hash(g.head));
    for (const auto& [c, v] : g.table) h = hash_mix(hash_mix(h, Derived::coord_hash(c)), v);
    return h;
  }

  std::size_t approx_element_bytes() const { return sizeof(Element) + 96; }

  char letter(std::size_t i) const {
    return i < 36 ? "etTuUwxyzWXYZ0123456789abcdfghijklmn"[i] : '?';
  }

 protected:
  unsigned m_;
};

struct WreathZ : WreathBase<std::int64_t, WreathZ> {
  explicit WreathZ(unsigned lamp_modulus = 2) : WreathBase(lamp_modulus) {}

  // Generators: e, t+, t-, then writes 1..m-1.
  const std::vector<Element>& generators() const {
    if (gens_.empty()) {
      gens_.push_back({});
      gens_.push_back({{}, 1});
      gens_.push_back({{}, -1});
      for (unsigned v = 1; v < m_; ++v) gens_.push_back({{{0, std::uint8_t(v)}}, 0});
    }
    return gens_;
  }
  std::size_t inverse_index(std::size_t i) const {
    if (i == 0) return 0;
    if (i == 1) return 2;
    if (i == 2) return 1;
    return 3 + (m_ - 1 - (i - 3) - 1);  // write v <-> write m-v
  }
  std::string id_string() const { return "wreath(z" + std::to_string(m_) + ",z)"; }
  Element decode(std::string_view s) const;
  static std::uint64_t coord_hash(std::int64_t c) { return static_cast<std::uint64_t>(c); }

 private:
  mutable std::vector<Element> gens_;
};

struct WreathZ2 : WreathBase<std::pair<std::int32_t, std::int32_t>, WreathZ2> {
  explicit WreathZ2(unsigned lamp_modulus = 2) : WreathBase(lamp_modulus) {}

  const std::vector<Element>& generators() const {
    if (gens_.empty()) {
      gens_.push_back({});
      gens_.push_back({{}, {1, 0}});
      gens_.push_back({{}, {-1, 0}});
      gens_.push_back({{}, {0, 1}});
      gens_.push_back({{}, {0, -1}});
      for (unsigned v = 1; v < m_; ++v) gens_.push_back({{{{0, 0}, std::uint8_t(v)}}, {0, 0}});
    }
    return gens_;
  }
  std::size_t inverse_index(std::size_t i) const {
    if (i == 0) return 0;
    if (i <= 4) return ((i - 1) ^ 1u) + 1;
    return 5 + (m_ - 1 - (i - 5) - 1);
  }
  std::string id_string() const { return "wreath(z" + std::to_string(m_) + ",z2)"; }
  Element decode(std::string_view s) const;
  static std::uint64_t coord_hash(std::pair<std::int32_t, std::int32_t> c) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.first)) << 32) |
           static_cast<std::uint32_t>(c.second);
  }

 private:
  mutable std::vector<Element> gens_;
};

// Exact norm for K = Z: one write per support entry plus the shortest walk
// from 0 to the head covering every support coordinate.
std::int64_t wreath_z_norm(const WreathZ::Element& g);
std::int64_t wreath_z_dist(const WreathZ& w, const WreathZ::Element& g,
                           const WreathZ::Element& h);

// The disconnected-horoball instance: lamps at K-distance N on both sides of
// the origin, head at the origin, plus the two partially-unloaded elements
// obtained by erasing the far lamp first (g1: ends left, g2: ends right).
struct Theorem1Instance {
  WreathZ::Element g;
  WreathZ::Element g1;
  WreathZ::Element g2;
  std::int64_t norm_g = 0;        // exact |g|
  std::int64_t c_prime = 0;       // smallest trim for which blocking holds
  std::int64_t trim_radius = 0;   // |g| - c_prime
};

Theorem1Instance construct_theorem1_instance_z(std::int64_t n);

// Same construction along the x-axis of K = Z^2 (construction only).
struct Theorem1InstanceZ2 {
  WreathZ2::Element g;
  WreathZ2::Element g1;
  WreathZ2::Element g2;
};
Theorem1InstanceZ2 construct_theorem1_instance_z2(std::int64_t n, std::int64_t c_prime);

}  // namespace hbl
