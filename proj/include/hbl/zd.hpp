#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hbl/common.hpp"

namespace hbl {

// Z^D with the l1 generating set {e, +-e_i}.
template <int D>
struct Zd {
  using Element = std::array<std::int64_t, D>;

  Element identity() const { return {}; }
  Element mul(const Element& g, const Element& h) const {
    Element r;
    for (int i = 0; i < D; ++i) r[i] = g[i] + h[i];
    return r;
  }
  Element inv(const Element& g) const {
    Element r;
    for (int i = 0; i < D; ++i) r[i] = -g[i];
    return r;
  }
  const std::vector<Element>& generators() const {
    if (gens_.empty()) {
      gens_.push_back(identity());
      for (int i = 0; i < D; ++i) {
        Element e{};
        e[i] = 1;
        gens_.push_back(e);
      }
      for (int i = 0; i < D; ++i) {
        Element e{};
        e[i] = -1;
        gens_.push_back(e);
      }
    }
    return gens_;
  }
  std::size_t inverse_index(std::size_t i) const {
    if (i == 0) return 0;
    return i <= D ? i + D : i - D;
  }
  std::string id_string() const { return "zd(" + std::to_string(D) + ")"; }
  std::string encode(const Element& g) const {
    std::string s;
    for (int i = 0; i < D; ++i) {
      if (i) s += ',';
      s += std::to_string(g[i]);
    }
    return s;
  }
  Element decode(std::string_view s) const {
    Element g{};
    for (int i = 0; i < D; ++i) {
      auto comma = s.find(',');
      std::string_view tok = s.substr(0, comma);
      auto res = std::from_chars(tok.data(), tok.data() + tok.size(), g[i]);
      if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        throw std::invalid_argument("zd: bad tuple");
      if (i + 1 < D) {
        if (comma == std::string_view::npos) throw std::invalid_argument("zd: bad tuple");
        s.remove_prefix(comma + 1);
      } else if (comma != std::string_view::npos) {
        throw std::invalid_argument("zd: bad tuple");
      }
    }
    return g;
  }
  char letter(std::size_t i) const {
    if constexpr (D == 2) return "eENWS"[i];
    return i < 36 ? "0123456789abcdefghijklmnopqrstuvwxyz"[i] : '?';
  }
  std::size_t letter_index(char c) const {
    if constexpr (D == 2) {
      switch (c) {
        case 'e': return 0;
        case 'E': return 1;
        case 'N': return 2;
        case 'W': return 3;
        case 'S': return 4;
      }
    }
    throw std::invalid_argument("zd: unknown letter");
  }
  std::uint64_t hash(const Element& g) const {
    std::uint64_t h = 0x6a09e667f3bcc909ull;
    for (int i = 0; i < D; ++i) h = hash_mix(h, static_cast<std::uint64_t>(g[i]));
    return h;
  }
  std::size_t approx_element_bytes() const { return sizeof(Element) + 48; }

 private:
  mutable std::vector<Element> gens_;
};

template <int D>
std::int64_t zd_norm(const typename Zd<D>::Element& g) {
  std::int64_t n = 0;
  for (int i = 0; i < D; ++i) n += g[i] < 0 ? -g[i] : g[i];
  return n;
}

}  // namespace hbl
