#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hbl/common.hpp"
#include "hbl/word.hpp"

namespace hbl {

// Lamplighter group Z2 wr Z with the walking generators
//   a = move right, b = move right flipping the lamp on the traversed edge,
// plus inverses and the identity.  Lamps live on edges of Z at half-integer
// positions; the lamp at k+1/2 is stored as the odd integer 2k+1 so all
// coordinates stay integral.
struct LampElem {
  std::vector<std::int32_t> lamps;  // sorted odd integers, no duplicates
  std::int32_t head = 0;

  friend bool operator==(const LampElem&, const LampElem&) = default;
  friend auto operator<=>(const LampElem&, const LampElem&) = default;
};

struct Lamplighter {
  using Element = LampElem;

  Element identity() const { return {}; }
  Element mul(const Element& g, const Element& h) const;
  Element inv(const Element& g) const;

  // Generator order: e, a, b, a^-1, b^-1.
  const std::vector<Element>& generators() const;
  std::size_t inverse_index(std::size_t i) const { return i == 0 ? 0 : (i <= 2 ? i + 2 : i - 2); }

  std::string id_string() const { return "lamplighter"; }
  std::string encode(const Element& g) const;   // lamps=<sorted odd ints>;head=<int>
  Element decode(std::string_view s) const;

  char letter(std::size_t i) const { return "eabAB"[i]; }
  std::size_t letter_index(char c) const;

  std::uint64_t hash(const Element& g) const {
    std::uint64_t h = hash_mix(0x517cc1b727220a95ull, static_cast<std::uint64_t>(g.head));
    for (auto l : g.lamps) h = hash_mix(h, static_cast<std::uint64_t>(l));
    return h;
  }
  std::size_t approx_element_bytes() const { return sizeof(Element) + 96; }

 private:
  mutable std::vector<Element> gens_;
};

std::int32_t lamp_head(const LampElem& g);

// Exact word norm: the head must start at 0, traverse every lit edge, and
// finish at head(g); toggles ride along for free.  Two-sweep walk formula,
// validated exhaustively against BFS in the tests.
std::int64_t lamp_norm(const LampElem& g);

// Distance helper d(g,h) = |g^-1 h| through the closed form.
std::int64_t lamp_dist(const LampElem& g, const LampElem& h);

// Prefix membership for the geodesic language
//   (a+b)* (ab' + ba') (a'+b')^w  +  (a'+b')* (b'a + a'b) (a+b)^w
// (primes denote inverses): a sweep, a pivot pair flipping the peak lamp,
// then the opposite sweep forever.
bool lamp_geodesic_prefix_member(const Word& w);

// Center/radius of the origin-grazing ball family whose window limits give
// the horoball { head < 0 }: center has head N and one lamp at -N+1/2,
// radius 3N-1.
std::pair<LampElem, std::int64_t> lamplighter_horoball_family(std::int64_t n);

}  // namespace hbl
