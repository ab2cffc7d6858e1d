#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hbl/common.hpp"
#include "hbl/word.hpp"

namespace hbl {

// Discrete Heisenberg group H_{2N+1} in doubled central coordinates:
//   (a,b,c)(a',b',c') = (a+a', b+b', c+c' + (a.b' - a'.b)).
// Central coordinates are doubled so that c equals twice the signed area of
// the planar projection; words over the standard generators reach exactly the
// triples with c = a.b (mod 2).  The element type itself admits all integer
// triples (the full central extension of Z^2N), which is needed to express
// ball centers such as (0,0,-2N^2-1) that live in the odd coset.
template <int N>
struct HeisElem {
  std::array<std::int64_t, N> a{};
  std::array<std::int64_t, N> b{};
  std::int64_t c = 0;

  friend bool operator==(const HeisElem&, const HeisElem&) = default;
  friend auto operator<=>(const HeisElem&, const HeisElem&) = default;
};

using H3Elem = HeisElem<1>;

inline H3Elem h3(std::int64_t a, std::int64_t b, std::int64_t c) { return H3Elem{{a}, {b}, c}; }

template <int N>
struct Heisenberg {
  using Element = HeisElem<N>;
  static constexpr int rank = N;

  Element identity() const { return {}; }

  Element mul(const Element& g, const Element& h) const {
    Element r;
    __int128 cross = 0;
    for (int i = 0; i < N; ++i) {
      r.a[i] = g.a[i] + h.a[i];
      r.b[i] = g.b[i] + h.b[i];
      cross += static_cast<__int128>(g.a[i]) * h.b[i];
      cross -= static_cast<__int128>(h.a[i]) * g.b[i];
    }
    __int128 c = static_cast<__int128>(g.c) + h.c + cross;
    if (c > INT64_MAX || c < INT64_MIN) throw std::overflow_error("heisenberg: height overflow");
    r.c = static_cast<std::int64_t>(c);
    return r;
  }

  Element inv(const Element& g) const {
    Element r;
    for (int i = 0; i < N; ++i) {
      r.a[i] = -g.a[i];
      r.b[i] = -g.b[i];
    }
    r.c = -g.c;
    return r;
  }

  // Canonical generator order: e, +a_1..+a_N, +b_1..+b_N, then the negatives.
  const std::vector<Element>& generators() const {
    if (gens_.empty()) {
      gens_.push_back(identity());
      for (int i = 0; i < N; ++i) {
        Element e;
        e.a[i] = 1;
        gens_.push_back(e);
      }
      for (int i = 0; i < N; ++i) {
        Element e;
        e.b[i] = 1;
        gens_.push_back(e);
      }
      for (std::size_t i = 1; i <= std::size_t(2 * N); ++i) gens_.push_back(inv(gens_[i]));
    }
    return gens_;
  }

  std::size_t inverse_index(std::size_t i) const {
    if (i == 0) return 0;
    return i <= std::size_t(2 * N) ? i + 2 * N : i - 2 * N;
  }

  std::string id_string() const { return "heisenberg(" + std::to_string(N) + ")"; }

  // Tuple codec: "a1,..,aN;b1,..,bN;c".
  std::string encode(const Element& g) const {
    std::string s;
    for (int i = 0; i < N; ++i) {
      if (i) s += ',';
      s += std::to_string(g.a[i]);
    }
    s += ';';
    for (int i = 0; i < N; ++i) {
      if (i) s += ',';
      s += std::to_string(g.b[i]);
    }
    s += ';';
    s += std::to_string(g.c);
    return s;
  }

  Element decode(std::string_view s) const;

  char letter(std::size_t i) const {
    if (N == 1) {
      constexpr char tab[] = {'.', 'E', 'N', 'W', 'S'};
      if (i < 5) return tab[i];
    }
    return i < 36 ? "0123456789abcdefghijklmnopqrstuvwxyz"[i] : '?';
  }

  std::size_t letter_index(char c) const {
    if (N == 1) {
      switch (c) {
        case '.': return 0;
        case 'E': return 1;
        case 'N': return 2;
        case 'W': return 3;
        case 'S': return 4;
      }
    }
    throw std::invalid_argument("heisenberg: unknown move letter");
  }

  std::uint64_t hash(const Element& g) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < N; ++i) {
      h = hash_mix(h, static_cast<std::uint64_t>(g.a[i]));
      h = hash_mix(h, static_cast<std::uint64_t>(g.b[i]));
    }
    return hash_mix(h, static_cast<std::uint64_t>(g.c));
  }

  std::size_t approx_element_bytes() const { return sizeof(Element) + 48; }

 private:
  mutable std::vector<Element> gens_;
};

using H3 = Heisenberg<1>;

template <int N>
typename Heisenberg<N>::Element Heisenberg<N>::decode(std::string_view s) const {
  Element g;
  auto take_int = [&s](std::int64_t& out) {
    std::size_t used = 0;
    while (used < s.size() && s[used] != ',' && s[used] != ';') ++used;
    auto res = std::from_chars(s.data(), s.data() + used, out);
    if (res.ec != std::errc() || res.ptr != s.data() + used)
      throw std::invalid_argument("heisenberg: bad tuple");
    s.remove_prefix(used);
  };
  auto expect = [&s](char c) {
    if (s.empty() || s.front() != c) throw std::invalid_argument("heisenberg: bad tuple");
    s.remove_prefix(1);
  };
  for (int i = 0; i < N; ++i) {
    take_int(g.a[i]);
    if (i + 1 < N) expect(',');
  }
  expect(';');
  for (int i = 0; i < N; ++i) {
    take_int(g.b[i]);
    if (i + 1 < N) expect(',');
  }
  expect(';');
  take_int(g.c);
  if (!s.empty()) throw std::invalid_argument("heisenberg: bad tuple");
  return g;
}

// ---------------------------------------------------------------------------
// H3-specific machinery (the N=1 closed forms; higher rank gets BFS only).

enum class Regime { first, second, third };

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::first: return "first";
    case Regime::second: return "second";
    case Regime::third: return "third";
  }
  return "?";
}

// Optimal side lengths for the H3 word norm.  Feasibility means
//   A >= |a|, B >= |b|, 2AB - |a||b| >= |c|,
// and the norm is 2(A+B) - (|a|+|b|).  `excess` is B - b after normalizing
// the element to a >= b >= 0, c >= 0.
struct NormWitness {
  std::int64_t A = 0;
  std::int64_t B = 0;
  Regime regime = Regime::first;
  std::int64_t excess = 0;
  std::int64_t norm = 0;
};

// True iff the triple is in the subgroup generated by the standard moves,
// i.e. c = a*b (mod 2).  Odd-coset triples still have well-defined products
// and formula norms but are unreachable by words.
bool h3_parity_ok(const H3Elem& g);

// Exact word norm of H3 by the side-length optimization, with a witness.
// Defined on the full extension group; restricts to the word metric on the
// parity-respecting subgroup.
NormWitness h3_norm_witness(const H3Elem& g);
std::int64_t h3_norm(const H3Elem& g);

// Closed-form evaluation of the same quantity (three-regime formula).
std::int64_t h3_norm_closed(const H3Elem& g);

// The stepwise solver: start at (|a|,|b|) and grow the shorter side until
// feasible, ties toward A.  Used as an independent route in tests.
NormWitness h3_norm_process(const H3Elem& g);

// A geodesic word for g: length h3_norm(g), evaluates to g, planar projection
// within Chebyshev distance 2 of the three-regime polyline.  Throws
// std::invalid_argument on odd-coset input (no word can reach it).
Word h3_canonical_geodesic(const H3Elem& g);

// Max height of the (x,y) column of B_n(e): max { z | |(x,y,z)| <= n }.
// Precondition |x|+|y| <= n (otherwise the column is empty).
std::int64_t h3_eta(std::int64_t n, std::int64_t x, std::int64_t y);

// Twice the signed area swept by a planar move word (shoelace along the path,
// closing through the origin).  Computed without group multiplication; for
// any word this equals the height of evaluate_word.
std::int64_t h3_double_area(const Word& w);

inline H3Elem projection_flip(const H3Elem& g) { return h3(-g.a[0], -g.b[0], g.c); }

inline std::pair<std::int64_t, std::int64_t> natural_projection(const H3Elem& g) {
  return {g.a[0], g.b[0]};
}

// Chebyshev distance from the word's planar projection to the three-regime
// pseudogeodesic polyline of g (measured in the normalized octant).
double h3_polyline_deviation(const H3Elem& g, const Word& w);

}  // namespace hbl
