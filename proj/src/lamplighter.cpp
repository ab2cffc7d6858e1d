#include "hbl/lamplighter.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace hbl {

namespace {

// Symmetric difference of sorted lamp sets, with `shift` (doubled units)
// added to every lamp of y first.
std::vector<std::int32_t> xor_shifted(const std::vector<std::int32_t>& x,
                                      const std::vector<std::int32_t>& y, std::int32_t shift) {
  std::vector<std::int32_t> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    std::int32_t xv = i < x.size() ? x[i] : INT32_MAX;
    std::int32_t yv = j < y.size() ? y[j] + shift : INT32_MAX;
    if (xv < yv) {
      out.push_back(xv);
      ++i;
    } else if (yv < xv) {
      out.push_back(yv);
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LampElem Lamplighter::mul(const Element& g, const Element& h) const {
  LampElem r;
  r.head = g.head + h.head;
  r.lamps = xor_shifted(g.lamps, h.lamps, 2 * g.head);
  return r;
}

LampElem Lamplighter::inv(const Element& g) const {
  LampElem r;
  r.head = -g.head;
  r.lamps.reserve(g.lamps.size());
  for (auto l : g.lamps) r.lamps.push_back(l - 2 * g.head);
  return r;
}

const std::vector<LampElem>& Lamplighter::generators() const {
  if (gens_.empty()) {
    gens_.push_back({});                 // e
    gens_.push_back({{}, 1});            // a
    gens_.push_back({{1}, 1});           // b: flips the edge at 1/2
    gens_.push_back(inv(gens_[1]));      // a^-1
    gens_.push_back(inv(gens_[2]));      // b^-1 = ({-1}, -1)
  }
  return gens_;
}

std::string Lamplighter::encode(const Element& g) const {
  std::string s = "lamps=";
  for (std::size_t i = 0; i < g.lamps.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(g.lamps[i]);
  }
  s += ";head=";
  s += std::to_string(g.head);
  return s;
}

LampElem Lamplighter::decode(std::string_view s) const {
  if (s.rfind("lamps=", 0) != 0) throw std::invalid_argument("lamplighter: bad tuple");
  s.remove_prefix(6);
  auto semi = s.find(";head=");
  if (semi == std::string_view::npos) throw std::invalid_argument("lamplighter: bad tuple");
  std::string_view lamps = s.substr(0, semi);
  std::string_view head = s.substr(semi + 6);
  LampElem g;
  auto res = std::from_chars(head.data(), head.data() + head.size(), g.head);
  if (res.ec != std::errc() || res.ptr != head.data() + head.size())
    throw std::invalid_argument("lamplighter: bad head");
  while (!lamps.empty()) {
    auto comma = lamps.find(',');
    std::string_view tok = lamps.substr(0, comma);
    std::int32_t v = 0;
    auto r2 = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (r2.ec != std::errc() || r2.ptr != tok.data() + tok.size() || (v % 2) == 0)
      throw std::invalid_argument("lamplighter: lamps must be odd integers");
    g.lamps.push_back(v);
    if (comma == std::string_view::npos) break;
    lamps.remove_prefix(comma + 1);
  }
  if (!std::is_sorted(g.lamps.begin(), g.lamps.end()) ||
      std::adjacent_find(g.lamps.begin(), g.lamps.end()) != g.lamps.end())
    throw std::invalid_argument("lamplighter: lamps must be sorted and distinct");
  return g;
}

std::size_t Lamplighter::letter_index(char c) const {
  switch (c) {
    case 'e': return 0;
    case 'a': return 1;
    case 'b': return 2;
    case 'A': return 3;
    case 'B': return 4;
  }
  throw std::invalid_argument("lamplighter: unknown letter");
}

std::int32_t lamp_head(const LampElem& g) { return g.head; }

std::int64_t lamp_norm(const LampElem& g) {
  // Required reach in vertex coordinates: the lamp stored as odd l sits on
  // the edge between (l-1)/2 and (l+1)/2.
  std::int64_t left = std::min<std::int64_t>(0, g.head);
  std::int64_t right = std::max<std::int64_t>(0, g.head);
  if (!g.lamps.empty()) {
    left = std::min<std::int64_t>(left, (g.lamps.front() - 1) / 2);
    right = std::max<std::int64_t>(right, (g.lamps.back() + 1) / 2);
  }
  std::int64_t span = right - left;
  std::int64_t left_first = (0 - left) + (right - g.head);
  std::int64_t right_first = (right - 0) + (g.head - left);
  return span + std::min(left_first, right_first);
}

std::int64_t lamp_dist(const LampElem& g, const LampElem& h) {
  static const Lamplighter ll;
  return lamp_norm(ll.mul(ll.inv(g), h));
}

bool lamp_geodesic_prefix_member(const Word& w) {
  // States: 0 start, 1 right sweep after a, 2 right sweep after b,
  // 3 left sweep after A, 4 left sweep after B, 5 descending tail,
  // 6 ascending tail.  All are accepting; -1 rejects.
  int st = 0;
  for (auto m : w) {
    switch (m) {
      case 1:  // a
        if (st == 0 || st == 1 || st == 2) st = 1;
        else if (st == 4 || st == 6) st = 6;  // pivot b'a or tail
        else return false;
        break;
      case 2:  // b
        if (st == 0 || st == 1 || st == 2) st = 2;
        else if (st == 3 || st == 6) st = 6;  // pivot a'b or tail
        else return false;
        break;
      case 3:  // a^-1
        if (st == 0 || st == 3 || st == 4) st = 3;
        else if (st == 2 || st == 5) st = 5;  // pivot ba' or tail
        else return false;
        break;
      case 4:  // b^-1
        if (st == 0 || st == 3 || st == 4) st = 4;
        else if (st == 1 || st == 5) st = 5;  // pivot ab' or tail
        else return false;
        break;
      default:
        throw std::invalid_argument("geodesic language: word must avoid the identity letter");
    }
  }
  return true;
}

std::pair<LampElem, std::int64_t> lamplighter_horoball_family(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("lamplighter horoball family needs N >= 1");
  LampElem g;
  g.head = static_cast<std::int32_t>(n);
  g.lamps = {static_cast<std::int32_t>(-2 * n + 1)};
  return {g, 3 * n - 1};
}

}  // namespace hbl
