#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hbl {

// A word over a group's generating set, stored as generator indices.
// Index 0 is always the identity generator; geodesic words never use it.
using Word = std::vector<std::uint8_t>;

template <class G>
typename G::Element evaluate_word(const G& g, const Word& w) {
  typename G::Element x = g.identity();
  for (auto i : w) x = g.mul(x, g.generators().at(i));
  return x;
}

// Path points p(0..|w|) of the word read from `start`.
template <class G>
std::vector<typename G::Element> word_path(const G& g, const typename G::Element& start,
                                           const Word& w) {
  std::vector<typename G::Element> p;
  p.reserve(w.size() + 1);
  p.push_back(start);
  for (auto i : w) p.push_back(g.mul(p.back(), g.generators().at(i)));
  return p;
}

template <class G>
std::string word_letters(const G& g, const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (auto i : w) s.push_back(g.letter(i));
  return s;
}

template <class G>
Word word_from_letters(const G& g, const std::string& s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) w.push_back(g.letter_index(c));
  return w;
}

}  // namespace hbl
