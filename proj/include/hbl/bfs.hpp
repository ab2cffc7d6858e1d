#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hbl/common.hpp"
#include "hbl/word.hpp"

namespace hbl {

template <class G>
struct ElemHash {
  const G* g;
  std::size_t operator()(const typename G::Element& e) const {
    return static_cast<std::size_t>(g->hash(e));
  }
};

template <class G>
using ElemMap = std::unordered_map<typename G::Element, std::int32_t, ElemHash<G>>;

struct BallOptions {
  Budget budget = Budget::from_env();
  unsigned threads = 1;
};

// Exact ball around `center` with BFS distances.  Content is a set, so it is
// independent of expansion schedule by construction.
template <class G>
struct BallSnapshot {
  using Element = typename G::Element;

  std::string group_id;
  Element center{};
  int radius = 0;
  ElemMap<G> dist;
  std::vector<std::size_t> sphere_sizes;  // sphere_sizes[r] = #elements at distance r

  explicit BallSnapshot(const G& g) : dist(16, ElemHash<G>{&g}) {}

  bool contains(const Element& e) const { return dist.find(e) != dist.end(); }
  std::optional<int> distance(const Element& e) const {
    auto it = dist.find(e);
    if (it == dist.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const { return dist.size(); }
};

namespace detail {

template <class G>
void budget_check(const G& g, std::size_t have, std::size_t frontier,
                  const std::vector<std::size_t>& spheres, const Budget& budget) {
  double growth = 2.0;
  std::size_t k = spheres.size();
  if (k >= 2 && spheres[k - 2] > 0)
    growth = std::max(1.0, double(spheres[k - 1]) / double(spheres[k - 2]));
  std::uint64_t est_elems = have + static_cast<std::uint64_t>(double(frontier) * growth) + 1;
  std::uint64_t est_bytes = est_elems * g.approx_element_bytes();
  if (est_bytes > budget.bytes)
    throw BudgetExceeded("ball enumeration over memory budget (estimated " +
                             std::to_string(est_bytes >> 20) + " MiB)",
                         est_bytes);
}

}  // namespace detail

template <class G>
BallSnapshot<G> bfs_ball(const G& g, const typename G::Element& center, int radius,
                         const BallOptions& opt = {}) {
  using Element = typename G::Element;
  if (radius < 0) throw std::invalid_argument("bfs_ball: negative radius");
  BallSnapshot<G> ball(g);
  ball.group_id = g.id_string();
  ball.center = center;
  ball.radius = radius;
  ball.dist.emplace(center, 0);
  ball.sphere_sizes.push_back(1);
  std::vector<Element> frontier{center};
  const auto& gens = g.generators();
  for (int r = 1; r <= radius && !frontier.empty(); ++r) {
    detail::budget_check(g, ball.dist.size(), frontier.size(), ball.sphere_sizes, opt.budget);
    std::vector<std::vector<Element>> produced(std::max<unsigned>(1, opt.threads));
    parallel_chunks(frontier.size(), opt.threads,
                    [&](unsigned chunk, std::size_t lo, std::size_t hi) {
                      auto& out = produced[chunk];
                      for (std::size_t i = lo; i < hi; ++i)
                        for (std::size_t s = 1; s < gens.size(); ++s)
                          out.push_back(g.mul(frontier[i], gens[s]));
                    });
    std::vector<Element> next;
    for (auto& chunk : produced)
      for (auto& e : chunk)
        if (ball.dist.emplace(e, r).second) next.push_back(std::move(e));
    ball.sphere_sizes.push_back(next.size());
    frontier = std::move(next);
  }
  return ball;
}

// Exact word norm via meet-in-the-middle BFS.
template <class G>
std::int64_t bfs_norm(const G& g, const typename G::Element& x, const BallOptions& opt = {}) {
  using Element = typename G::Element;
  const Element e = g.identity();
  if (x == e) return 0;
  ElemMap<G> side_a(16, ElemHash<G>{&g}), side_b(16, ElemHash<G>{&g});
  std::vector<Element> front_a{e}, front_b{x};
  side_a.emplace(e, 0);
  side_b.emplace(x, 0);
  const auto& gens = g.generators();
  std::int64_t depth_a = 0, depth_b = 0;
  std::int64_t best = -1;
  std::vector<std::size_t> spheres_a{1}, spheres_b{1};
  auto expand = [&](ElemMap<G>& mine, const ElemMap<G>& other, std::vector<Element>& front,
                    std::int64_t& depth, std::vector<std::size_t>& spheres) {
    detail::budget_check(g, side_a.size() + side_b.size(), front.size(), spheres, opt.budget);
    ++depth;
    std::vector<Element> next;
    for (const auto& f : front)
      for (std::size_t s = 1; s < gens.size(); ++s) {
        Element y = g.mul(f, gens[s]);
        if (mine.emplace(y, depth).second) {
          auto it = other.find(y);
          if (it != other.end()) {
            std::int64_t total = depth + it->second;
            if (best < 0 || total < best) best = total;
          }
          next.push_back(std::move(y));
        }
      }
    spheres.push_back(next.size());
    front = std::move(next);
  };
  while (true) {
    if (best >= 0 && best <= depth_a + depth_b + 1) return best;
    if (front_a.empty() && front_b.empty())
      throw BudgetExceeded("bfs_norm: target unreachable", 0);
    if (!front_a.empty() && (front_a.size() <= front_b.size() || front_b.empty()))
      expand(side_a, side_b, front_a, depth_a, spheres_a);
    else
      expand(side_b, side_a, front_b, depth_b, spheres_b);
  }
}

// All geodesic words to x (or the first max_count in generator-index order),
// walked backwards over the BFS distance labels of the |x|-ball.
template <class G>
std::vector<Word> geodesic_words(const G& g, const typename G::Element& x,
                                 std::size_t max_count = SIZE_MAX, const BallOptions& opt = {}) {
  using Element = typename G::Element;
  std::int64_t n = bfs_norm(g, x, opt);
  BallSnapshot<G> ball = bfs_ball(g, g.identity(), static_cast<int>(n), opt);
  const auto& gens = g.generators();
  std::vector<Word> out;
  Word suffix;  // letters collected from the end of the word
  auto walk = [&](auto&& self, const Element& h, int dh) -> bool {
    if (dh == 0) {
      Word w(suffix.rbegin(), suffix.rend());
      out.push_back(std::move(w));
      return out.size() < max_count;
    }
    for (std::size_t s = 1; s < gens.size(); ++s) {
      Element p = g.mul(h, gens[g.inverse_index(s)]);
      auto it = ball.dist.find(p);
      if (it == ball.dist.end() || it->second != dh - 1) continue;
      suffix.push_back(static_cast<std::uint8_t>(s));
      bool keep = self(self, p, dh - 1);
      suffix.pop_back();
      if (!keep) return false;
    }
    return true;
  };
  walk(walk, x, static_cast<int>(n));
  return out;
}

}  // namespace hbl
