#pragma once

#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <unordered_set>

#include "hbl/bfs.hpp"
#include "hbl/common.hpp"
#include "hbl/word.hpp"

namespace hbl {

constexpr std::int64_t kInfiniteDistance = std::numeric_limits<std::int64_t>::max();

template <class G>
using ElemSet = std::unordered_set<typename G::Element, ElemHash<G>>;

// S-connected components of a finite set, as a partition (lists of indices
// into the sorted element order).
template <class G>
std::vector<std::vector<std::size_t>> components(const G& g,
                                                 std::vector<typename G::Element> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::unordered_map<typename G::Element, std::size_t, ElemHash<G>> index(16, ElemHash<G>{&g});
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<std::size_t> parent(elems.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t s = 1; s < gens.size(); ++s) {
      auto it = index.find(g.mul(elems[i], gens[s]));
      if (it != index.end()) {
        auto a = find(i), b = find(it->second);
        if (a != b) parent[a] = b;
      }
    }
  std::unordered_map<std::size_t, std::size_t> roots;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto r = find(i);
    auto [it, fresh] = roots.emplace(r, out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(i);
  }
  return out;
}

// Path distance inside the induced subgraph on `member`, from x to y.
// Returns kInfiniteDistance across components.  `node_cap` guards runaway
// exploration.
template <class G, class MemberFn>
std::int64_t intrinsic_distance_pred(const G& g, MemberFn member, const typename G::Element& x,
                                     const typename G::Element& y,
                                     std::size_t node_cap = SIZE_MAX) {
  if (!member(x) || !member(y)) throw std::invalid_argument("intrinsic distance: endpoint not in set");
  if (x == y) return 0;
  ElemSet<G> seen(16, ElemHash<G>{&g});
  seen.insert(x);
  std::vector<typename G::Element> frontier{x};
  const auto& gens = g.generators();
  std::int64_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<typename G::Element> next;
    for (const auto& f : frontier)
      for (std::size_t s = 1; s < gens.size(); ++s) {
        auto z = g.mul(f, gens[s]);
        if (!member(z) || !seen.insert(z).second) continue;
        if (z == y) return depth;
        next.push_back(std::move(z));
      }
    if (seen.size() > node_cap)
      throw BudgetExceeded("intrinsic distance: exploration cap hit", seen.size());
    frontier = std::move(next);
  }
  return kInfiniteDistance;
}

template <class G>
std::int64_t intrinsic_distance(const G& g, const std::vector<typename G::Element>& set,
                                const typename G::Element& x, const typename G::Element& y) {
  ElemSet<G> s(16, ElemHash<G>{&g});
  s.insert(set.begin(), set.end());
  return intrinsic_distance_pred(g, [&](const typename G::Element& e) { return s.count(e) > 0; },
                                 x, y);
}

// ---------------------------------------------------------------------------
// Distortion of the intrinsic metric of a ball, Delta(l) = max intrinsic
// distance over pairs at word distance <= l, with witnesses.

template <class G>
struct DistortionCell {
  std::int64_t delta = 0;
  typename G::Element witness_a{};
  typename G::Element witness_b{};
};

template <class G>
struct DistortionRow {
  std::int64_t n = 0;                    // ball radius
  std::vector<DistortionCell<G>> cells;  // index l = 0..l_max
};

// Exact-norm oracle requirements: norm(x) = |x| and dist(x,y) = |x^-1 y|.
template <class G, class NormFn>
DistortionRow<G> distortion_row(const G& g, std::int64_t n, int l_max, NormFn norm,
                                const BallOptions& opt = {}) {
  using Element = typename G::Element;
  auto ball = bfs_ball(g, g.identity(), static_cast<int>(n), opt);
  auto offsets = bfs_ball(g, g.identity(), l_max, opt);  // u with |u| <= l_max
  std::vector<std::pair<Element, int>> us;
  for (const auto& [u, d] : offsets.dist)
    if (d > 0) us.emplace_back(u, d);
  std::sort(us.begin(), us.end());

  auto inside = [&](const Element& x) { return norm(x) <= n; };
  auto dist = [&](const Element& x, const Element& y) { return norm(g.mul(g.inv(x), y)); };

  // Depth-limited search for a geodesic from x to y that stays in the ball.
  std::function<bool(const Element&, const Element&, std::int64_t)> geodesic_inside =
      [&](const Element& x, const Element& y, std::int64_t remaining) -> bool {
    if (remaining == 0) return true;  // x == y by construction
    const auto& gens = g.generators();
    for (std::size_t s = 1; s < gens.size(); ++s) {
      auto z = g.mul(x, gens[s]);
      if (norm(z) > n) continue;
      if (dist(z, y) != remaining - 1) continue;
      if (geodesic_inside(z, y, remaining - 1)) return true;
    }
    return false;
  };

  DistortionRow<G> row;
  row.n = n;
  row.cells.assign(static_cast<std::size_t>(l_max) + 1, {});
  // Baseline: along any geodesic through the identity, pairs at distance d
  // realize intrinsic distance d.
  for (int d = 1; d <= l_max; ++d) {
    row.cells[d].delta = d;
    row.cells[d].witness_a = g.identity();
    for (const auto& [u, du] : us)
      if (du == d) {
        row.cells[d].witness_b = u;
        break;
      }
  }

  // Sorted element list for deterministic iteration.
  std::vector<Element> shell;
  for (const auto& [e, de] : ball.dist)
    if (de > n - l_max) shell.push_back(e);
  std::sort(shell.begin(), shell.end());

  struct Deferred {
    Element a, b;
    int d;
  };
  std::vector<Deferred> deferred;
  for (const auto& a : shell) {
    std::int64_t na = norm(a);
    for (const auto& [u, du] : us) {
      Element b = g.mul(a, u);
      std::int64_t nb = norm(b);
      if (nb > n) continue;
      // If every geodesic between the pair fits under the sphere, the
      // intrinsic distance is the word distance: nothing to measure.
      if (na + nb + du <= 2 * n) continue;
      if (geodesic_inside(a, b, du)) continue;
      deferred.push_back({a, b, du});
    }
  }

  // Exact intrinsic distances for the detoured pairs, batched per source.
  std::sort(deferred.begin(), deferred.end(),
            [](const Deferred& p, const Deferred& q) { return std::tie(p.a, p.b) < std::tie(q.a, q.b); });
  std::size_t i = 0;
  while (i < deferred.size()) {
    std::size_t j = i;
    while (j < deferred.size() && deferred[j].a == deferred[i].a) ++j;
    std::unordered_map<Element, int, ElemHash<G>> targets(16, ElemHash<G>{&g});
    for (std::size_t k = i; k < j; ++k) targets.emplace(deferred[k].b, deferred[k].d);
    const Element& src = deferred[i].a;
    ElemSet<G> seen(16, ElemHash<G>{&g});
    seen.insert(src);
    std::vector<Element> frontier{src};
    std::int64_t depth = 0;
    std::size_t found = 0;
    const auto& gens = g.generators();
    while (!frontier.empty() && found < targets.size()) {
      ++depth;
      std::vector<Element> next;
      for (const auto& f : frontier)
        for (std::size_t s = 1; s < gens.size(); ++s) {
          auto z = g.mul(f, gens[s]);
          if (norm(z) > n || !seen.insert(z).second) continue;
          auto t = targets.find(z);
          if (t != targets.end() && t->second > 0) {
            auto& cell = row.cells[static_cast<std::size_t>(t->second)];
            if (depth > cell.delta) {
              cell.delta = depth;
              cell.witness_a = src;
              cell.witness_b = z;
            }
            t->second = -t->second;  // mark found
            ++found;
          }
          next.push_back(std::move(z));
        }
      if (seen.size() > (std::size_t(64) << 20) / sizeof(Element))
        throw BudgetExceeded("distortion: intrinsic search cap hit", seen.size());
      frontier = std::move(next);
    }
    if (found < targets.size())
      throw InvariantViolation("distortion: ball disconnected, which cannot happen");
    i = j;
  }

  // Delta is a sup over d <= l: fold up.
  for (int l = 1; l <= l_max; ++l)
    if (row.cells[l].delta < row.cells[l - 1].delta) row.cells[l] = row.cells[l - 1];
  return row;
}

template <class G>
struct DistortionTable {
  std::string group_id;
  int l_max = 0;
  std::vector<DistortionRow<G>> rows;
  // stabilization_onset[l] = smallest computed n from which Delta(l) is
  // constant across the rest of the computed range (-1 if never).
  std::vector<std::int64_t> stabilization_onset;
};

template <class G, class NormFn>
DistortionTable<G> distortion_table(const G& g, std::int64_t n_lo, std::int64_t n_hi, int l_max,
                                    NormFn norm, const BallOptions& opt = {}) {
  DistortionTable<G> t;
  t.group_id = g.id_string();
  t.l_max = l_max;
  for (std::int64_t n = n_lo; n <= n_hi; ++n)
    t.rows.push_back(distortion_row(g, n, l_max, norm, opt));
  t.stabilization_onset.assign(static_cast<std::size_t>(l_max) + 1, -1);
  for (int l = 0; l <= l_max; ++l) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      bool constant = true;
      for (std::size_t q = r + 1; q < t.rows.size(); ++q)
        if (t.rows[q].cells[l].delta != t.rows[r].cells[l].delta) {
          constant = false;
          break;
        }
      if (constant) {
        t.stabilization_onset[l] = t.rows[r].n;
        break;
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Coarse connectivity: components of the graph joining pairs at distance <= t.

template <class G, class NormFn>
std::vector<std::vector<std::size_t>> coarse_components(const G& g,
                                                        std::vector<typename G::Element> elems,
                                                        std::int64_t t, NormFn norm) {
  if (t < 1) throw std::invalid_argument("coarse_components: t must be >= 1");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<std::size_t> parent(elems.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (norm(g.mul(g.inv(elems[i]), elems[j])) <= t) {
        auto a = find(i), b = find(j);
        if (a != b) parent[a] = b;
      }
  std::unordered_map<std::size_t, std::size_t> roots;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto r = find(i);
    auto [it, fresh] = roots.emplace(r, out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// All intrinsic geodesics between two elements of a ball, as move words.

template <class G>
struct DetourCensus {
  std::int64_t distance = 0;
  std::vector<Word> paths;
};

template <class G, class MemberFn>
DetourCensus<G> detour_census_pred(const G& g, MemberFn member, const typename G::Element& x,
                                   const typename G::Element& y, std::size_t max_paths = 1u << 20) {
  if (!member(x) || !member(y)) throw std::invalid_argument("detour census: endpoint not in set");
  DetourCensus<G> out;
  if (x == y) {
    out.paths.push_back({});
    return out;
  }
  // BFS layers from x inside the set.
  ElemMap<G> dist(16, ElemHash<G>{&g});
  dist.emplace(x, 0);
  std::vector<typename G::Element> frontier{x};
  const auto& gens = g.generators();
  std::int32_t depth = 0;
  bool reached = false;
  while (!frontier.empty() && !reached) {
    ++depth;
    std::vector<typename G::Element> next;
    for (const auto& f : frontier)
      for (std::size_t s = 1; s < gens.size(); ++s) {
        auto z = g.mul(f, gens[s]);
        if (!member(z) || !dist.emplace(z, depth).second) continue;
        if (z == y) reached = true;
        next.push_back(std::move(z));
      }
    frontier = std::move(next);
  }
  if (!reached) {
    out.distance = kInfiniteDistance;
    return out;
  }
  out.distance = depth;
  // Backward walk: predecessors are the in-set neighbors one layer down.
  Word suffix;
  auto walk = [&](auto&& self, const typename G::Element& h, std::int32_t dh) -> bool {
    if (dh == 0) {
      out.paths.emplace_back(suffix.rbegin(), suffix.rend());
      return out.paths.size() < max_paths;
    }
    for (std::size_t s = 1; s < gens.size(); ++s) {
      auto p = g.mul(h, gens[g.inverse_index(s)]);
      auto it = dist.find(p);
      if (it == dist.end() || it->second != dh - 1) continue;
      suffix.push_back(static_cast<std::uint8_t>(s));
      bool keep = self(self, p, dh - 1);
      suffix.pop_back();
      if (!keep) return false;
    }
    return true;
  };
  walk(walk, y, depth);
  return out;
}

}  // namespace hbl
