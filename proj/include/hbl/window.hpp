#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hbl/bfs.hpp"
#include "hbl/common.hpp"
#include "hbl/word.hpp"

namespace hbl {

enum class Status : std::uint8_t { OUT = 0, IN = 1, UNDETERMINED = 2 };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::OUT: return "OUT";
    case Status::IN: return "IN";
    case Status::UNDETERMINED: return "UNDETERMINED";
  }
  return "?";
}

// A finite observation window: an explicit, canonically sorted element list.
template <class G>
struct Window {
  using Element = typename G::Element;

  std::string desc;
  std::vector<Element> elems;  // sorted by operator<
  std::unordered_map<Element, std::size_t, ElemHash<G>> index;

  Window(const G& g, std::string d, std::vector<Element> es)
      : desc(std::move(d)), elems(std::move(es)), index(16, ElemHash<G>{&g}) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    if (index.find(g.identity()) == index.end())
      throw std::invalid_argument("window must contain the identity");
  }

  std::optional<std::size_t> find(const Element& e) const {
    auto it = index.find(e);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const { return elems.size(); }
};

template <class G>
using WindowPtr = std::shared_ptr<const Window<G>>;

template <class G>
struct WindowSet {
  WindowPtr<G> window;
  std::vector<Status> status;

  Status at(std::size_t i) const { return status[i]; }
  bool all_determined() const {
    for (auto s : status)
      if (s == Status::UNDETERMINED) return false;
    return true;
  }
  friend bool operator==(const WindowSet& a, const WindowSet& b) {
    return a.window == b.window && a.status == b.status;
  }
};

template <class G>
WindowPtr<G> window_from_ball(const G& g, int radius, const BallOptions& opt = {}) {
  auto ball = bfs_ball(g, g.identity(), radius, opt);
  std::vector<typename G::Element> es;
  es.reserve(ball.size());
  for (const auto& [e, d] : ball.dist) es.push_back(e);
  return std::make_shared<Window<G>>(g, "ball(" + std::to_string(radius) + ")", std::move(es));
}

template <class G>
WindowSet<G> window_set_by(const G&, const WindowPtr<G>& w,
                           const std::function<Status(const typename G::Element&)>& f) {
  WindowSet<G> out;
  out.window = w;
  out.status.reserve(w->size());
  for (const auto& e : w->elems) out.status.push_back(f(e));
  return out;
}

// ---------------------------------------------------------------------------
// Limits of ball families on a window.

template <class G>
struct BallFamily {
  std::string name;
  // N -> (center, radius)
  std::function<std::pair<typename G::Element, std::int64_t>(std::int64_t)> at;
};

struct StabilizationReport {
  std::vector<std::int64_t> schedule;
  std::int64_t first_stable = -1;  // smallest schedule point from which the window is constant
  bool stable_tail = false;        // identical across the final half of the schedule
  bool limit_is_full_window = false;
  bool limit_is_empty = false;
};

// Evaluate the family at each schedule point; statuses come from the last
// evaluation.  `dist` must be an exact distance oracle d(center, x).
template <class G, class DistFn>
std::pair<WindowSet<G>, StabilizationReport> limit_window(
    [[maybe_unused]] const G& g, const BallFamily<G>& family, const WindowPtr<G>& w,
    const std::vector<std::int64_t>& schedule, DistFn dist) {
  if (schedule.empty() || !std::is_sorted(schedule.begin(), schedule.end()))
    throw std::invalid_argument("limit_window: schedule must be nonempty and increasing");
  std::vector<std::vector<Status>> evals;
  evals.reserve(schedule.size());
  for (auto n : schedule) {
    auto [center, radius] = family.at(n);
    std::vector<Status> st;
    st.reserve(w->size());
    for (const auto& e : w->elems)
      st.push_back(dist(center, e) <= radius ? Status::IN : Status::OUT);
    evals.push_back(std::move(st));
  }
  StabilizationReport rep;
  rep.schedule = schedule;
  for (std::size_t i = 0; i < evals.size(); ++i) {
    bool constant = true;
    for (std::size_t j = i + 1; j < evals.size(); ++j)
      if (evals[j] != evals[i]) {
        constant = false;
        break;
      }
    if (constant) {
      rep.first_stable = schedule[i];
      break;
    }
  }
  std::size_t half = (schedule.size() + 1) / 2;
  rep.stable_tail = rep.first_stable >= 0 &&
                    rep.first_stable <= schedule[schedule.size() - half];
  WindowSet<G> out;
  out.window = w;
  out.status = evals.back();
  rep.limit_is_full_window =
      std::all_of(out.status.begin(), out.status.end(), [](Status s) { return s == Status::IN; });
  rep.limit_is_empty =
      std::all_of(out.status.begin(), out.status.end(), [](Status s) { return s == Status::OUT; });
  return {std::move(out), rep};
}

// ---------------------------------------------------------------------------
// Busemann horoball prefixes.

struct BusemannOptions {
  std::int64_t n_max = 40;
  // Horizon after which a positive, tail-monotone deficit certifies OUT;
  // -1 disables OUT certification (statuses stay UNDETERMINED).
  std::function<std::int64_t(std::size_t window_index)> horizon;
};

struct BusemannReport {
  std::vector<std::size_t> monotonicity_violations;  // window indices with non-monotone tails
};

// Statuses of the window under U_n B_n(p(n)) for the geodesic word prefix p.
//   IN: d(x, p(n)) <= n for some n <= min(n_max, |p|).
//   OUT: deficit d(x,p(n)) - n stays positive through a horizon and is
//        non-decreasing on the tail (certified per query).
//   UNDETERMINED otherwise.
template <class G, class DistFn>
std::pair<WindowSet<G>, BusemannReport> busemann_window(const G& g, const Word& prefix,
                                                        const WindowPtr<G>& w,
                                                        const BusemannOptions& opt, DistFn dist) {
  auto path = word_path(g, g.identity(), prefix);
  for (std::size_t n = 0; n < path.size(); ++n)
    if (dist(g.identity(), path[n]) != static_cast<std::int64_t>(n))
      throw std::invalid_argument("busemann_window: input word is not geodesic");
  std::int64_t n_hi = std::min<std::int64_t>(opt.n_max, static_cast<std::int64_t>(prefix.size()));
  BusemannReport rep;
  WindowSet<G> out;
  out.window = w;
  out.status.reserve(w->size());
  for (std::size_t i = 0; i < w->size(); ++i) {
    const auto& x = w->elems[i];
    Status st = Status::UNDETERMINED;
    std::int64_t prev = 0;
    bool monotone_tail = true;
    std::int64_t horizon = opt.horizon ? opt.horizon(i) : -1;
    std::int64_t tail_from = horizon >= 0 ? std::max<std::int64_t>(0, horizon - 4) : n_hi + 1;
    for (std::int64_t n = 0; n <= n_hi; ++n) {
      std::int64_t deficit = dist(x, path[static_cast<std::size_t>(n)]) - n;
      if (deficit <= 0) {
        st = Status::IN;
        break;
      }
      if (n > tail_from && deficit < prev) monotone_tail = false;
      prev = deficit;
    }
    if (st != Status::IN && horizon >= 0 && n_hi >= horizon) {
      if (monotone_tail)
        st = Status::OUT;
      else
        rep.monotonicity_violations.push_back(i);
    }
    out.status.push_back(st);
  }
  return {std::move(out), rep};
}

// ---------------------------------------------------------------------------
// Pointwise operations.

// P grazes g: g is OUT and some S-neighbor of g is IN.  Every inspected
// status must be determined and inside the window.
template <class G>
bool grazes(const G& g, const WindowSet<G>& p, const typename G::Element& x) {
  auto need = [&](const typename G::Element& e) {
    auto i = p.window->find(e);
    if (!i || p.status[*i] == Status::UNDETERMINED)
      throw std::invalid_argument("grazes: element or neighbor lacks a determined status");
    return p.status[*i];
  };
  if (need(x) == Status::IN) return false;
  const auto& gens = g.generators();
  for (std::size_t s = 1; s < gens.size(); ++s)
    if (need(g.mul(x, gens[s])) == Status::IN) return true;
  return false;
}

// membership(h) = P(g*h) where determined, else UNDETERMINED.
template <class G>
WindowSet<G> translate(const G& g, const WindowSet<G>& p, const typename G::Element& x) {
  WindowSet<G> out;
  out.window = p.window;
  out.status.reserve(p.window->size());
  for (const auto& h : p.window->elems) {
    auto i = p.window->find(g.mul(x, h));
    out.status.push_back(i ? p.status[*i] : Status::UNDETERMINED);
  }
  return out;
}

// One step of the max cellular automaton f(x)_g = max_s x_{gs}, computed on
// the sub-window of elements whose whole S-neighborhood is observable.
template <class G>
WindowSet<G> max_ca_step(const G& g, const WindowSet<G>& x) {
  for (auto s : x.status)
    if (s == Status::UNDETERMINED)
      throw std::invalid_argument("max_ca_step: input must be fully determined");
  const auto& gens = g.generators();
  std::vector<typename G::Element> kept;
  std::vector<Status> vals;
  for (std::size_t i = 0; i < x.window->size(); ++i) {
    const auto& e = x.window->elems[i];
    Status v = Status::OUT;
    bool ok = true;
    for (std::size_t s = 0; s < gens.size() && ok; ++s) {
      auto j = x.window->find(g.mul(e, gens[s]));
      if (!j)
        ok = false;
      else if (x.status[*j] == Status::IN)
        v = Status::IN;
    }
    if (ok) {
      kept.push_back(e);
      vals.push_back(v);
    }
  }
  // `kept` is a subsequence of the already-sorted window, so the constructed
  // window preserves its order and `vals` stays aligned.
  WindowSet<G> out;
  out.window = std::make_shared<Window<G>>(g, x.window->desc + "/shrunk", std::move(kept));
  out.status = std::move(vals);
  if (out.window->size() != out.status.size())
    throw InvariantViolation("max_ca_step: window shrink misaligned");
  return out;
}

}  // namespace hbl
