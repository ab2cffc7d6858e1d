#include "hbl/heisenberg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hbl {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 iabs(i64 x) { return x < 0 ? -x : x; }

i64 ceil_div(i64 p, i64 q) {  // q > 0, p >= 0
  return (p + q - 1) / q;
}

std::uint64_t isqrt128(unsigned __int128 x) {
  if (x == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > x) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

// ceil(sqrt(x)) for x >= 0
std::uint64_t ceil_sqrt128(unsigned __int128 x) {
  std::uint64_t s = isqrt128(x);
  return (static_cast<unsigned __int128>(s) * s == x) ? s : s + 1;
}

struct Norm3 {
  i64 a, b, c;  // a >= b >= 0, c >= 0
};

Norm3 normalize_abs(const H3Elem& g) {
  i64 a = iabs(g.a[0]), b = iabs(g.b[0]), c = iabs(g.c);
  if (a < b) std::swap(a, b);
  return {a, b, c};
}

bool feasible(const Norm3& n, i64 A, i64 B) {
  if (A < n.a || B < n.b) return false;
  return i128(2) * A * B - i128(n.a) * n.b >= n.c;
}

// Smallest feasible B for a fixed A (or nullopt if none exists).
bool min_b_for(const Norm3& n, i64 A, i64& B) {
  if (A < n.a) return false;
  i128 need = i128(n.c) + i128(n.a) * n.b;  // need 2AB >= need
  if (A == 0) {
    if (need > 0) return false;
    B = n.b;
    return true;
  }
  i128 q = (need + 2 * i128(A) - 1) / (2 * i128(A));
  i64 b0 = q > n.b ? static_cast<i64>(q) : n.b;
  B = b0;
  return true;
}

Regime classify(const Norm3& n) {
  if (n.c <= i128(n.a) * n.b) return Regime::first;
  if (i128(n.c) <= 2 * i128(n.a) * n.a - i128(n.a) * n.b) return Regime::second;
  return Regime::third;
}

NormWitness pick_best(const Norm3& n, const std::vector<i64>& a_candidates) {
  NormWitness best;
  bool have = false;
  for (i64 A : a_candidates) {
    if (A < n.a) continue;
    i64 B;
    if (!min_b_for(n, A, B)) continue;
    i64 norm = 2 * (A + B) - (n.a + n.b);
    if (!have || norm < best.norm ||
        (norm == best.norm && (iabs(A - B) < iabs(best.A - best.B) ||
                               (iabs(A - B) == iabs(best.A - best.B) && A > best.A && A >= B)))) {
      have = true;
      best.A = A;
      best.B = B;
      best.norm = norm;
    }
  }
  if (!have) throw InvariantViolation("h3 norm: no feasible witness");
  best.regime = classify(n);
  best.excess = best.B - n.b;
  return best;
}

NormWitness norm_witness_normalized(const Norm3& n) {
  if (n.a == 0 && n.b == 0 && n.c == 0) return NormWitness{0, 0, Regime::first, 0, 0};
  std::vector<i64> cands;
  if (n.a + n.b + n.c < 100) {
    i64 hi = n.a + n.b + static_cast<i64>(isqrt64(static_cast<std::uint64_t>(n.c))) + 2;
    for (i64 A = n.a; A <= hi; ++A) cands.push_back(A);
  } else {
    // Case split plus a small scan around the real relaxation A=B=sqrt((c+ab)/2);
    // the scan absorbs every rounding edge.
    cands.push_back(n.a);
    cands.push_back(n.a + 1);
    cands.push_back(n.a + 2);
    unsigned __int128 need = static_cast<unsigned __int128>(n.c) + i128(n.a) * n.b;
    i64 half = static_cast<i64>(ceil_sqrt128((need + 1) / 2));
    i64 nsum = static_cast<i64>(ceil_sqrt128(2 * need));
    for (i64 d = -2; d <= 2; ++d) {
      if (half + d >= 0) cands.push_back(half + d);
      i64 s = nsum + d;
      if (s >= 0) {
        cands.push_back((s + 1) / 2);
        cands.push_back(s / 2);
      }
    }
  }
  return pick_best(n, cands);
}

}  // namespace

bool h3_parity_ok(const H3Elem& g) { return (((g.c - g.a[0] * g.b[0]) & 1) == 0); }

NormWitness h3_norm_witness(const H3Elem& g) { return norm_witness_normalized(normalize_abs(g)); }

std::int64_t h3_norm(const H3Elem& g) { return h3_norm_witness(g).norm; }

std::int64_t h3_norm_closed(const H3Elem& g) {
  Norm3 n = normalize_abs(g);
  i128 ab = i128(n.a) * n.b;
  if (n.c <= ab) return n.a + n.b;
  if (i128(n.c) <= 2 * i128(n.a) * n.a - ab)
    return 2 * ceil_div(n.c - static_cast<i64>(ab), 2 * n.a) + n.a + n.b;
  unsigned __int128 need = static_cast<unsigned __int128>(i128(n.c) + ab);
  i64 len = static_cast<i64>(ceil_sqrt128(2 * need));
  return 2 * len - n.a - n.b;
}

NormWitness h3_norm_process(const H3Elem& g) {
  Norm3 n = normalize_abs(g);
  i64 A = n.a, B = n.b;
  while (!feasible(n, A, B)) {
    if (A <= B)
      ++A;  // ties grow A
    else
      ++B;
  }
  NormWitness w;
  w.A = A;
  w.B = B;
  w.norm = 2 * (A + B) - (n.a + n.b);
  w.regime = classify(n);
  w.excess = B - n.b;
  return w;
}

// ---------------------------------------------------------------------------
// Canonical geodesics.

namespace {

enum : std::uint8_t { LE = 1, LN = 2, LW = 3, LS = 4 };

// Norm-preserving maps used to push (a,b,c) into a >= b >= 0, c >= 0.
// XNEG/YNEG/SWAP are automorphisms fixing S setwise; CREV is the
// anti-automorphism (a,b,c) -> (a,b,-c), realized on words by reversal.
enum class Sym { XNEG, YNEG, SWAP, CREV };

H3Elem apply_sym(Sym s, const H3Elem& g) {
  switch (s) {
    case Sym::XNEG: return h3(-g.a[0], g.b[0], -g.c);
    case Sym::YNEG: return h3(g.a[0], -g.b[0], -g.c);
    case Sym::SWAP: return h3(g.b[0], g.a[0], -g.c);
    case Sym::CREV: return h3(g.a[0], g.b[0], -g.c);
  }
  return g;
}

void apply_sym_word(Sym s, Word& w) {
  auto map_letters = [&w](std::uint8_t x, std::uint8_t y, std::uint8_t z, std::uint8_t t) {
    for (auto& m : w) {
      if (m == LE) m = x;
      else if (m == LN) m = y;
      else if (m == LW) m = z;
      else if (m == LS) m = t;
    }
  };
  switch (s) {
    case Sym::XNEG: map_letters(LW, LN, LE, LS); break;
    case Sym::YNEG: map_letters(LE, LS, LW, LN); break;
    case Sym::SWAP: map_letters(LN, LE, LS, LW); break;
    case Sym::CREV: std::reverse(w.begin(), w.end()); break;
  }
}

void append(Word& w, std::uint8_t m, i64 count) {
  for (i64 i = 0; i < count; ++i) w.push_back(m);
}

// Staircase for the first regime: a east moves, b north moves, double area c.
// The i-th north move is placed in a +-2 corridor around the pseudogeodesic
// diagonal; within the corridor the area is met by raising from the back
// (southeast-first).
Word staircase_word(i64 a, i64 b, i64 c) {
  Word w;
  if (b == 0) {
    append(w, LE, a);
    return w;
  }
  double d = (c == i128(a) * b) ? double(a)
                                : double(a) - std::sqrt(double(a) * (double(a) - double(c) / double(b)));
  // Polyline reach at height y (east piece to d, then slope b/a diagonal).
  auto reach = [&](double y) {
    if (y <= 0) return d;
    double x = d + y * double(a) / double(b);
    return x > double(a) ? double(a) : x;
  };
  // The i-th north move (heights i-1 -> i) may sit anywhere the polyline is
  // vertically within one of it; the exact-area huggers live in this band.
  std::vector<i64> lo(b), hi(b), x(b);
  for (i64 i = 1; i <= b; ++i) {
    lo[i - 1] = std::clamp<i64>(static_cast<i64>(std::ceil(reach(double(i - 1)) - 1.0)), 0, a);
    hi[i - 1] = std::clamp<i64>(static_cast<i64>(std::floor(reach(double(i)) + 1.0)), 0, a);
    if (i > 1) lo[i - 1] = std::max(lo[i - 1], lo[i - 2]);
  }
  for (i64 i = b - 2; i >= 0; --i) hi[i] = std::min(hi[i], hi[i + 1]);
  i64 target = static_cast<i64>((i128(c) + i128(a) * b) / 2);  // sum of north x positions
  i64 sum = 0;
  for (i64 i = 0; i < b; ++i) {
    x[i] = lo[i];
    sum += x[i];
  }
  for (i64 i = b - 1; i >= 0 && sum < target; --i) {
    i64 cap = (i + 1 < b) ? std::min(hi[i], x[i + 1]) : hi[i];
    i64 inc = std::min(cap - x[i], target - sum);
    if (inc > 0) {
      x[i] += inc;
      sum += inc;
    }
  }
  if (sum != target) throw InvariantViolation("h3 geodesic: staircase corridor too tight");
  i64 cur = 0;
  for (i64 i = 0; i < b; ++i) {
    append(w, LE, x[i] - cur);
    cur = x[i];
    w.push_back(LN);
  }
  append(w, LE, a - cur);
  return w;
}

// Rectangle (with one bump when the parity of the target area demands it)
// for the second and third regimes.
Word rectangle_word(i64 a, i64 b, i64 c, const NormWitness& wit) {
  i64 A = wit.A, B = wit.B;
  i64 excess_area = static_cast<i64>(i128(2) * A * B - i128(a) * b - c);
  Word w;
  if (excess_area == 0) {
    append(w, LS, B - b);
    append(w, LE, A);
    append(w, LN, B);
    append(w, LW, A - a);
    return w;
  }
  if (B - 1 >= b) {
    // one increment smaller on B; single bump of depth one on the bottom
    // side, pushed toward the southeast corner
    i64 M = static_cast<i64>(i128(2) * A * (B - 1) - i128(a) * b);
    i64 k = (c - M) / 2;
    if (k < 1 || k > A) throw InvariantViolation("h3 geodesic: bump does not fit");
    append(w, LS, (B - 1) - b);
    append(w, LE, A - k);
    w.push_back(LS);
    append(w, LE, k);
    w.push_back(LN);
    append(w, LN, B - 1);
    append(w, LW, A - a);
    return w;
  }
  if (A - 1 < a) throw InvariantViolation("h3 geodesic: no room for bump");
  i64 M = static_cast<i64>(i128(2) * (A - 1) * B - i128(a) * b);
  i64 k = (c - M) / 2;
  if (k < 1 || k > B) throw InvariantViolation("h3 geodesic: bump does not fit");
  append(w, LS, B - b);
  append(w, LE, A - 1);
  w.push_back(LE);
  append(w, LN, k);
  w.push_back(LW);
  append(w, LN, B - k);
  append(w, LW, (A - 1) - a);
  return w;
}

Word first_quadrant_word(i64 a, i64 b, i64 c) {
  if (c <= i128(a) * b) return staircase_word(a, b, c);
  return rectangle_word(a, b, c, norm_witness_normalized(Norm3{a, b, c}));
}

std::vector<Sym> normalizing_syms(H3Elem& g) {
  std::vector<Sym> ops;
  auto push = [&](Sym s) {
    g = apply_sym(s, g);
    ops.push_back(s);
  };
  if (g.a[0] < 0) push(Sym::XNEG);
  if (g.b[0] < 0) push(Sym::YNEG);
  if (g.a[0] < g.b[0]) push(Sym::SWAP);
  if (g.c < 0) push(Sym::CREV);
  return ops;
}

}  // namespace

Word h3_canonical_geodesic(const H3Elem& g0) {
  if (!h3_parity_ok(g0))
    throw std::invalid_argument("h3 geodesic: height parity mismatch, no word reaches " +
                                H3().encode(g0));
  H3Elem g = g0;
  std::vector<Sym> ops = normalizing_syms(g);
  Word w = first_quadrant_word(g.a[0], g.b[0], g.c);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) apply_sym_word(*it, w);
  if (static_cast<i64>(w.size()) != h3_norm(g0) || evaluate_word(H3(), w) != g0)
    throw InvariantViolation("h3 geodesic: construction failed for " + H3().encode(g0));
  return w;
}

std::int64_t h3_eta(std::int64_t n, std::int64_t x, std::int64_t y) {
  if (iabs(x) + iabs(y) > n)
    throw std::invalid_argument("h3 eta: column outside the ball");
  i64 parity = iabs((x * y) % 2);
  // z of the right parity; norm is nondecreasing in |z|
  i64 lo = parity;  // |(x,y,parity)| <= |x|+|y|+2 <= n+2; recheck below
  if (h3_norm(h3(x, y, lo)) > n) throw InvariantViolation("h3 eta: empty column");
  i64 hi = ((n + 2) * (n + 2)) / 2 + 2;
  hi += (iabs(hi) % 2 != parity) ? 1 : 0;
  while (h3_norm(h3(x, y, hi)) <= n) hi += hi;
  while (lo + 2 <= hi) {
    i64 mid = lo + (hi - lo) / 2;
    if ((iabs(mid) % 2) != parity) ++mid;
    if (mid >= hi) mid -= 2;
    if (mid <= lo) break;
    if (h3_norm(h3(x, y, mid)) <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::int64_t h3_double_area(const Word& w) {
  i64 x = 0, y = 0;
  i64 area2 = 0;
  for (auto m : w) {
    switch (m) {
      case LE: area2 -= y; ++x; break;
      case LN: area2 += x; ++y; break;
      case LW: area2 += y; --x; break;
      case LS: area2 -= x; --y; break;
      case 0: break;
      default: throw std::invalid_argument("h3 double area: not a planar move word");
    }
  }
  return area2;
}

// ---------------------------------------------------------------------------
// Pseudogeodesic polylines and deviation measurement.

namespace {

struct Pt {
  double x, y;
};

double cheb_point_segment(Pt p, Pt s0, Pt s1) {
  double best = std::numeric_limits<double>::infinity();
  // max(|dx|,|dy|) along the segment is convex in the parameter
  double lo = 0, hi = 1;
  auto at = [&](double t) {
    double x = s0.x + t * (s1.x - s0.x), y = s0.y + t * (s1.y - s0.y);
    return std::max(std::abs(p.x - x), std::abs(p.y - y));
  };
  for (int it = 0; it < 80; ++it) {
    double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (at(m1) <= at(m2))
      hi = m2;
    else
      lo = m1;
  }
  best = std::min({at(lo), at(hi), at(0.0), at(1.0)});
  return best;
}

std::vector<Pt> pseudogeodesic_polyline(i64 a, i64 b, i64 c) {
  std::vector<Pt> pts;
  double A = double(a), B = double(b), C = double(c);
  if (c <= i128(a) * b) {
    if (b == 0 || a == 0) {
      pts = {{0, 0}, {A, B}};
      return pts;
    }
    double d = A - std::sqrt(A * (A - C / B));
    pts = {{0, 0}, {d, 0}, {A, (1.0 - d / A) * B}, {A, B}};
    return pts;
  }
  double m = A;  // normalized a >= b
  if (C <= 2 * m * m - A * B) {
    double Bs = (C + A * B) / (2 * A);
    pts = {{0, 0}, {0, B - Bs}, {A, B - Bs}, {A, B}};
    return pts;
  }
  double S = std::sqrt((C + A * B) / 2.0);
  pts = {{0, 0}, {0, B - S}, {S, B - S}, {S, B}, {A, B}};
  return pts;
}

}  // namespace

double h3_polyline_deviation(const H3Elem& g0, const Word& w0) {
  H3Elem g = g0;
  std::vector<Sym> ops = normalizing_syms(g);
  Word w = w0;
  for (Sym s : ops) apply_sym_word(s, w);
  auto poly = pseudogeodesic_polyline(g.a[0], g.b[0], g.c);
  double worst = 0;
  i64 x = 0, y = 0;
  auto measure = [&] {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < poly.size(); ++i)
      best = std::min(best, cheb_point_segment({double(x), double(y)}, poly[i], poly[i + 1]));
    worst = std::max(worst, best);
  };
  measure();
  for (auto m : w) {
    if (m == LE) ++x;
    else if (m == LN) ++y;
    else if (m == LW) --x;
    else if (m == LS) --y;
    measure();
  }
  return worst;
}

}  // namespace hbl
