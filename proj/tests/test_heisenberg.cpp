#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hbl/bfs.hpp"
#include "hbl/heisenberg.hpp"

using namespace hbl;

namespace {

// Independent oracle: exhaustive minimization of 2(A+B)-(|a|+|b|) over the
// whole feasible box A,B <= |a|+|b|+ceil(sqrt(|c|))+2.
std::int64_t oracle_norm(std::int64_t a, std::int64_t b, std::int64_t c) {
  a = std::llabs(a);
  b = std::llabs(b);
  c = std::llabs(c);
  std::int64_t hi = a + b + static_cast<std::int64_t>(std::ceil(std::sqrt(double(c)))) + 2;
  std::int64_t best = -1;
  for (std::int64_t A = a; A <= hi; ++A)
    for (std::int64_t B = b; B <= hi; ++B) {
      if (2 * A * B - a * b < c) continue;
      std::int64_t v = 2 * (A + B) - (a + b);
      if (best < 0 || v < best) best = v;
    }
  return best;
}

std::mt19937_64 rng(20260809u);

H3Elem random_elem(std::int64_t coord, std::int64_t height) {
  std::uniform_int_distribution<std::int64_t> da(-coord, coord), dc(-height, height);
  return h3(da(rng), da(rng), dc(rng));
}

}  // namespace

TEST_CASE("h3 product and inverse") {
  H3 g;
  CHECK(g.mul(h3(1, 0, 0), h3(0, 1, 0)) == h3(1, 1, 1));
  H3Elem x = h3(3, -2, 7);
  CHECK(g.mul(x, g.identity()) == x);
  CHECK(g.mul(g.identity(), x) == x);
  CHECK(g.mul(x, g.inv(x)) == g.identity());
  CHECK(g.inv(h3(2, 5, -9)) == h3(-2, -5, 9));
  CHECK(g.inv(g.identity()) == g.identity());

  // associativity and parity on random triples
  for (int i = 0; i < 2000; ++i) {
    H3Elem p = random_elem(50, 500), q = random_elem(50, 500), r = random_elem(50, 500);
    CHECK(g.mul(g.mul(p, q), r) == g.mul(p, g.mul(q, r)));
  }
  for (int i = 0; i < 2000; ++i) {
    H3Elem p = random_elem(40, 400), q = random_elem(40, 400);
    if (h3_parity_ok(p) && h3_parity_ok(q)) {
      CHECK(h3_parity_ok(g.mul(p, q)));
      CHECK(h3_parity_ok(g.inv(p)));
    }
  }
}

TEST_CASE("h3 word evaluation") {
  H3 g;
  CHECK(evaluate_word(g, {}) == g.identity());
  CHECK(evaluate_word(g, Word(7, 1)) == h3(7, 0, 0));
  CHECK(evaluate_word(g, word_from_letters(g, "ENWS")) == h3(0, 0, 2));
}

TEST_CASE("h3 norm: frozen examples against the exhaustive oracle") {
  // values computed with oracle_norm and pinned
  CHECK(oracle_norm(0, 0, 0) == 0);
  CHECK(oracle_norm(0, 0, 19) == 14);
  CHECK(oracle_norm(10, 5, 100) == 21);
  CHECK(oracle_norm(10, 10, 150) == 26);
  CHECK(oracle_norm(3, 2, 6) == 5);

  CHECK(h3_norm(h3(0, 0, 0)) == 0);
  CHECK(h3_norm(h3(0, 0, 19)) == 14);
  CHECK(h3_norm(h3(10, 5, 100)) == 21);
  CHECK(h3_norm(h3(10, 10, 150)) == 26);
  CHECK(h3_norm_closed(h3(3, 2, 6)) == 5);
  CHECK(h3_norm_closed(h3(10, 5, 100)) == 21);
  CHECK(h3_norm_closed(h3(0, 0, 19)) == 14);

  NormWitness w = h3_norm_witness(h3(0, 0, 19));
  CHECK(w.A == 4);
  CHECK(w.B == 3);
  CHECK(w.norm == 14);
  CHECK(2 * w.A * w.B >= 19);
  CHECK(w.regime == Regime::third);
  CHECK(h3_norm_witness(h3(10, 5, 100)).regime == Regime::second);
  CHECK(h3_norm_witness(h3(3, 2, 6)).regime == Regime::first);

  // the paper's first-regime example has its inequality reversed; the
  // definition c <= ab wins
  CHECK(h3_norm_witness(h3(10, 10, 75)).regime == Regime::first);
}

TEST_CASE("h3 norm routes agree: optimization, closed form, process, oracle") {
  for (std::int64_t a = 0; a <= 6; ++a)
    for (std::int64_t b = -5; b <= 6; ++b)
      for (std::int64_t c = -40; c <= 40; ++c) {
        std::int64_t want = oracle_norm(a, b, c);
        H3Elem g = h3(a, b, c);
        CAPTURE(a); CAPTURE(b); CAPTURE(c);
        CHECK(h3_norm(g) == want);
        CHECK(h3_norm_closed(g) == want);
        CHECK(h3_norm_process(g).norm == want);
      }
  // larger random inputs exercise the O(1) candidate path
  std::uniform_int_distribution<std::int64_t> da(-60, 60), dc(-20000, 20000);
  for (int i = 0; i < 400; ++i) {
    std::int64_t a = da(rng), b = da(rng), c = dc(rng);
    std::int64_t want = oracle_norm(a, b, c);
    CAPTURE(a); CAPTURE(b); CAPTURE(c);
    CHECK(h3_norm(h3(a, b, c)) == want);
    CHECK(h3_norm_closed(h3(a, b, c)) == want);
  }
}

TEST_CASE("h3 norm witness feasibility") {
  std::uniform_int_distribution<std::int64_t> da(-30, 30), dc(-5000, 5000);
  for (int i = 0; i < 3000; ++i) {
    H3Elem g = h3(da(rng), da(rng), dc(rng));
    NormWitness w = h3_norm_witness(g);
    std::int64_t a = std::llabs(g.a[0]), b = std::llabs(g.b[0]);
    if (a < b) std::swap(a, b);
    CHECK(w.A >= a);
    CHECK(w.B >= b);
    CHECK(2 * w.A * w.B - a * b >= std::llabs(g.c));
    CHECK(w.norm == 2 * (w.A + w.B) - (a + b));
    CHECK(w.excess == w.B - b);
  }
}

TEST_CASE("h3 canonical geodesics on a small ball") {
  H3 g;
  auto ball = bfs_ball(g, g.identity(), 8);
  for (const auto& [e, d] : ball.dist) {
    Word w = h3_canonical_geodesic(e);
    CAPTURE(g.encode(e));
    REQUIRE(static_cast<std::int64_t>(w.size()) == d);
    REQUIRE(evaluate_word(g, w) == e);
    // every prefix realizes BFS distance
    H3Elem p = g.identity();
    int i = 0;
    for (auto m : w) {
      p = g.mul(p, g.generators()[m]);
      ++i;
      REQUIRE(ball.distance(p) == i);
    }
    CHECK(h3_polyline_deviation(e, w) <= 2.0);
  }
  CHECK(word_letters(g, h3_canonical_geodesic(h3(2, 0, 0))) == "EE");
  CHECK(word_letters(g, h3_canonical_geodesic(h3(1, 1, 1))) == "EN");
  CHECK_THROWS_AS(h3_canonical_geodesic(h3(0, 0, 19)), std::invalid_argument);
}

TEST_CASE("h3 canonical geodesics for larger elements") {
  H3 g;
  std::uniform_int_distribution<std::int64_t> da(-40, 40), dc(-4000, 4000);
  for (int i = 0; i < 400; ++i) {
    std::int64_t a = da(rng), b = da(rng), c = dc(rng);
    if ((c - a * b) % 2 != 0) ++c;
    H3Elem e = h3(a, b, c);
    Word w = h3_canonical_geodesic(e);
    CAPTURE(a); CAPTURE(b); CAPTURE(c);
    CHECK(static_cast<std::int64_t>(w.size()) == h3_norm(e));
    CHECK(evaluate_word(g, w) == e);
    CHECK(h3_polyline_deviation(e, w) <= 2.0);
  }
}

TEST_CASE("h3 double area") {
  H3 g;
  CHECK(h3_double_area(word_from_letters(g, "ENWS")) == 2);
  CHECK(h3_double_area(word_from_letters(g, "NESW")) == -2);
  CHECK(h3_double_area(word_from_letters(g, "EENNWWSS")) == 8);
  // shoelace route equals the group route on random words
  std::uniform_int_distribution<int> dm(1, 4);
  for (int i = 0; i < 500; ++i) {
    Word w;
    for (int j = 0; j < 30; ++j) w.push_back(static_cast<std::uint8_t>(dm(rng)));
    CHECK(h3_double_area(w) == evaluate_word(g, w).c);
  }
}

TEST_CASE("h3 eta columns") {
  CHECK(h3_eta(10, 0, 5) == 20);
  CHECK(h3_eta(10, 0, 0) == 12);
  CHECK(h3_eta(1, 1, 0) == 0);
  CHECK_THROWS_AS(h3_eta(3, 2, 2), std::invalid_argument);

  // cross-check against BFS columns on a radius-8 ball
  H3 g;
  auto ball = bfs_ball(g, g.identity(), 8);
  for (std::int64_t x = -8; x <= 8; ++x)
    for (std::int64_t y = -8; y <= 8; ++y) {
      if (std::llabs(x) + std::llabs(y) > 8) continue;
      std::int64_t zmax = INT64_MIN;
      for (const auto& [e, d] : ball.dist)
        if (e.a[0] == x && e.b[0] == y) zmax = std::max(zmax, e.c);
      CAPTURE(x); CAPTURE(y);
      CHECK(h3_eta(8, x, y) == zmax);
    }
}

TEST_CASE("h3 projections") {
  H3 g;
  CHECK(projection_flip(h3(1, 2, 3)) == h3(-1, -2, 3));
  H3Elem x = h3(4, -7, 11);
  CHECK(projection_flip(projection_flip(x)) == x);
  CHECK(h3_norm(projection_flip(h3(10, 5, 100))) == 21);
  // flip is an automorphism
  for (int i = 0; i < 500; ++i) {
    H3Elem p = random_elem(30, 300), q = random_elem(30, 300);
    CHECK(projection_flip(g.mul(p, q)) == g.mul(projection_flip(p), projection_flip(q)));
  }
  CHECK(natural_projection(h3(1, 2, 3)) == std::pair<std::int64_t, std::int64_t>{1, 2});
  CHECK(natural_projection(g.mul(h3(1, 0, 0), h3(0, 1, 0))) ==
        std::pair<std::int64_t, std::int64_t>{1, 1});
}

TEST_CASE("h3 conjugation height shifts (rank 1 and 2)") {
  H3 g1;
  for (int i = 0; i < 10000; ++i) {
    H3Elem x = random_elem(1000, 100000);
    std::int64_t v = std::uniform_int_distribution<std::int64_t>(-3, 3)(rng);
    H3Elem lhs = g1.mul(g1.mul(h3(-v, 0, 0), x), h3(v, 0, 0));
    CHECK(lhs == h3(x.a[0], x.b[0], x.c - 2 * v * x.b[0]));
    H3Elem lhs2 = g1.mul(g1.mul(h3(0, -v, 0), x), h3(0, v, 0));
    CHECK(lhs2 == h3(x.a[0], x.b[0], x.c + 2 * x.a[0] * v));
  }
  Heisenberg<2> g2;
  std::uniform_int_distribution<std::int64_t> dv(-500, 500);
  for (int i = 0; i < 10000; ++i) {
    Heisenberg<2>::Element x;
    for (int k = 0; k < 2; ++k) {
      x.a[k] = dv(rng);
      x.b[k] = dv(rng);
    }
    x.c = dv(rng) * 100;
    int axis = static_cast<int>(rng() % 2);
    std::int64_t v = static_cast<std::int64_t>(rng() % 7) - 3;
    Heisenberg<2>::Element t, tinv;
    t.a[axis] = v;
    tinv.a[axis] = -v;
    auto lhs = g2.mul(g2.mul(tinv, x), t);
    CHECK(lhs.a == x.a);
    CHECK(lhs.b == x.b);
    CHECK(lhs.c == x.c - 2 * v * x.b[axis]);
    Heisenberg<2>::Element s, sinv;
    s.b[axis] = v;
    sinv.b[axis] = -v;
    auto lhs2 = g2.mul(g2.mul(sinv, x), s);
    CHECK(lhs2.c == x.c + 2 * x.a[axis] * v);
  }
}

TEST_CASE("h3 norm symmetries agree with BFS on the radius-10 ball") {
  H3 g;
  auto ball = bfs_ball(g, g.identity(), 10);
  for (const auto& [e, d] : ball.dist) {
    auto check_map = [&](H3Elem m) {
      auto dm = ball.distance(m);
      REQUIRE(dm.has_value());
      CHECK(*dm == d);
    };
    check_map(h3(-e.a[0], -e.b[0], e.c));   // projection flip
    check_map(h3(e.b[0], e.a[0], -e.c));    // swap
    check_map(h3(-e.a[0], e.b[0], -e.c));   // x negation
    check_map(g.inv(e));                    // inversion
  }
}

TEST_CASE("h3 codec round trip") {
  H3 g;
  CHECK(g.encode(h3(
1, -2, 3)) == "1;-2;3");
  for (int i = 0; i < 200; ++i) {
    H3Elem e = random_elem(1000, 1000000);
    CHECK(g.decode(g.encode(e)) == e);
  }
  CHECK_THROWS_AS(g.decode("1;2"), std::invalid_argument);
  CHECK_THROWS_AS(g.decode("x;2;3"), std::invalid_argument);
}
