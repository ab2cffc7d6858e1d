#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hbl/bfs.hpp"
#include "hbl/lamplighter.hpp"

using namespace hbl;

namespace {

LampElem lamp(std::vector<std::int32_t> lamps, std::int32_t head) {
  LampElem e;
  e.lamps = std::move(lamps);
  e.head = head;
  return e;
}

}  // namespace

TEST_CASE("lamplighter products") {
  Lamplighter g;
  const auto& gens = g.generators();
  const auto &a = gens[1], &b = gens[2], &ai = gens[3], &bi = gens[4];

  CHECK(g.mul(a, ai) == g.identity());
  CHECK(g.mul(b, bi) == g.identity());
  CHECK(g.mul(b, ai) == lamp({1}, 0));  // lamp at 1/2 stays lit, head returns
  CHECK(g.inv(b) == lamp({-1}, -1));
  CHECK(lamp_head(g.mul(bi, a)) == 0);
  CHECK(lamp_head(g.identity()) == 0);
  CHECK(lamp_head(a) == 1);

  std::mt19937_64 rng(11);
  auto rand_elem = [&] {
    LampElem e;
    e.head = static_cast<std::int32_t>(rng() % 21) - 10;
    for (std::int32_t l = -9; l <= 9; l += 2)
      if (rng() & 1) e.lamps.push_back(l);
    return e;
  };
  for (int i = 0; i < 3000; ++i) {
    LampElem x = rand_elem(), y = rand_elem(), z = rand_elem();
    CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
    CHECK(g.mul(x, g.inv(x)) == g.identity());
    CHECK(g.mul(g.inv(x), x) == g.identity());
  }
}

TEST_CASE("lamp norm equals BFS exhaustively to radius 8") {
  Lamplighter g;
  auto ball = bfs_ball(g, g.identity(), 8);
  for (const auto& [e, d] : ball.dist) {
    CAPTURE(g.encode(e));
    CHECK(lamp_norm(e) == d);
  }
  // pi = head is 1-Lipschitz along generators
  for (const auto& [e, d] : ball.dist)
    for (std::size_t s = 1; s < g.generators().size(); ++s)
      CHECK(std::abs(lamp_head(g.mul(e, g.generators()[s])) - lamp_head(e)) <= 1);
}

TEST_CASE("lamp norm: pinned values") {
  CHECK(lamp_norm({}) == 0);
  CHECK(lamp_norm(lamp({-3}, 2)) == 6);   // g_2: 3N with N=2
  CHECK(lamp_norm(lamp({1}, 0)) == 2);    // cross the first edge and return
  CHECK(lamp_norm(lamp({-2 * 5 + 1}, 5)) == 15);  // g_5
}

TEST_CASE("geodesic language: pinned words") {
  Lamplighter g;
  CHECK(lamp_geodesic_prefix_member(word_from_letters(g, "aab")));
  CHECK_FALSE(lamp_geodesic_prefix_member(word_from_letters(g, "aA")));
  CHECK(lamp_geodesic_prefix_member(word_from_letters(g, "bAB")));
  CHECK(lamp_geodesic_prefix_member({}));
  CHECK_THROWS_AS(lamp_geodesic_prefix_member(word_from_letters(g, "ae")), std::invalid_argument);
}

TEST_CASE("geodesic language vs geodesic words, exhaustively to length 10") {
  // The language captures exactly the geodesic words that extend to infinite
  // geodesic rays.  Dead-end geodesics exist from length 4 on (first one:
  // aBAb, which lights both edges next to the origin and returns), so the
  // accepted set is a strict subset of the geodesic words there.
  Lamplighter g;
  struct Row {
    long geo = 0, acc = 0, geo_not_acc = 0, acc_not_geo = 0;
  };
  std::vector<Row> rows(11);
  std::vector<Word> first_mismatch(11);
  auto dfs = [&](auto&& self, const LampElem& e, Word& w) -> void {
    bool geo = lamp_norm(e) == static_cast<std::int64_t>(w.size());
    bool acc = lamp_geodesic_prefix_member(w);
    auto& r = rows[w.size()];
    r.geo += geo;
    r.acc += acc;
    if (geo && !acc) {
      ++r.geo_not_acc;
      if (first_mismatch[w.size()].empty()) first_mismatch[w.size()] = w;
    }
    if (acc && !geo) ++r.acc_not_geo;
    if ((!geo && !acc) || w.size() == 10) return;
    for (std::uint8_t s = 1; s <= 4; ++s) {
      w.push_back(s);
      self(self, g.mul(e, g.generators()[s]), w);
      w.pop_back();
    }
  };
  Word w;
  LampElem e;
  dfs(dfs, e, w);
  for (int L = 0; L <= 10; ++L) CHECK(rows[L].acc_not_geo == 0);  // accepted => geodesic
  for (int L = 0; L <= 3; ++L) CHECK(rows[L].geo_not_acc == 0);   // exact below length 4
  CHECK(rows[4].geo == 88);
  CHECK(rows[4].acc == 80);
  CHECK(rows[10].geo == 16384);
  CHECK(rows[10].acc == 11264);
  CHECK(word_letters(g, first_mismatch[4]) == "aBAb");

  // that first mismatch is a strong dead end: every neighbor is closer
  LampElem de = evaluate_word(g, first_mismatch[4]);
  CHECK(lamp_norm(de) == 4);
  for (std::uint8_t s = 1; s <= 4; ++s) CHECK(lamp_norm(g.mul(de, g.generators()[s])) == 3);
}

TEST_CASE("lamplighter horoball family") {
  Lamplighter g;
  auto [c2, r2] = lamplighter_horoball_family(2);
  CHECK(c2 == lamp({-3}, 2));
  CHECK(r2 == 5);
  auto [c1, r1] = lamplighter_horoball_family(1);
  CHECK(c1 == lamp({-1}, 1));
  CHECK(r1 == 2);
  CHECK(bfs_norm(g, lamplighter_horoball_family(3).first) == 9);  // 3N at N=3
  CHECK_THROWS_AS(lamplighter_horoball_family(0), std::invalid_argument);
}

TEST_CASE("lamplighter codec") {
  Lamplighter g;
  CHECK(g.encode(lamp({-3, 1}, 2)) == "lamps=-3,1;head=2");
  CHECK(g.encode({}) == "lamps=;head=0");
  CHECK(g.decode("lamps=-3,1;head=2") == lamp({-3, 1}, 2));
  CHECK(g.decode("lamps=;head=-4") == lamp({}, -4));
  CHECK_THROWS_AS(g.decode("lamps=2;head=0"), std::invalid_argument);   // even lamp
  CHECK_THROWS_AS(g.decode("lamps=1,1;head=0"), std::invalid_argument); // duplicate
  CHECK_THROWS_AS(g.decode("head=0"), std::invalid_argument);
}
