#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hbl/connectivity.hpp"
#include "hbl/families.hpp"
#include "hbl/heisenberg.hpp"
#include "hbl/lamplighter.hpp"
#include "hbl/zd.hpp"

using namespace hbl;

namespace {

std::int64_t h3n(const H3Elem& e) { return h3_norm(e); }

}  // namespace

TEST_CASE("components") {
  H3 g;
  auto b2 = bfs_ball(g, g.identity(), 2);
  std::vector<H3Elem> elems;
  for (const auto& [e, d] : b2.dist) elems.push_back(e);
  CHECK(components(g, elems).size() == 1);

  CHECK(components(g, {g.identity(), h3(5, 0, 0)}).size() == 2);

  // P_lamp on a window splits into several S-components
  Lamplighter ll;
  auto win = lamplighter_box_window(ll, 4);
  auto p = predicted_p_lamp(ll, win);
  std::vector<LampElem> inset;
  for (std::size_t i = 0; i < win->size(); ++i)
    if (p.status[i] == Status::IN) inset.push_back(win->elems[i]);
  CHECK(components(ll, inset).size() >= 2);
}

TEST_CASE("intrinsic distance basics") {
  H3 g;
  auto b4 = bfs_ball(g, g.identity(), 4);
  std::vector<H3Elem> elems;
  for (const auto& [e, d] : b4.dist) elems.push_back(e);
  // global geodesics that stay in the ball realize the word distance
  CHECK(intrinsic_distance(g, elems, g.identity(), h3(2, 1, 2)) == bfs_norm(g, h3(2, 1, 2)));
  CHECK(intrinsic_distance(g, elems, g.identity(), g.identity()) == 0);
  CHECK(intrinsic_distance(g, {g.identity(), h3(5, 0, 0)}, g.identity(), h3(5, 0, 0)) ==
        kInfiniteDistance);
  CHECK_THROWS_AS(intrinsic_distance(g, elems, g.identity(), h3(50, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("paper pair: (0,4,24) to (0,6,24) in the 10-ball") {
  H3 g;
  auto member = [&](const H3Elem& e) { return h3_norm(e) <= 10; };
  H3Elem x = h3(0, 4, 24), y = h3(0, 6, 24);
  CHECK(h3_norm(g.mul(g.inv(x), y)) == 2);
  CHECK(h3_eta(10, 0, 5) == 20);  // the column between them tops out below 24
  CHECK(intrinsic_distance_pred(g, member, x, y) == 10);

  auto census = detour_census_pred(g, member, x, y);
  CHECK(census.distance == 10);
  REQUIRE(census.paths.size() == 4);
  for (const auto& w : census.paths) {
    CHECK(w.size() == 10);
    CHECK(g.mul(x, evaluate_word(g, w)) == y);
    // every path point stays inside the 10-ball
    H3Elem p = x;
    for (auto m : w) {
      p = g.mul(p, g.generators()[m]);
      CHECK(h3_norm(p) <= 10);
    }
  }
}

TEST_CASE("detour census: trivial cases") {
  H3 g;
  auto member = [&](const H3Elem& e) { return h3_norm(e) <= 5; };
  auto same = detour_census_pred(g, member, h3(1, 0, 0), h3(1, 0, 0));
  CHECK(same.distance == 0);
  REQUIRE(same.paths.size() == 1);
  CHECK(same.paths[0].empty());

  auto adj = detour_census_pred(g, member, h3(1, 0, 0), h3(2, 0, 0));
  CHECK(adj.distance == 1);
  REQUIRE(adj.paths.size() == 1);
  CHECK(word_letters(g, adj.paths[0]) == "E");
}

TEST_CASE("distortion: H3 at n=10 reproduces the detour value") {
  H3 g;
  auto row = distortion_row(g, 10, 2, h3n);
  CHECK(row.cells[0].delta == 0);
  CHECK(row.cells[1].delta == 1);
  CHECK(row.cells[2].delta == 10);
  // witness is emitted and re-verifiable
  auto wa = row.cells[2].witness_a, wb = row.cells[2].witness_b;
  CHECK(h3_norm(g.mul(g.inv(wa), wb)) <= 2);
  auto member = [&](const H3Elem& e) { return h3_norm(e) <= 10; };
  CHECK(intrinsic_distance_pred(g, member, wa, wb) == 10);
}

TEST_CASE("distortion: Z^2 balls are undistorted") {
  Zd<2> g;
  auto norm = [](const Zd<2>::Element& e) { return zd_norm<2>(e); };
  for (std::int64_t n : {4, 7, 10}) {
    auto row = distortion_row(g, n, 3, norm);
    for (int l = 0; l <= 3; ++l) CHECK(row.cells[l].delta == l);
  }
}

TEST_CASE("distortion: lamplighter grows without bound") {
  // Delta_n(3) for n = 4..10 comes out (6,10,10,14,14,18,18): parity gives
  // plateaus at consecutive n, but every second step strictly increases.
  Lamplighter g;
  auto norm = [](const LampElem& e) { return lamp_norm(e); };
  auto table = distortion_table(g, 4, 10, 3, norm);
  const std::int64_t want[] = {6, 10, 10, 14, 14, 18, 18};
  for (std::size_t i = 0; i < table.rows.size(); ++i)
    CHECK(table.rows[i].cells[3].delta == want[i]);
  for (std::size_t i = 0; i + 2 < table.rows.size(); ++i)
    CHECK(table.rows[i + 2].cells[3].delta > table.rows[i].cells[3].delta);
  CHECK(table.rows.front().cells[0].delta == 0);
}

TEST_CASE("distortion table: monotone in l, stabilization onsets reported") {
  H3 g;
  auto table = distortion_table(g, 8, 12, 3, h3n);
  for (const auto& row : table.rows)
    for (int l = 1; l <= 3; ++l) {
      CHECK(row.cells[l].delta >= row.cells[l - 1].delta);
      CHECK(row.cells[l].delta >= l);
    }
  REQUIRE(table.stabilization_onset.size() == 4);
  CHECK(table.stabilization_onset[1] == 8);  // Delta(1) = 1 everywhere
}

TEST_CASE("coarse components") {
  H3 g;
  auto b5 = bfs_ball(g, g.identity(), 5);
  std::vector<H3Elem> elems;
  for (const auto& [e, d] : b5.dist) elems.push_back(e);
  CHECK(coarse_components(g, elems, 1, h3n).size() == 1);
  CHECK(coarse_components(g, elems, 10, h3n).size() == 1);  // t >= diameter

  Lamplighter ll;
  auto win = lamplighter_box_window(ll, 5);
  auto p = predicted_p_lamp(ll, win);
  std::vector<LampElem> inset;
  for (std::size_t i = 0; i < win->size(); ++i)
    if (p.status[i] == Status::IN) inset.push_back(win->elems[i]);
  auto lnorm = [](const LampElem& e) { return lamp_norm(e); };
  auto parts3 = coarse_components(ll, inset, 3, lnorm);
  CHECK(parts3.size() >= 2);

  // coarsening never refines
  auto parts2 = coarse_components(ll, inset, 2, lnorm);
  CHECK(parts3.size() <= parts2.size());
  CHECK_THROWS_AS(coarse_components(ll, inset, 0, lnorm), std::invalid_argument);
}
