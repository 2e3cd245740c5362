#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "planeguard/coalition.hpp"
#include "planeguard/evasion.hpp"
#include "planeguard/pair_barrier.hpp"
#include "planeguard/rng.hpp"
#include "planeguard/sweep.hpp"
#include "planeguard/triple_barrier.hpp"
#include "test_support.hpp"

using namespace planeguard;

namespace {

bool piece_sets_equal(const std::vector<BarrierPiece>& a,
                      const std::vector<BarrierPiece>& b, double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  for (const auto& pa : a) {
    bool matched = false;
    for (const auto& pb : b)
      if (pieces_equal(pa, pb, tol)) matched = true;
    if (!matched) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("active pursuers: stacked pair keeps only the lower one") {
  std::vector<Point3> p{{0, 0, 1}, {0, 0, 2}};
  CHECK(active_pursuers(p) == std::vector<int>{0});
}

TEST_CASE("active pursuers: single pursuer is always active") {
  std::vector<Point3> p{{0, 0, 1}};
  CHECK(active_pursuers(p) == std::vector<int>{0});
}

TEST_CASE("active pursuers: high center above a ring is shut out") {
  std::vector<Point3> p{{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1},
                        {0, 0, 10}};
  CHECK(active_pursuers(p) == std::vector<int>{0, 1, 2, 3});
  const auto owners = pgtest::brute_force_owners(p, 120.0, 501);
  CHECK(owners[0]);
  CHECK(owners[1]);
  CHECK(owners[2]);
  CHECK(owners[3]);
  CHECK_FALSE(owners[4]);
}

TEST_CASE("active pursuers: mirrored twins merge to the upper one") {
  std::vector<Point3> p{{0, 0, 1}, {0, 0, -1}, {5, 5, 1}};
  CHECK(active_pursuers(p) == std::vector<int>{0, 2});
}

TEST_CASE("active triples: square-ish spread gives the two hand-checked caps") {
  std::vector<Point3> p{{0, 0, 1}, {4, 0, 1}, {0, 4, 1}, {5, 5, 1}};
  const auto active = active_pursuers(p);
  CHECK(active == std::vector<int>{0, 1, 2, 3});
  const CoalitionSet cs = active_triples(p, active);
  REQUIRE(cs.triples.size() == 2);
  CHECK(cs.triples[0] == std::array<int, 3>{0, 1, 2});
  CHECK(cs.triples[1] == std::array<int, 3>{1, 2, 3});
  CHECK(cs.pairs.empty());

  // Independent verification of both coalition conditions: the equal-time
  // point of the winning triple beats the outsider, and vice versa fails.
  const Point3 c012 = equidistant_point(p[0], p[1], p[2]);
  CHECK(dist(c012, p[0]) < dist(c012, p[3]) - 1e-9);
  const Point3 c013 = equidistant_point(p[0], p[1], p[3]);
  CHECK(dist(c013, p[2]) < dist(c013, p[0]));  // pursuer 2 spoils {0,1,3}
}

TEST_CASE("active triples: co-circular square is degenerate") {
  std::vector<Point3> p{{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}};
  const auto active = active_pursuers(p);
  CHECK(active.size() == 4);
  CHECK_THROWS_AS(active_triples(p, active), GameError);
}

TEST_CASE("multi barrier: lone submerged pursuer leaves its mirror point") {
  const GameConfig config = make_game_config({{0, 0, -2}}, std::nullopt);
  const auto pieces = multi_barrier(config);
  REQUIRE(pieces.size() == 1);
  REQUIRE(std::holds_alternative<PointPiece>(pieces[0].shape));
  CHECK(dist(std::get<PointPiece>(pieces[0].shape).location, {0, 0, 2}) <
        1e-12);
}

TEST_CASE("multi barrier: adjacent caps agree over the shared pair") {
  const GameConfig config =
      make_game_config({{0, 0, 1}, {4, 0, 1}, {0, 4, 1}, {5, 5, 1}},
                       std::nullopt);
  const auto pieces = multi_barrier(config);
  std::vector<CapPiece> caps;
  for (const auto& piece : pieces)
    if (std::holds_alternative<CapPiece>(piece.shape))
      caps.push_back(std::get<CapPiece>(piece.shape));
  REQUIRE(caps.size() == 2);
  // Heights over the shared edge {p2, p3} midpoint (2, 2, 0).
  const Point3 mid{2, 2, 0};
  const double h0 = lift_height(caps[0].radius, dist_sq(mid, caps[0].center));
  const double h1 = lift_height(caps[1].radius, dist_sq(mid, caps[1].center));
  CHECK(std::fabs(h0 - h1) < 1e-9);
}

TEST_CASE("verdicts for the lone mirrored pursuer") {
  auto config = [](Point3 e) {
    return make_game_config({{0, 0, -1}}, e);
  };
  CHECK(classify_initial_state(config({0, 0, 1})).tag == VerdictTag::OnBarrier);
  CHECK(classify_initial_state(config({0, 0, 2})).tag == VerdictTag::PursuerWin);
  const Verdict ev = classify_initial_state(config({1, 0, 1}));
  CHECK(ev.tag == VerdictTag::EvaderWin);
  const MarginReport oracle = escape_margin_supremum(
      {1, 0, 1}, std::vector<Point3>{{0, 0, -1}});
  CHECK(oracle.supremum > 0.0);
}

TEST_CASE("engine matches the direct three-pursuer constructions") {
  // One(i): stacked column.
  {
    const GameConfig config =
        make_game_config({{0.5, -0.25, -1}, {0.5, -0.25, 2}, {0.5, -0.25, 3}},
                         std::nullopt);
    const auto pieces = multi_barrier(config);
    std::vector<BarrierPiece> expect;
    BarrierPiece b = single_barrier(Point3{0.5, -0.25, -1});
    expect.push_back(b);
    CHECK(piece_sets_equal(pieces, expect));
  }
  // Two(i,j): dominated third.
  {
    const GameConfig config = make_game_config(
        {{0, 0, 1}, {2, 0, 1}, {1, 0, 50}}, std::nullopt);
    const auto pieces = multi_barrier(config);
    CHECK(piece_sets_equal(pieces, pair_barrier({0, 0, 1}, {2, 0, 1})));
  }
  // Three: generic spread -> the cap.
  {
    const GameConfig config = make_game_config(
        {{1, 0, 0.5}, {-1, 1, 0.2}, {0, -1, 1}}, std::nullopt);
    const auto pieces = multi_barrier(config);
    REQUIRE(pieces.size() == 1);
    REQUIRE(std::holds_alternative<CapPiece>(pieces[0].shape));
    const CapPiece want =
        triple_barrier_noncollinear({1, 0, 0.5}, {-1, 1, 0.2}, {0, -1, 1});
    const CapPiece& got = std::get<CapPiece>(pieces[0].shape);
    CHECK(dist(got.center, want.center) < 1e-9);
    CHECK(std::fabs(got.radius - want.radius) < 1e-9);
  }
  // ThreeCollinear: the two middle-outer arcs.
  {
    const GameConfig config = make_game_config(
        {{0, 0, 1}, {2, 0, 1}, {1, 0, 1}}, std::nullopt);
    const auto pieces = multi_barrier(config);
    CHECK(piece_sets_equal(
        pieces, triple_barrier_collinear({0, 0, 1}, {2, 0, 1}, {1, 0, 1}, 2)));
  }
  // Mirror-stacked pair plus an offset pursuer: engine equals the pair path.
  {
    const GameConfig config = make_game_config(
        {{0, 0, 1}, {0, 0, -1}, {5, 5, 1}}, std::nullopt);
    const auto pieces = multi_barrier(config);
    CHECK(piece_sets_equal(pieces, pair_barrier({0, 0, 1}, {5, 5, 1})));
  }
}

TEST_CASE("removing an inactive pursuer changes nothing") {
  Rng rng(103);
  int done = 0;
  while (done < 30) {
    const int n = 4 + int(rng.uniform_index(0, 2));
    Rng cfg(rng.next_u64());
    GameConfig config;
    try {
      config = random_config(cfg, n);
    } catch (const GameError&) { continue; }
    std::vector<int> active;
    std::vector<BarrierPiece> pieces;
    try {
      active = active_pursuers(config.pursuers);
      pieces = multi_barrier(config);
    } catch (const GameError&) { continue; }  // degenerate random draw
    if (int(active.size()) == n) continue;    // nothing inactive to remove
    ++done;

    for (int k = 0; k < n; ++k) {
      if (std::find(active.begin(), active.end(), k) != active.end()) continue;
      GameConfig reduced;
      reduced.evader = config.evader;
      for (int m = 0; m < n; ++m)
        if (m != k) reduced.pursuers.push_back(config.pursuers[m]);
      CHECK(piece_sets_equal(pieces, multi_barrier(reduced)));

      Rng qrng(done * 7919 + k);
      for (int t = 0; t < 50; ++t) {
        Point3 q{qrng.uniform(-6, 6), qrng.uniform(-6, 6),
                 qrng.uniform(0.05, 6)};
        GameConfig full_q = config;
        full_q.evader = q;
        GameConfig reduced_q = reduced;
        reduced_q.evader = q;
        CHECK(classify_initial_state(full_q).tag ==
              classify_initial_state(reduced_q).tag);
      }
    }
  }
}

TEST_CASE("pursuer wins stay wins when pursuers join") {
  Rng rng(107);
  int wins = 0;
  while (wins < 40) {
    Rng cfg(rng.next_u64());
    GameConfig config;
    try {
      config = random_config(cfg, 1 + int(cfg.uniform_index(0, 3)));
    } catch (const GameError&) { continue; }
    Verdict v;
    try {
      v = classify_initial_state(config);
    } catch (const GameError&) { continue; }
    if (v.tag != VerdictTag::PursuerWin) continue;
    ++wins;
    GameConfig bigger = config;
    bigger.pursuers.push_back(pgtest::random_point(cfg, -5, 5));
    try {
      CHECK(classify_initial_state(bigger).tag == VerdictTag::PursuerWin);
    } catch (const GameError&) { --wins; }
  }
}

TEST_CASE("verdict tag survives rotation, translation, and scaling") {
  Rng rng(109);
  int done = 0;
  while (done < 60) {
    Rng cfg(rng.next_u64());
    GameConfig config;
    Verdict v;
    try {
      config = random_config(cfg, 1 + int(cfg.uniform_index(0, 4)));
      v = classify_initial_state(config);
    } catch (const GameError&) { continue; }
    ++done;

    const double a = cfg.uniform(0, 6.28);
    const double c = std::cos(a), s = std::sin(a);
    const double tx = cfg.uniform(-10, 10), ty = cfg.uniform(-10, 10);
    const double lambda = cfg.uniform(0.1, 4.0);
    auto move = [&](const Point3& p) {
      return Point3{lambda * (c * p.x - s * p.y + tx),
                    lambda * (s * p.x + c * p.y + ty), lambda * p.z};
    };
    GameConfig moved;
    for (const Point3& p : config.pursuers) moved.pursuers.push_back(move(p));
    moved.evader = move(*config.evader);
    try {
      CHECK(classify_initial_state(moved).tag == v.tag);
    } catch (const GameError&) { --done; }
  }
}

TEST_CASE("verdict matches the oracle sign on random configurations") {
  Rng rng(113);
  OracleOptions opts;
  opts.grid = 101;
  int checked = 0;
  while (checked < 80) {
    Rng cfg(rng.next_u64());
    GameConfig config;
    Verdict v;
    try {
      config = random_config(cfg, 1 + int(cfg.uniform_index(0, 7)));
      v = classify_initial_state(config);
    } catch (const GameError&) { continue; }
    const MarginReport oracle =
        escape_margin_supremum(*config.evader, config.pursuers, opts);
    if (!oracle.resolved || std::fabs(oracle.supremum) <= 1e-3) continue;
    ++checked;
    CHECK_FALSE(verdict_conflicts_oracle(v, oracle, 1e-3));
    if (v.tag == VerdictTag::PursuerWin) CHECK(oracle.supremum < 0);
    if (v.tag == VerdictTag::EvaderWin) CHECK(oracle.supremum > 0);
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(make_game_config({}, std::nullopt), GameError);
  CHECK_THROWS_AS(make_game_config({{0, 0, 1}, {0, 0, 1}}, std::nullopt),
                  GameError);
  CHECK_THROWS_AS(make_game_config({{0, 0, 1}}, Point3{0, 0, -1}), GameError);
  CHECK_THROWS_AS(make_game_config({{0, 0, 1}}, Point3{0, 0, 1}), GameError);
  CHECK_THROWS_AS(classify_initial_state(make_game_config({{0, 0, 1}},
                                                          std::nullopt)),
                  GameError);
}
