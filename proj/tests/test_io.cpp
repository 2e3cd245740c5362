#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "planeguard/config_io.hpp"
#include "planeguard/mesh.hpp"
#include "planeguard/sweep.hpp"
#include "planeguard/triple_barrier.hpp"

using namespace planeguard;

TEST_CASE("config: canonical plane loads unchanged") {
  const LoadedConfig l = parse_config(R"({
    "K": [0, 0, 1], "b": 0,
    "pursuers": [[0, 0, -1]],
    "evader": [0, 0, 1]
  })");
  REQUIRE(l.config.pursuers.size() == 1);
  CHECK(dist(l.config.pursuers[0], {0, 0, -1}) < 1e-12);
  REQUIRE(l.config.evader.has_value());
  CHECK(dist(*l.config.evader, {0, 0, 1}) < 1e-12);
}

TEST_CASE("config: tilted plane converts to canonical coordinates") {
  const LoadedConfig l = parse_config(R"({
    "K": [1, 0, 0], "b": 1,
    "pursuers": [[0, 0, 0], [3, 1, -2]],
    "evader": [4, 0, 0]
  })");
  // Signed distances to the plane x = 1 become z-coordinates.
  CHECK(l.config.pursuers[0].z == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(l.config.pursuers[1].z == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(l.config.evader->z == doctest::Approx(3.0).epsilon(1e-12));
  // Distances survive the frame change.
  CHECK(dist(l.config.pursuers[0], l.config.pursuers[1]) ==
        doctest::Approx(std::sqrt(9 + 1 + 4)).epsilon(1e-12));
}

TEST_CASE("config: rejection paths carry field context") {
  CHECK_THROWS_WITH_AS(parse_config(R"({"K":[0,0,1],"b":0,
    "pursuers":[[0,0,-1]], "evader":[0,0,0], "extra":1})"),
                       doctest::Contains("extra"), GameError);
  CHECK_THROWS_AS(parse_config(R"({"K":[1,0,0],"b":1,
    "pursuers":[[0,0,0]], "evader":[0,0,0]})"), GameError);  // K.e = 0 < 1
  CHECK_THROWS_AS(parse_config(R"({"K":[0,0,0],"b":0,
    "pursuers":[[0,0,-1]]})"), GameError);
  CHECK_THROWS_AS(parse_config(R"({"K":[0,0,1],"b":0,
    "pursuers":[[1,2,3],[1,2,3]]})"), GameError);
  CHECK_THROWS_AS(parse_config(R"({"K":[0,0,1],"b":0,
    "pursuers":[[1,2,"x"]]})"), GameError);
  CHECK_THROWS_AS(parse_config("not json"), GameError);
}

TEST_CASE("mesh: cap vertices sit on the sphere over the triangle") {
  const CapPiece cap =
      triple_barrier_noncollinear({1, 0, 1}, {-1, 0, 1}, {0, 2, 1});
  const BarrierMesh mesh = export_mesh({{cap, "cap{1,2,3}"}}, 32);
  REQUIRE(!mesh.vertices.empty());
  REQUIRE(mesh.faces.size() > 500);
  for (const auto& v : mesh.vertices) {
    const Point3 q{v[0], v[1], v[2]};
    CHECK(std::fabs(dist(q, cap.center) - cap.radius) < 1e-6);
    // Inside the (closed) triangle: barycentric residuals.
    const double area = projected_doubled_area(cap.triangle[0], cap.triangle[1],
                                               cap.triangle[2]);
    const double b0 =
        projected_doubled_area(q, cap.triangle[1], cap.triangle[2]) / area;
    const double b1 =
        projected_doubled_area(cap.triangle[0], q, cap.triangle[2]) / area;
    CHECK(b0 > -1e-9);
    CHECK(b1 > -1e-9);
    CHECK(b0 + b1 < 1.0 + 1e-9);
  }
  for (const auto& t : mesh.piece_tags) CHECK(t == "cap{1,2,3}");
  CHECK(connected_components(mesh) == 1);
}

TEST_CASE("mesh: point piece, empty list, resolution floor") {
  const BarrierMesh point =
      export_mesh({{PointPiece{{0, 0, 2}}, "point{1}"}}, 16);
  REQUIRE(point.vertices.size() == 1);
  CHECK(point.vertices[0] == std::array<double, 3>{0, 0, 2});
  REQUIRE(point.points.size() == 1);

  const BarrierMesh empty = export_mesh({}, 16);
  CHECK(empty.vertices.empty());
  const std::string json = mesh_to_json(empty);
  CHECK(json.find("\"vertices\"") != std::string::npos);

  CHECK_THROWS_AS(export_mesh({}, 7), GameError);
}

TEST_CASE("mesh: raw-frame export round-trips through the canonical map") {
  const LoadedConfig l = parse_config(R"({
    "K": [1, 1, 1], "b": 2,
    "pursuers": [[0, 0, 0], [2, 1, 0], [1, -1, 3]],
    "evader": [2, 2, 2]
  })");
  const auto pieces = multi_barrier(l.config);
  REQUIRE(!pieces.empty());
  const BarrierMesh canonical = export_mesh(pieces, 16);
  const BarrierMesh raw = export_mesh(pieces, 16, true, &l.frame);
  REQUIRE(canonical.vertices.size() == raw.vertices.size());
  for (std::size_t i = 0; i < raw.vertices.size(); ++i) {
    const Point3 back = to_canonical(
        l.frame, {raw.vertices[i][0], raw.vertices[i][1], raw.vertices[i][2]});
    const Point3 want{canonical.vertices[i][0], canonical.vertices[i][1],
                      canonical.vertices[i][2]};
    CHECK(dist(back, want) < 1e-9);
  }
}

TEST_CASE("mesh: obj output carries v/f/l records") {
  const CapPiece cap =
      triple_barrier_noncollinear({1, 0, 1}, {-1, 0, 1}, {0, 2, 1});
  const ArcPiece arc = make_pair_arc({0, 0, 1}, {2, 0, 1});
  const std::string obj =
      mesh_to_obj(export_mesh({{cap, "cap{1,2,3}"}, {arc, "arc{1,2}"}}, 12));
  CHECK(obj.find("\nv ") != std::string::npos);
  CHECK(obj.find("\nf ") != std::string::npos);
  CHECK(obj.find("\nl ") != std::string::npos);
  CHECK(obj.find("g cap{1,2,3}") != std::string::npos);
  CHECK(obj.find("g arc{1,2}") != std::string::npos);
}

TEST_CASE("sweep: identical seeds give byte-identical reports") {
  SweepOptions opts;
  opts.n_configs = 12;
  opts.pursuers_min = 1;
  opts.pursuers_max = 3;
  opts.seed = 977;
  opts.trials = 5;
  opts.oracle.grid = 61;
  const std::string a = sweep_csv(run_sweep(opts));
  const std::string b = sweep_csv(run_sweep(opts));
  CHECK(a == b);
  CHECK(a.find("seed,n,verdict,supremum,agree,sim_pass\n") == 0);
}

TEST_CASE("sweep: rows agree with the oracle and the simulator") {
  SweepOptions opts;
  opts.n_configs = 25;
  opts.pursuers_min = 1;
  opts.pursuers_max = 4;
  opts.seed = 1009;
  opts.trials = 20;
  opts.oracle.grid = 81;
  const SweepResult r = run_sweep(opts);
  CHECK(r.disagreements == 0);
  CHECK(r.sim_failures == 0);
  CHECK(int(r.rows.size()) == opts.n_configs);
}
