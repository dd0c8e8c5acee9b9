#include <set>

#include "support.hpp"

using namespace alcove;
using test::pt;

TEST_CASE("wall_count examples") {
  const RootDatum a1 = test::datum("A1"), a2 = test::datum("A2");
  CHECK(wall_count(a2, pt("1,2"), pt("1,2"), Root{{1, 1}}) == 0);
  CHECK(wall_count(a1, pt("0"), pt("3"), Root{{1}}) == 2);
  CHECK(wall_count(a2, pt("0,0"), fundamental_coweight(a2, 1), Root{{1, 0}}) == 0);
  CHECK_THROWS_AS(wall_count(a1, pt("0"), pt("3"), Root{{-1}}), ValidationError);
}

TEST_CASE("wall_distance examples") {
  const RootDatum a1 = test::datum("A1"), a2 = test::datum("A2");
  CHECK(wall_distance(a2, pt("0,0"), pt("0,0")).d == 0);
  CHECK_FALSE(wall_distance(a2, pt("0,0"), pt("0,0")).witness_root.has_value());
  for (long k = -6; k <= 6; ++k) CHECK(wall_distance(a1, pt("0"), pt(std::to_string(k))).d == std::abs(k));
  const DistanceReport r = wall_distance(a2, pt("0,0"), pt("2,0"));
  CHECK(r.d == 2);
  CHECK(r.wall_count == 1);
  REQUIRE(r.witness_root.has_value());
  CHECK(r.witness_root->coeffs == std::vector<int>{1, 0});
  CHECK_THROWS_AS(wall_distance(a2, pt("0,0"), pt("1/2,0")), ValidationError);
}

TEST_CASE("adjacency examples") {
  const RootDatum a1 = test::datum("A1"), a2 = test::datum("A2");
  CHECK(adjacent(a2, pt("0,0"), fundamental_coweight(a2, 1)));
  CHECK_FALSE(adjacent(a2, pt("0,0"), pt("0,0")));
  CHECK_FALSE(adjacent(a1, pt("0"), pt("2")));
}

TEST_CASE("wall distance and adjacency agree with the oracle") {
  std::mt19937_64 rng(3);
  for (const auto& name : test::small_types()) {
    CAPTURE(name);
    const RootDatum d = test::datum(name);
    const oracle::System o = oracle::make_system(name);
    const VertexSet box = enumerate_box_vertices(d, std::vector<Rational>(d.rank(), -2), std::vector<Rational>(d.rank(), 2));
    std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
    for (int s = 0; s < 400; ++s) {
      const auto& x = box.points[pick(rng)];
      const auto& y = box.points[pick(rng)];
      CHECK(wall_distance(d, x, y).d == oracle::wall_distance(o, x.coords(), y.coords()));
      CHECK(adjacent(d, x, y) == oracle::adjacent(o, x.coords(), y.coords()));
    }
  }
}

TEST_CASE("apartment_ball examples and oracle") {
  const RootDatum a1 = test::datum("A1"), a2 = test::datum("A2");
  CHECK(apartment_ball(a2, pt("1,0"), 0).points == std::vector<ApartmentPoint>{pt("1,0")});
  CHECK(apartment_ball(a1, pt("0"), 2).points == std::vector<ApartmentPoint>{pt("-2"), pt("-1"), pt("0"), pt("1"), pt("2")});
  std::set<ApartmentPoint> chamber;
  for (const auto& p : apartment_ball(a2, pt("0,0"), 1).points) {
    if (p[0] >= 0 && p[1] >= 0) chamber.insert(p);
  }
  CHECK(chamber == std::set<ApartmentPoint>{pt("0,0"), pt("1,0"), pt("0,1")});

  for (const std::string name : {"A2", "B2", "G2", "A3"}) {
    const RootDatum d = test::datum(name);
    const oracle::System o = oracle::make_system(name);
    const ApartmentPoint centre = alcove_vertex(d, d.rank());
    for (long r = 1; r <= 2; ++r) {
      CAPTURE(name);
      CAPTURE(r);
      std::set<ApartmentPoint> want;
      oracle::Coords lo = centre.coords(), hi = centre.coords();
      for (auto& c : lo) c -= r + 1;
      for (auto& c : hi) c += r + 1;
      for (const auto& c : oracle::box_vertices(o, lo, hi)) {
        if (oracle::wall_distance(o, centre.coords(), c) <= r) want.insert(test::point(c));
      }
      const VertexSet got = apartment_ball(d, centre, r);
      CHECK(std::set<ApartmentPoint>(got.points.begin(), got.points.end()) == want);
    }
  }
}

TEST_CASE("simplicial distance examples") {
  const RootDatum a1 = test::datum("A1");
  CHECK(simplicial_distance(a1, pt("0"), pt("0"), 5) == 0);
  CHECK(simplicial_distance(a1, pt("0"), pt("3"), 5) == 3);
  CHECK_THROWS_AS(simplicial_distance(a1, pt("0"), pt("9"), 4), ResourceError);
}

TEST_CASE("simplicial distances agree with breadth-first search on the brute-force graph") {
  for (const std::string name : {"A2", "B2", "G2"}) {
    CAPTURE(name);
    const RootDatum d = test::datum(name);
    const oracle::System o = oracle::make_system(name);
    const auto vertices = oracle::box_vertices(o, oracle::Coords(2, -4), oracle::Coords(2, 4));
    const auto dist = oracle::graph_distances(o, vertices);
    const SimplicialDistanceTable table(d, 6);
    int compared = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = 0; j < vertices.size(); ++j) {
        // Near pairs well inside the box, so shortest paths are not cut off by its boundary.
        bool inner = true;
        for (int k = 0; k < 2; ++k) inner = inner && abs(vertices[i][k]) <= 1 && abs(vertices[j][k]) <= 1;
        if (!inner || oracle::wall_distance(o, vertices[i], vertices[j]) > 3) continue;
        ++compared;
        const auto x = test::point(vertices[i]), y = test::point(vertices[j]);
        CHECK(table.distance(x, y) == dist[i][j]);
        if (compared % 7 == 0) CHECK(simplicial_distance(d, x, y, 8) == dist[i][j]);
      }
    }
    CHECK(compared >= 50);
  }
}

TEST_CASE("G2 has a pair with simplicial distance above the wall distance") {
  const RootDatum g2 = test::datum("G2");
  const ApartmentPoint x = pt("-8/3,4"), y = pt("-2,2");
  CHECK(wall_distance(g2, x, y).d == 2);
  CHECK(simplicial_distance(g2, x, y, 6) == 3);
  const oracle::System o = oracle::make_system("G2");
  const auto vertices = oracle::box_vertices(o, {-6, 0}, {1, 6});
  const auto dist = oracle::graph_distances(o, vertices);
  const auto i = std::find(vertices.begin(), vertices.end(), x.coords()) - vertices.begin();
  const auto j = std::find(vertices.begin(), vertices.end(), y.coords()) - vertices.begin();
  CHECK(dist[i][j] == 3);
}

TEST_CASE("B3 pair with simplicial distance above the wall distance") {
  // The distances of the classical types are often said to coincide; this pair shows
  // they do not for B3 under the definitions used here. Confirmed by an independent graph.
  const RootDatum b3 = test::datum("B3");
  const ApartmentPoint x = pt("-4,0,1/2"), y = pt("-5/2,0,1/2");
  CHECK(wall_distance(b3, x, y).d == 2);
  CHECK(simplicial_distance(b3, x, y, 6) == 3);
  const oracle::System o = oracle::make_system("B3");
  const auto vertices = oracle::box_vertices(o, {-6, -2, -1}, {0, 2, 2});
  const auto dist = oracle::graph_distances(o, vertices);
  const auto i = std::find(vertices.begin(), vertices.end(), x.coords()) - vertices.begin();
  const auto j = std::find(vertices.begin(), vertices.end(), y.coords()) - vertices.begin();
  CHECK(dist[i][j] == 3);
}

TEST_CASE("pairwise table matches single queries") {
  const RootDatum b2 = test::datum("B2");
  const SimplicialDistanceTable table(b2, 6);
  const VertexSet ball = apartment_ball(b2, pt("0,0"), 2);
  const PairwiseDistances pd = table.pairwise(ball.points);
  for (std::size_t i = 0; i < pd.size; i += 3) {
    for (std::size_t j = 0; j < pd.size; j += 5) {
      CHECK(pd.wall_at(i, j) == wall_distance(b2, ball.points[i], ball.points[j]).d);
      CHECK(pd.simplicial_at(i, j) == table.distance(ball.points[i], ball.points[j]));
    }
  }
  CHECK(table.explored_vertices() > 0);
  CHECK(table.max_radius() == 6);
}
