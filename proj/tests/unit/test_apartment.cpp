#include <set>

#include "alcove/detail/lattice.hpp"
#include "support.hpp"

using namespace alcove;
using test::pt;

TEST_CASE("alcove vertices and coweights") {
  const RootDatum g2 = test::datum("G2");
  CHECK(alcove_vertex(g2, 0) == pt("0,0"));
  CHECK(alcove_vertex(g2, 1) == pt("1/3,0"));
  CHECK(alcove_vertex(g2, 2) == pt("0,1/2"));
  CHECK(fundamental_coweight(g2, 2) == pt("0,1"));
}

TEST_CASE("eval_affine") {
  const RootDatum a2 = test::datum("A2");
  CHECK(eval_affine(a2, {Root{{1, 0}}, -1}, fundamental_coweight(a2, 1)) == 0);
  CHECK(eval_affine(test::datum("A1"), {Root{{1}}, 2}, pt("-3")) == -1);
  CHECK(eval_affine(a2, {Root{{1, 1}}, 0}, pt("0,0")) == 0);
}

TEST_CASE("in_scaled_alcove") {
  CHECK(in_scaled_alcove(test::datum("E7"), 0, ApartmentPoint::origin(7)));
  CHECK(in_scaled_alcove(test::datum("G2"), 1, pt("1/3,0")));
  CHECK_FALSE(in_scaled_alcove(test::datum("A2"), 1, pt("1,1")));
  CHECK_FALSE(in_scaled_alcove(test::datum("A2"), 5, pt("-1,1")));
}

TEST_CASE("vertex and special predicates") {
  const RootDatum a2 = test::datum("A2"), b2 = test::datum("B2");
  CHECK(is_vertex(a2, pt("0,0")));
  CHECK(is_vertex(a2, fundamental_coweight(a2, 1)));
  CHECK_FALSE(is_vertex(a2, pt("1/2,0")));
  CHECK(is_special(b2, pt("0,0")));
  CHECK(is_special(b2, fundamental_coweight(b2, 1)));
  CHECK_FALSE(is_special(b2, alcove_vertex(b2, 2)));
  CHECK(is_vertex(b2, alcove_vertex(b2, 2)));
}

TEST_CASE("folding examples") {
  const RootDatum a1 = test::datum("A1"), a2 = test::datum("A2"), b2 = test::datum("B2");
  CHECK(fold_to_alcove(a1, pt("-1")) == pt("1"));
  CHECK(fold_to_alcove(a2, pt("1,0")) == pt("1,0"));
  // 2 omega_1 is congruent to omega_2 modulo the coroot lattice of SL3.
  CHECK(fold_to_alcove(a2, pt("2,0")) == pt("0,1"));
  CHECK(vertex_type(a2, pt("2,0")) == 2);
  CHECK(vertex_type(a2, pt("0,0")) == 0);
  CHECK(vertex_type(a2, pt("3,0")) == 0);
  CHECK(vertex_type(b2, fundamental_coweight(b2, 1)) == 1);
  CHECK_THROWS_AS(vertex_type(a2, pt("1/2,0")), ValidationError);
  CHECK_THROWS_AS(fold_to_alcove(a2, pt("1,0,0")), ValidationError);
}

TEST_CASE("fold step limit raises a resource error") {
  Limits tight;
  tight.fold_step_limit = 2;
  CHECK_THROWS_AS(fold_to_alcove(test::datum("A2"), pt("40,-17"), tight), ResourceError);
}

TEST_CASE("folding is invariant under random affine reflections") {
  std::mt19937_64 rng(5);
  for (const auto& name : test::small_types()) {
    CAPTURE(name);
    const RootDatum d = test::datum(name);
    const oracle::System o = oracle::make_system(name);
    std::uniform_int_distribution<std::size_t> pick_root(0, o.positive.size() - 1);
    std::uniform_int_distribution<long> pick_k(-3, 3);
    const VertexSet box = enumerate_box_vertices(d, std::vector<Rational>(d.rank(), -2), std::vector<Rational>(d.rank(), 2));
    for (std::size_t s = 0; s < 60; ++s) {
      const ApartmentPoint x = box.points[std::uniform_int_distribution<std::size_t>(0, box.size() - 1)(rng)];
      const ApartmentPoint fx = fold_to_alcove(d, x);
      CHECK(in_scaled_alcove(d, 1, fx));
      CHECK(fold_to_alcove(d, fx) == fx);
      CHECK(fx == alcove_vertex(d, vertex_type(d, x)));
      oracle::Coords y = x.coords();
      for (int step = 0; step < 6; ++step) y = oracle::reflect(o, y, o.positive[pick_root(rng)], pick_k(rng));
      CAPTURE(x.to_string());
      CHECK(fold_to_alcove(d, test::point(y)) == fx);
    }
  }
}

TEST_CASE("scaled kernels agree with exact rational arithmetic") {
  std::mt19937_64 rng(11);
  for (const auto& name : test::small_types()) {
    CAPTURE(name);
    const RootDatum d = test::datum(name);
    const oracle::System o = oracle::make_system(name);
    const detail::Lattice lattice(d);
    for (int s = 0; s < 300; ++s) {
      const auto c = test::random_coords(rng, d.rank(), d.marks_lcm(), 3);
      const ApartmentPoint x = test::point(c);
      const auto scaled = lattice.to_scaled(x);
      REQUIRE(scaled.has_value());
      CHECK(lattice.to_point(*scaled) == x);
      CHECK(lattice.is_vertex(*scaled) == oracle::is_vertex(o, c));
      CHECK(is_vertex(d, x) == oracle::is_vertex(o, c));
      if (is_vertex(d, x)) CHECK(lattice.to_point(lattice.fold(*scaled, 100000, false).point) == fold_to_alcove(d, x));
    }
    // Off-lattice points have no scaled form and are never vertices.
    const ApartmentPoint off(std::vector<Rational>(d.rank(), Rational(1, 7 * d.marks_lcm())));
    CHECK_FALSE(lattice.to_scaled(off).has_value());
    CHECK_FALSE(is_vertex(d, off));
  }
}

TEST_CASE("a type-i vertex has denominators dividing c_i") {
  for (const std::string name : {"G2", "B3", "C3", "F4"}) {
    CAPTURE(name);
    const RootDatum d = test::datum(name);
    const VertexSet box = enumerate_box_vertices(d, std::vector<Rational>(d.rank(), -1), std::vector<Rational>(d.rank(), 1));
    for (std::size_t k = 0; k < box.size(); ++k) {
      const int type = box.types[k];
      const int den = type == 0 ? 1 : d.highest_root_coeffs()[type - 1];
      for (const auto& c : box.points[k].coords()) CHECK(den % c.get_den().get_si() == 0);
    }
  }
}

TEST_CASE("box enumeration matches brute force on the fine lattice") {
  for (const auto& name : test::small_types()) {
    CAPTURE(name);
    const RootDatum d = test::datum(name);
    const oracle::System o = oracle::make_system(name);
    const long span = d.rank() <= 2 ? 3 : 1;
    const std::vector<Rational> lo(d.rank(), Rational(-span)), hi(d.rank(), Rational(span) + Rational(1, 2));
    const VertexSet got = enumerate_box_vertices(d, lo, hi);
    std::set<ApartmentPoint> want;
    for (const auto& c : oracle::box_vertices(o, lo, hi)) want.insert(test::point(c));
    CHECK(std::set<ApartmentPoint>(got.points.begin(), got.points.end()) == want);
    CHECK(std::is_sorted(got.points.begin(), got.points.end()));
    std::size_t total = 0;
    for (auto n : got.per_type_counts) total += n;
    CHECK(total == got.size());
  }
}

TEST_CASE("box enumeration examples") {
  const RootDatum a1 = test::datum("A1"), a2 = test::datum("A2");
  CHECK(enumerate_box_vertices(a1, {-2}, {2}).points ==
        std::vector<ApartmentPoint>{pt("-2"), pt("-1"), pt("0"), pt("1"), pt("2")});
  CHECK(enumerate_box_vertices(a2, {Rational(1, 2), 0}, {Rational(1, 2), 0}).size() == 0);
  CHECK(enumerate_box_vertices(a2, {0, 0}, {1, 1}).points ==
        std::vector<ApartmentPoint>{pt("0,0"), pt("0,1"), pt("1,0"), pt("1,1")});
}

TEST_CASE("scaled alcove enumeration") {
  const RootDatum a2 = test::datum("A2");
  const VertexSet r1 = enumerate_scaled_alcove_vertices(a2, 1);
  CHECK(r1.points == std::vector<ApartmentPoint>{pt("0,0"), pt("0,1"), pt("1,0")});
  CHECK(r1.per_type_counts == std::vector<std::size_t>{1, 1, 1});
  const VertexSet r2 = enumerate_scaled_alcove_vertices(a2, 2);
  CHECK(r2.size() == 6);
  for (const auto& p : r2.points) CHECK((p[0] >= 0 && p[1] >= 0 && p[0] + p[1] <= 2 && is_integer(p[0])));
  for (const std::string name : {"E8", "G2", "F4"}) {
    CHECK(enumerate_scaled_alcove_vertices(test::datum(name), 0).points ==
          std::vector<ApartmentPoint>{ApartmentPoint::origin(test::datum(name).rank())});
  }
  // The closed alcove has exactly its d + 1 vertices.
  for (const auto& type : all_types_up_to_rank(8)) {
    CAPTURE(type.name());
    CHECK(enumerate_scaled_alcove_vertices(build_root_datum(type), 1).size() == static_cast<std::size_t>(type.rank() + 1));
  }
}

TEST_CASE("scaled alcove enumeration matches the oracle") {
  for (const std::string name : {"A2", "B2", "G2", "B3", "C3", "A3"}) {
    const RootDatum d = test::datum(name);
    const oracle::System o = oracle::make_system(name);
    for (long r = 0; r <= 3; ++r) {
      CAPTURE(name);
      CAPTURE(r);
      std::set<ApartmentPoint> want;
      for (const auto& c : oracle::box_vertices(o, oracle::Coords(d.rank(), 0), oracle::Coords(d.rank(), r))) {
        if (oracle::in_scaled_alcove(o, c, r)) want.insert(test::point(c));
      }
      const VertexSet got = enumerate_scaled_alcove_vertices(d, r);
      CHECK(std::set<ApartmentPoint>(got.points.begin(), got.points.end()) == want);
    }
  }
}

TEST_CASE("candidate budget raises a resource error") {
  Limits tight;
  tight.candidate_budget = 50;
  CHECK_THROWS_AS(enumerate_scaled_alcove_vertices(test::datum("E8"), 2, tight), ResourceError);
}
