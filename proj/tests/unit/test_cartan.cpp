#include <set>

#include "support.hpp"

using namespace alcove;

TEST_CASE("type validation") {
  CHECK(RootSystemType::parse("g2").name() == "G2");
  CHECK(RootSystemType::parse("A12").rank() == 12);
  for (const char* bad : {"D3", "B1", "C1", "E5", "E9", "F3", "G3", "A0", "X2", "", "A", "Ab"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(RootSystemType::parse(bad), ValidationError);
  }
  try {
    RootSystemType::parse("D3");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ValidationCode::kInvalidType);
    CHECK(std::string(e.what()).find("A3") != std::string::npos);
  }
}

TEST_CASE("coefficient vectors from the literature") {
  struct Row {
    const char* type;
    std::vector<int> c, c_prime;
  };
  const std::vector<Row> rows{
      {"E6", {1, 2, 2, 3, 2, 1}, {16, 22, 30, 42, 30, 16}},
      {"E7", {2, 2, 3, 4, 3, 2, 1}, {34, 49, 66, 96, 75, 52, 27}},
      {"E8", {2, 3, 4, 6, 5, 4, 3, 2}, {92, 136, 182, 270, 220, 168, 114, 58}},
      {"F4", {2, 3, 4, 2}, {16, 30, 42, 22}},
      {"G2", {3, 2}, {10, 6}},
      {"A1", {1}, {1}},
      {"A2", {1, 1}, {2, 2}},
  };
  for (const auto& row : rows) {
    CAPTURE(row.type);
    const RootDatum d = test::datum(row.type);
    CHECK(d.highest_root_coeffs() == row.c);
    CHECK(d.two_rho_coeffs() == row.c_prime);
  }
}

TEST_CASE("classical closed forms for c and c' up to rank 12") {
  for (int n = 1; n <= 12; ++n) {
    const RootDatum a = build_root_datum({Family::A, n});
    for (int i = 1; i <= n; ++i) {
      CHECK(a.highest_root_coeffs()[i - 1] == 1);
      CHECK(a.two_rho_coeffs()[i - 1] == i * (n + 1 - i));
    }
    if (n < 2) continue;
    const RootDatum b = build_root_datum({Family::B, n});
    const RootDatum c = build_root_datum({Family::C, n});
    for (int i = 1; i <= n; ++i) {
      CHECK(b.highest_root_coeffs()[i - 1] == (i == 1 ? 1 : 2));
      CHECK(b.two_rho_coeffs()[i - 1] == i * (2 * n - i));
      CHECK(c.highest_root_coeffs()[i - 1] == (i == n ? 1 : 2));
      CHECK(c.two_rho_coeffs()[i - 1] == (i == n ? n * (n + 1) / 2 : i * (2 * n - i + 1)));
    }
    if (n < 4) continue;
    const RootDatum d = build_root_datum({Family::D, n});
    for (int i = 1; i <= n; ++i) {
      const bool end = i == 1 || i >= n - 1;
      CHECK(d.highest_root_coeffs()[i - 1] == (end ? 1 : 2));
      const int want = i == 1 ? 2 * (n - 1) : i >= n - 1 ? n * (n - 1) / 2 : 2 * (i * n - i * (i + 1) / 2);
      CHECK(d.two_rho_coeffs()[i - 1] == want);
    }
  }
}

TEST_CASE("positive roots agree with the reflection-orbit oracle") {
  for (const auto& type : all_types_up_to_rank(8)) {
    CAPTURE(type.name());
    const RootDatum d = build_root_datum(type);
    const oracle::System o = oracle::make_system(type.name());
    CHECK(d.cartan_matrix() == o.cartan);
    std::set<std::vector<int>> mine;
    for (const auto& r : d.positive_roots()) mine.insert(r.coeffs);
    CHECK(mine == std::set<std::vector<int>>(o.positive.begin(), o.positive.end()));
    CHECK(d.highest_root_coeffs() == o.highest);
    CHECK(d.two_rho_coeffs() == o.two_rho);
    CHECK(d.marks_lcm() == o.lcm);
    CHECK(d.roots().size() == 2 * d.num_positive_roots());
    for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
      CHECK(d.roots()[k + d.num_positive_roots()] == -d.roots()[k]);
      CHECK(d.root_index(d.roots()[k].coeffs) == k);
    }
    for (const auto& a : d.positive_roots()) {
      CHECK(d.coroot_pairing(a, a) == 2);
      const Root& th = d.positive_roots().back();
      CHECK(d.coroot_pairing(a, th) == oracle::coroot_pairing(o, a.coeffs, th.coeffs));
    }
  }
}

TEST_CASE("positive root counts") {
  const std::vector<std::pair<const char*, std::size_t>> counts{
      {"A1", 1}, {"A2", 3}, {"B2", 4}, {"G2", 6}, {"B3", 9}, {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}};
  for (const auto& [t, n] : counts) CHECK(test::datum(t).num_positive_roots() == n);
}

TEST_CASE("eval_root") {
  const RootDatum a2 = test::datum("A2");
  CHECK(eval_root(a2, Root{{1, 1}}, test::pt("1,0")) == 1);
  const RootDatum b2 = test::datum("B2");
  CHECK(eval_root(b2, Root{{1, 2}}, test::pt("1/2,1/2")) == Rational(3, 2));
  for (const auto& r : test::datum("G2").roots()) CHECK(eval_root(test::datum("G2"), r, test::pt("0,0")) == 0);
  CHECK_THROWS_AS(eval_root(a2, Root{{1, 1}}, test::pt("1,0,0")), ValidationError);
}

TEST_CASE("Weyl degrees") {
  CHECK(weyl_degrees(test::datum("A1")) == std::vector<int>{2});
  CHECK(weyl_degrees(test::datum("A2")) == std::vector<int>{2, 3});
  CHECK(weyl_degrees(test::datum("G2")) == std::vector<int>{2, 6});
  CHECK(weyl_degrees(test::datum("E8")) == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
  // Product of degrees is |W|; sum of exponents is |Phi+|.
  for (const auto& type : all_types_up_to_rank(5)) {
    CAPTURE(type.name());
    const RootDatum d = build_root_datum(type);
    const auto deg = weyl_degrees(d);
    long prod = 1, exps = 0;
    for (int x : deg) prod *= x, exps += x - 1;
    CHECK(exps == static_cast<long>(d.num_positive_roots()));
    if (type.rank() <= 5 && type.family() != Family::E) CHECK(prod == oracle::weyl_order(oracle::make_system(type.name())));
  }
}

TEST_CASE("vertex denominators are the distinct marks") {
  const RootDatum e8 = test::datum("E8");
  CHECK(e8.vertex_denominators() == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(e8.marks_lcm() == 60);
  CHECK(test::datum("G2").vertex_denominators() == std::vector<int>{1, 2, 3});
}
