#include "support.hpp"

using namespace alcove;

TEST_CASE("root datum json") {
  const Json j = to_json(test::datum("A2"));
  CHECK(j["type"] == "A2");
  CHECK(j["cartan_matrix"] == Json::array({Json::array({2, -1}), Json::array({-1, 2})}));
  CHECK(j["positive_roots"] == Json::array({Json::array({0, 1}), Json::array({1, 0}), Json::array({1, 1})}));
  CHECK(j["c"] == Json::array({1, 1}));
  CHECK(j["c_prime"] == Json::array({2, 2}));
}

TEST_CASE("points and polynomials serialize exactly") {
  CHECK(to_json(test::pt("1/2,-3")) == Json::array({"1/2", "-3"}));
  const QPolynomial p = QPolynomial::monomial(40, Integer("123456789012345678901234567890")) + QPolynomial(-2);
  const Json j = to_json(p);
  CHECK(j["terms"] == Json::array({Json::array({0, "-2"}), Json::array({40, "123456789012345678901234567890"})}));
  CHECK(j["text"] == "123456789012345678901234567890q^40 - 2");
}

TEST_CASE("concave function json") {
  const RootDatum a1 = test::datum("A1");
  const Json j = to_json(a1, point_function(a1, test::pt("1/2")));
  CHECK(j["at_zero"] == "0");
  CHECK(j["values"][0]["root"] == Json::array({1}));
  CHECK(j["values"][0]["value"] == "-1/2");
  CHECK(j["values"][1]["value"] == "1/2");
}

TEST_CASE("table renderings") {
  const BoundsTable t = theorem_table(4);
  const std::string csv = table_to_csv(t);
  CHECK(csv.find("E8,E,8,46,46,120") != std::string::npos);
  const std::string md = table_to_markdown(t);
  CHECK(md.find("A_{2n}") != std::string::npos);
  CHECK(md.find("| 16 | 27 | 46 | 11 | 10/3 |") != std::string::npos);
}
