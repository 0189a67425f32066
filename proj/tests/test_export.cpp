#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsdist/export.hpp"

using namespace bsdist;

TEST_CASE("integers become numbers until they outgrow 64 bits") {
  CHECK(int_to_json(Int(42)).is_number_integer());
  CHECK(int_to_json(Int(-7)) == -7);
  Int big = Int("123456789012345678901234567890");
  json j = int_to_json(big);
  CHECK(j.is_string());
  CHECK(j.get<std::string>() == "123456789012345678901234567890");
}

TEST_CASE("laurent serializations") {
  Laurent p = Laurent::v_power(-1) + Laurent::from_int(2) + Laurent::q_power(2);
  CHECK(laurent_v_pairs(p).dump() == "[[-1,1],[0,2],[4,1]]");
  CHECK(laurent_v_pairs(Laurent()).dump() == "[]");
  CHECK(q_coeff_array(Laurent::one_plus_q().pow(3)).dump() == "[1,3,3,1]");
  CHECK_THROWS_AS(q_coeff_array(Laurent::v_power(1)), std::domain_error);
}

TEST_CASE("distribution entries are sorted by length then one-line order") {
  json d = distribution_json(wt_table(Word(3, {1, 2, 1})));
  std::vector<std::string> perms;
  for (const auto& entry : d["entries"]) perms.push_back(entry["perm"].get<std::string>());
  CHECK(perms == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});
  CHECK(d["L"] == 3);
  CHECK(d["entries"][0]["numerator_q_coeffs"].dump() == "[1,1]");
}

TEST_CASE("tableaux serialize row by row") {
  auto [p, q] = rs_pair(Perm::parse("31524"));
  CHECK(tableau_json(p).dump() == "[[1,2,4],[3,5]]");
  CHECK(tableau_json(q).dump() == "[[1,3,5],[2,4]]");
}

TEST_CASE("class graph exports") {
  ClassGraph g = class_graph(Perm::longest(3));
  json j = graph_json(g);
  CHECK(j["n"] == 3);
  CHECK(j["vertices"].size() == 2);
  CHECK(j["vertices"][0]["canonical"] == "121");
  CHECK(j["vertices"][0]["T"].dump() == "[1]");
  CHECK(j["edges"].dump() == "[[0,1]]");
  CHECK(j.dump() == graph_json(class_graph(Perm::longest(3))).dump());  // deterministic

  std::string dot = graph_dot(g);
  CHECK(dot.find("c0 [label=\"121\\nS=4\\nT=+\"];") != std::string::npos);
  CHECK(dot.find("c0 -- c1;") != std::string::npos);

  // no T vectors away from the longest element
  json h = graph_json(class_graph(Perm::parse("2143")));
  CHECK(h["vertices"].size() == 1);
  CHECK_FALSE(h["vertices"][0].contains("T"));
}
