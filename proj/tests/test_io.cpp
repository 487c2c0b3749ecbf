#include <doctest.h>

#include <sstream>

#include "wiener/error.hpp"
#include "wiener/io.hpp"

using wiener::ParseError;

namespace {

// Returns {line, column} of the ParseError raised on text, or {0, 0}.
std::pair<std::size_t, std::size_t> edge_error(const std::string& text) {
  std::istringstream in(text);
  try {
    wiener::read_edge_list(in);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("edge list parsing") {
  std::istringstream in("# comment\n0 1\n\n1 2  # trailing\n2 3\n");
  const auto t = wiener::read_edge_list(in);
  CHECK(t.order() == 4);
  CHECK(wiener::wiener_index(t) == 10);

  CHECK(edge_error("0 1\n1 x\n") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(edge_error("0 1\n1 2 3\n") == std::pair<std::size_t, std::size_t>{2, 5});
  CHECK(edge_error("0 1\n  -1 2\n") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(edge_error("# nothing\n").first == 1);
  std::istringstream cyclic("0 1\n1 2\n2 0\n");
  CHECK_THROWS_AS(wiener::read_edge_list(cyclic), wiener::InvalidTree);
  CHECK_THROWS_AS(wiener::read_edge_list_file("/nonexistent/edges.txt"), ParseError);
}

TEST_CASE("edge list round trip") {
  const auto t = wiener::Tree::star(6);
  std::istringstream in(wiener::write_edge_list(t));
  const auto back = wiener::read_edge_list(in);
  CHECK(back.edges() == t.edges());
}

TEST_CASE("multiset parsing") {
  CHECK(wiener::parse_multiset("7:3,2:2,1:2") == wiener::ValueMultiset({{7, 3}, {2, 2}, {1, 2}}));
  CHECK(wiener::parse_multiset(" 5 : 1 , 1:2 ") == wiener::ValueMultiset({{5, 1}, {1, 2}}));
  CHECK(wiener::parse_multiset("7:3,2:2,1:2").to_string() == "7:3,2:2,1:2");
  CHECK_THROWS_AS(wiener::parse_multiset(""), ParseError);
  CHECK_THROWS_AS(wiener::parse_multiset("1:2,2:1"), ParseError);
  CHECK_THROWS_AS(wiener::parse_multiset("3:0"), ParseError);
  CHECK_THROWS_AS(wiener::parse_multiset("0:3"), ParseError);
  try {
    wiener::parse_multiset("7:3,x:2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("arrangement parsing and formatting") {
  CHECK(wiener::parse_arrangement("5,5,1,1,5") == wiener::Arrangement{5, 5, 1, 1, 5});
  CHECK(wiener::format_arrangement(wiener::Arrangement{7, 7, 1}) == "7,7,1");
  CHECK_THROWS_AS(wiener::parse_arrangement("1,0"), ParseError);
  CHECK_THROWS_AS(wiener::parse_arrangement("1,,2"), ParseError);
}

TEST_CASE("real formatting") {
  CHECK(wiener::format_real(0.5) == "0.5");
  CHECK(wiener::format_real(1.0 / 3.0) == "0.333333333333333");
  CHECK(wiener::real_json(0.1).dump() == "0.1");
}

TEST_CASE("polynomial JSON round trip") {
  for (std::size_t k = 1; k <= 12; ++k) {
    const auto p = wiener::charpoly_closed_form(k);
    const auto j = wiener::to_json(p);
    CHECK(wiener::polynomial_from_json(nlohmann::ordered_json::parse(j.dump())) == p);
  }
  CHECK(wiener::to_json(wiener::charpoly_closed_form(2)).dump() == R"(["-1/4","0/1","1/1"])");
}

TEST_CASE("maximizer JSON round trip") {
  const wiener::ValueMultiset b({{7, 3}, {2, 2}, {1, 2}});
  const auto r = wiener::brute_force_maximize(b);
  const auto j = wiener::to_json(r, b);
  CHECK(j["max_q"] == 980);
  CHECK(j["multiset"] == "7:3,2:2,1:2");
  const auto back = wiener::maximizer_result_from_json(nlohmann::ordered_json::parse(j.dump()));
  CHECK(back.max_q == r.max_q);
  CHECK(back.optima == r.optima);
  CHECK(back.unique == r.unique);
  CHECK(back.searched == r.searched);
  CHECK(back.evaluated == r.evaluated);
  CHECK(back.class_count == r.class_count);
}

TEST_CASE("text rendering") {
  const auto text = wiener::render_text(wiener::verify_conjecture1(3));
  CHECK(text.find("confirmed") != std::string::npos);
  CHECK(text.find("k=3") != std::string::npos);
  const auto spectral = wiener::render_text(wiener::spectral_report(10, 1e-12));
  CHECK(spectral.find("17.17") != std::string::npos);
}
