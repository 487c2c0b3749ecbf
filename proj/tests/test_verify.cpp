#include <doctest.h>

#include "wiener/error.hpp"
#include "wiener/io.hpp"
#include "wiener/quadform.hpp"
#include "wiener/verify.hpp"

using wiener::ValueMultiset;
using wiener::Verdict;

TEST_CASE("conjecture1 sweep") {
  const auto r1 = wiener::verify_conjecture1(1);
  CHECK(r1.verdict == Verdict::confirmed);
  const auto r3 = wiener::verify_conjecture1(3);
  CHECK(r3.verdict == Verdict::confirmed);
  REQUIRE(r3.instances.size() == 3);
  CHECK(r3.instances[2].data["closed_form"] == nlohmann::ordered_json({"1/2", "3/2", "0/1", "-1/1"}));
  const auto r30 = wiener::verify_conjecture1(30);
  CHECK(r30.verdict == Verdict::confirmed);
  CHECK(r30.witnesses.empty());
  CHECK_THROWS_AS(wiener::verify_conjecture1(0), wiener::DomainError);
  CHECK_THROWS_AS(wiener::verify_conjecture1(70), wiener::SizeError);
}

TEST_CASE("reports are deterministic") {
  CHECK(wiener::to_json(wiener::verify_conjecture1(12)).dump() == wiener::to_json(wiener::verify_conjecture1(12)).dump());
  CHECK(wiener::to_json(wiener::verify_theorem31_random(20, 7, 5)).dump() ==
        wiener::to_json(wiener::verify_theorem31_random(20, 7, 5)).dump());
  CHECK(wiener::to_json(wiener::verify_chemical_random(20, 7, 5)).dump() ==
        wiener::to_json(wiener::verify_chemical_random(20, 7, 5)).dump());
}

TEST_CASE("counterexample family") {
  CHECK(wiener::counterexample_family(9, 3) == ValueMultiset({{18, 3}, {2, 2}, {1, 4}}));
  CHECK(wiener::counterexample_family(8, 2) == ValueMultiset({{12, 3}, {1, 5}}));
  CHECK(wiener::counterexample_family(12, 4).size() == 12);
  CHECK_THROWS_AS(wiener::counterexample_family(9, 1), wiener::PreconditionError);
  CHECK_THROWS_AS(wiener::counterexample_family(7, 3), wiener::PreconditionError);
}

TEST_CASE("counterexample verification") {
  SUBCASE("{7:3,2:2,1:2}") {
    const auto r = wiener::verify_counterexample(ValueMultiset({{7, 3}, {2, 2}, {1, 2}}));
    CHECK(r.verdict == Verdict::refuted);
    REQUIRE(r.witnesses.size() == 1);
    const auto& d = r.witnesses[0].data;
    CHECK(d["q_dominant_odd"] == 980);
    CHECK(d["q_symmetric_split"] == 970);
    CHECK(d["max_q"] == 980);
    CHECK(d["gap"] == 10);
    CHECK(d["searched"] == 210);
    CHECK(r.witnesses[0].strict_gap);
  }
  SUBCASE("{5:3,1:2} coincide") {
    const auto r = wiener::verify_counterexample(ValueMultiset({{5, 3}, {1, 2}}));
    CHECK(r.verdict == Verdict::inconclusive);
    CHECK(r.instances[0].data["q_dominant_odd"] == r.instances[0].data["q_symmetric_split"]);
  }
  SUBCASE("family instances") {
    for (std::int64_t s = 3; s <= 4; ++s) {
      for (std::int64_t k = 2 * s + 2; k <= 11; ++k) {
        CAPTURE(k);
        CAPTURE(s);
        CHECK(wiener::verify_counterexample(wiener::counterexample_family(k, s)).verdict == Verdict::refuted);
      }
    }
    for (std::int64_t k = 6; k <= 11; ++k) {
      CAPTURE(k);
      CHECK(wiener::verify_counterexample(wiener::counterexample_family(k, 2)).verdict != Verdict::refuted);
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(wiener::verify_counterexample(ValueMultiset({{2, 2}, {1, 2}})), wiener::PreconditionError);
  }
}

TEST_CASE("dominant-odd random sweep") {
  const auto r = wiener::verify_theorem31_random(100, 8, 42);
  CHECK(r.verdict == Verdict::confirmed);
  CHECK(r.instances.size() == 100);
  const auto empty = wiener::verify_theorem31_random(0, 8, 42);
  CHECK(empty.verdict == Verdict::confirmed);
  CHECK(empty.witnesses.empty());
  const auto single = wiener::check_theorem31_instance(ValueMultiset({{9, 3}, {2, 2}}));
  CHECK(single.passed);
  CHECK(single.data["dominant_odd"] == nlohmann::ordered_json({9, 9, 2, 2, 9}));
  CHECK_THROWS_AS(wiener::verify_theorem31_random(1, 10, 1), wiener::SizeError);
}

TEST_CASE("random generators honour their contracts") {
  wiener::Rng rng(123);
  for (int i = 0; i < 200; ++i) {
    const auto b = wiener::random_dominant_odd_multiset(rng, 8);
    CHECK(wiener::has_dominant_odd_value(b));
    CHECK(b.size() <= 8);
    const auto c = wiener::random_chemical_multiset(rng, 8);
    CHECK(c.size() >= 1);
    CHECK(c.size() <= 8);
    for (const auto& [value, count] : c.pairs()) {
      CHECK(value >= 1);
      CHECK(value <= 3);
    }
  }
  wiener::Rng a(9), b(9);
  for (int i = 0; i < 50; ++i) {
    CHECK(a.uniform(-5, 5) == b.uniform(-5, 5));
  }
}

TEST_CASE("chemical instances") {
  CHECK(wiener::check_chemical_instance(ValueMultiset({{1, 5}})).passed);
  CHECK(wiener::check_chemical_instance(ValueMultiset({{3, 2}, {1, 3}})).passed);
  // Left-heavy split with an intact middle block loses to (3,1,2,2).
  const auto rec = wiener::check_chemical_instance(ValueMultiset({{3, 1}, {2, 2}, {1, 1}}));
  CHECK_FALSE(rec.passed);
  CHECK(rec.data["q_symmetric_split"] == 42);
  CHECK(rec.data["max_q"] == 43);
}

TEST_CASE("refuted verdicts always carry a strict witness") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto r = wiener::verify_chemical_random(30, 7, seed);
    if (r.verdict == Verdict::refuted) {
      bool strict = false;
      for (const auto& w : r.witnesses) {
        strict = strict || w.strict_gap;
      }
      CHECK(strict);
    }
  }
}
