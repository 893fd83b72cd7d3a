#include <random>
#include <set>

#include "doctest.h"
#include "xomega/errors.hpp"
#include "xomega/schreier.hpp"

using namespace xomega;

namespace {

OmegaWord W(const char* s) { return OmegaWord::parse(s); }
FiniteWord F(const char* s) { return FiniteWord::parse(s); }

std::uint64_t encode(const FiniteWord& v) {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < v.size(); ++i) x |= std::uint64_t{v[i]} << i;
  return x;
}

}  // namespace

TEST_CASE("gamma_n small levels") {
  const auto g1 = gamma_n(1);
  CHECK(g1.vertex_count() == 2);
  CHECK(g1.edge_count() == 4);
  const auto g2 = gamma_n(2);
  CHECK(g2.vertex_count() == 4);
  CHECK(g2.edge_count() == 8);
  std::size_t loops = 0;
  for (const auto& e : g2.edges()) loops += e.is_loop();
  CHECK(loops == 2);  // b fixes 00 and 01
  CHECK_THROWS_AS(gamma_n(0), Error);
  CHECK_THROWS_AS(gamma_n(25), Error);
}

TEST_CASE("gamma_n is isomorphic to the finite model via the identity on keys") {
  for (int n = 1; n <= 14; ++n) {
    CAPTURE(n);
    CHECK(validate_iso(level_model_map(n), gamma_n(n), model_graph(n)));
  }
}

TEST_CASE("implicit neighbors agree with the generator action on words") {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      const auto w = FiniteWord::from_value(v, static_cast<std::size_t>(n));
      std::multiset<std::uint64_t> expected;
      for (const char* s : {"a", "A"}) expected.insert(encode(act_finite(GroupWord::parse(s), w)));
      const auto bv = encode(act_finite(GroupWord::parse("b"), w));
      if (bv == v) {
        expected.insert(v);
      } else {
        expected.insert(bv);
        expected.insert(encode(act_finite(GroupWord::parse("B"), w)));
      }
      std::multiset<std::uint64_t> got;
      for_each_gamma_neighbor(v, n, [&](std::uint64_t t) { got.insert(t); });
      CAPTURE(n);
      CAPTURE(v);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("b fixes exactly two words on each level") {
  for (int n = 1; n <= 16; ++n) {
    std::vector<std::uint64_t> fixed;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      if (act_level(Gen::B, v, n) == v) fixed.push_back(v);
    }
    const std::vector<std::uint64_t> expected{0, std::uint64_t{1} << (n - 1)};
    CHECK(fixed == (n == 1 ? std::vector<std::uint64_t>{0, 1} : expected));
  }
}

TEST_CASE("adding machine exponent") {
  CHECK(adding_machine_exponent(F("000")) == 0);
  CHECK(adding_machine_exponent(F("100")) == 1);
  CHECK(adding_machine_exponent(F("011")) == 6);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 16;
    const auto v = FiniteWord::from_value(rng() & ((std::uint64_t{1} << n) - 1), n);
    // a^m(0^n) by repeated application of a.
    auto w = FiniteWord::from_value(0, n);
    std::uint64_t m = 0;
    while (!(w == v)) {
      w = act_finite(GroupWord::parse("a"), w);
      ++m;
    }
    CHECK(adding_machine_exponent(v) == m);
  }
}

TEST_CASE("orbital ball small examples") {
  const auto b0 = orbital_ball(W("(0)"), 1);
  CHECK(b0.size() == 3);
  std::set<std::string> names;
  for (const auto& v : b0.vertices) names.insert(v.str());
  CHECK(names == std::set<std::string>{W("(0)").str(), W("1(0)").str(), W("(1)").str()});
  CHECK(b0.vertices[0] == W("(0)"));
  CHECK(orbital_ball(W("(10)"), 1).size() == 5);
  CHECK(orbital_ball(W("(10)"), 0).size() == 1);
}

TEST_CASE("orbital balls and integer-graph balls have the same size") {
  for (const char* w : {"(0)", "(10)", "(110)", "1(10)", "0110(01)"}) {
    const OmegaGraph graph(W(w));
    const auto ball = orbital_ball(W(w), 40);
    for (int r = 0; r <= 40; r += 5) {
      std::size_t within = 0;
      for (int d : ball.distance) within += d <= r;
      CAPTURE(w);
      CAPTURE(r);
      CHECK(within == oracle_ball(graph, 0, r).vertex_count());
    }
  }
}

TEST_CASE("orbital ball vertices are a-translates of the center") {
  const auto w = W("(110)");
  const auto ball = orbital_ball(w, 12);
  const auto m = orbital_integer_coordinates(w, ball);
  REQUIRE(m.size() == ball.size());
  std::set<std::int64_t> distinct(m.begin(), m.end());
  CHECK(distinct.size() == m.size());
  for (std::size_t i = 0; i < m.size(); ++i) CHECK(act_power_a(m[i], w) == ball.vertices[i]);
  // As integers the ball is the integer ball at 0, edge for edge.
  const auto integer_ball = oracle_ball(OmegaGraph(w), 0, 12);
  CHECK(validate_iso([&](std::int64_t k) { return m[static_cast<std::size_t>(k)]; }, ball.graph, integer_ball));
}

TEST_CASE("a ball of another orbit is rejected") {
  const auto ball = orbital_ball(W("(10)"), 2);
  CHECK_THROWS_AS(orbital_integer_coordinates(W("(110)"), ball), NotInAOrbit);
}

TEST_CASE("orbit check on levels") {
  CHECK(level_orbit_check(1));
  CHECK(level_orbit_check(8));
  CHECK(level_orbit_check(14));
}
