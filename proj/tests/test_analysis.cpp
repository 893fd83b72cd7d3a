#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "doctest.h"
#include "xomega/analysis.hpp"
#include "xomega/errors.hpp"
#include "xomega/schreier.hpp"

using namespace xomega;

namespace {

OmegaWord W(const char* s) { return OmegaWord::parse(s); }
GroupWord G(const char* s) { return GroupWord::parse(s); }

// Sphere sizes from 0 in X_ω with a hash map for the visited set.
std::vector<std::uint64_t> ball_sizes_by_map(const OmegaWord& omega, int R) {
  const OmegaGraph graph(omega);
  std::unordered_map<std::int64_t, int> dist{{0, 0}};
  std::deque<std::int64_t> queue{0};
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(R) + 1, 0);
  while (!queue.empty()) {
    const auto z = queue.front();
    queue.pop_front();
    const int d = dist[z];
    ++counts[static_cast<std::size_t>(d)];
    if (d == R) continue;
    for (const auto& nb : graph.neighbors(z)) {
      if (dist.emplace(nb.vertex, d + 1).second) queue.push_back(nb.vertex);
    }
  }
  for (std::size_t r = 1; r < counts.size(); ++r) counts[r] += counts[r - 1];
  return counts;
}

}  // namespace

TEST_CASE("bfs on a small graph") {
  LabeledMultigraph g;
  for (int i = 0; i < 5; ++i) g.add_vertex(i);
  g.add_edge(0, 1, EdgeLabel::at_level(0));
  g.add_edge(1, 2, EdgeLabel::at_level(0));
  g.add_edge(2, 2, EdgeLabel::loop());
  g.add_edge(0, 3, EdgeLabel::at_level(1));
  const auto t = bfs(g, 0);
  CHECK(t.dist == std::vector<int>{0, 1, 2, 1, -1});
  CHECK(t.eccentricity() == 2);
  CHECK_THROWS_AS(bfs(g, 9), Error);
}

TEST_CASE("implicit level distances match bfs on the built graph") {
  for (int n : {1, 3, 8, 11}) {
    const auto g = gamma_n(n);
    for (std::uint64_t s : {std::uint64_t{0}, (std::uint64_t{1} << n) - 1, std::uint64_t{5} % (std::uint64_t{1} << n)}) {
      const auto fast = gamma_distances(n, s);
      const auto slow = bfs(g, static_cast<std::size_t>(s));
      REQUIRE(fast.size() == slow.dist.size());
      for (std::size_t v = 0; v < fast.size(); ++v) CHECK(int{fast[v]} == slow.dist[v]);
    }
  }
  CHECK_THROWS_AS(gamma_distances(25, 0), ExplosionGuard);
}

TEST_CASE("distance identity at the levels (n^2 + 3n + 2)/2") {
  CHECK(corner_level(1) == 3);
  CHECK(corner_level(4) == 15);
  const std::int64_t expected[] = {3, 9, 25, 65};
  for (int n = 1; n <= 4; ++n) CHECK(corner_distance(n) == expected[n - 1]);
  // Built-graph oracle on the two smallest levels.
  CHECK(bfs(gamma_n(3), 0).dist[4] == 3);
  CHECK(bfs(gamma_n(6), 0).dist[32] == 9);
  CHECK_THROWS_AS(corner_distance(6), ExplosionGuard);
}

TEST_CASE("exact diameter against all-pairs search") {
  CHECK(diameter_gamma(1).diameter == 1);
  CHECK(diameter_gamma(2).diameter == 2);
  for (int n = 1; n <= 10; ++n) {
    const auto d = diameter_gamma(n);
    CAPTURE(n);
    CHECK(d.diameter == diameter_all_pairs(gamma_n(n)));
    CHECK(d.lower <= d.diameter);
    CHECK(d.diameter <= d.upper);
    CHECK(d.diameter == diameter_all_pairs(model_graph(n)));
  }
}

TEST_CASE("diameter interval brackets the exact value") {
  for (int n = 2; n <= 16; ++n) {
    const auto exact = diameter_gamma(n);
    const auto interval = diameter_interval(n);
    CHECK(interval.diameter == -1);
    CHECK(interval.lower == exact.lower);
    CHECK(interval.lower <= exact.diameter);
    CHECK(exact.diameter <= interval.upper);
    CHECK(std::isnan(interval.ratio()));
  }
}

TEST_CASE("growth small radii") {
  CHECK(growth_x_omega(W("(10)"), 0).counts == std::vector<std::uint64_t>{1});
  CHECK(growth_x_omega(W("(10)"), 1).counts[1] == 5);
  CHECK(growth_x_omega(W("(0)"), 1).counts[1] == 3);
  CHECK_THROWS_AS(growth_x_omega(W("(10)"), -1), Error);
}

TEST_CASE("growth agrees with hash-set search and with orbital balls") {
  for (const char* w : {"(0)", "(1)", "(10)", "(110)", "1(10)", "01(0011)"}) {
    CAPTURE(w);
    const auto fast = growth_x_omega(W(w), 48);
    CHECK(fast.counts == ball_sizes_by_map(W(w), 48));
    CHECK(growth_orbital(W(w), 24).counts ==
          std::vector<std::uint64_t>(fast.counts.begin(), fast.counts.begin() + 25));
  }
}

TEST_CASE("growth budget") {
  // 2^16 bytes hold a window of 2^19 integers; the (10) ball leaves it by r = 64.
  CHECK_THROWS_AS(growth_x_omega(W("(10)"), 64, std::size_t{1} << 16), ExplosionGuard);
  const auto partial = growth_x_omega_within(W("(10)"), 64, std::size_t{1} << 16);
  CHECK(partial.radius() < 64);
  CHECK(partial.radius() > 16);
  const auto full = growth_x_omega(W("(10)"), partial.radius());
  CHECK(partial.counts == full.counts);
}

TEST_CASE("growth bounds") {
  CHECK(growth_upper_bound(4) == doctest::Approx(5120.0));
  CHECK(growth_upper_bound(2) == doctest::Approx(160.0));
  const auto table = growth_x_omega(W("(10)"), 64);
  CHECK(table.counts[4] < 5120);
  const auto report = growth_bounds_check(table, 10);
  CHECK(report.upper_ok);
  CHECK(report.lower_ok);
  CHECK(report.passed());
  REQUIRE(report.lower.size() >= 3);
  CHECK(report.lower[2].n == 3);
  CHECK(report.lower[2].radius == 6);
  CHECK(report.lower[2].count >= 8);

  GrowthTable fake;
  fake.counts = {1, 5, 200, 20};
  const auto bad = growth_bounds_check(fake, 1);
  CHECK_FALSE(bad.upper_ok);
  CHECK(bad.first_violation == 2);
}

TEST_CASE("restriction-set bound on ball sizes") {
  const auto r1 = restriction_bound_check(W("(10)"), 4, 2);
  CHECK(r1.holds);
  CHECK(r1.ball_size == growth_x_omega(W("(10)"), 4).counts[4]);
  const auto r0 = restriction_bound_check(W("(0)"), 0, 1);
  CHECK(r0.ball_size == 1);
  CHECK(r0.restrictions == 1);
  CHECK(r0.holds);
  CHECK(restriction_bound_check(W("(0)"), 6, 3).holds);
  for (const char* w : {"(10)", "(110)"}) {
    for (int n = 0; n <= 6; ++n) {
      for (int k = 1; k <= 3; ++k) {
        const auto r = restriction_bound_check(W(w), n, k);
        CHECK(r.holds);
        CHECK(r.fused <= r.restrictions);
      }
    }
  }
}

TEST_CASE("window certificates need complete balls") {
  const auto win = window(W("(10)"), -4096, 4096);
  CHECK_NOTHROW(window_ball_certificate(win, 0, 3));
  CHECK_THROWS_AS(window_ball_certificate(win, 4095, 2), IncompleteBall);
  CHECK_THROWS_AS(window_ball_certificate(win, 5000, 0), IncompleteBall);
  const OmegaGraph graph(W("(10)"));
  for (std::int64_t z = -20; z <= 20; ++z) {
    CHECK(window_ball_certificate(win, z, 3) == canonical_certificate(oracle_ball(graph, z, 3), 0));
  }
}

TEST_CASE("type census") {
  CHECK(type_census(window(W("(10)"), -64, 64), 0).type_count() == 1);
  CHECK(type_census(window(W("(0)"), -16, 16), 0).type_count() == 2);
  const auto census = type_census(window(W("(10)"), -256, 256), 2);
  CHECK(census.type_count() > 1);
  std::size_t total = 0;
  for (const auto& [cert, entry] : census.types) {
    total += entry.multiplicity;
    CHECK(entry.representatives.size() <= 4);
    for (std::size_t i = 1; i < entry.representatives.size(); ++i) {
      CHECK(std::abs(entry.representatives[i - 1]) <= std::abs(entry.representatives[i]));
    }
  }
  CHECK(total == census.scanned);
  std::size_t rare = 0;
  for (const auto& [cert, entry] : census.types) rare += entry.multiplicity < 2;
  CHECK(rare <= 2);
}

TEST_CASE("genericity radius") {
  CHECK(genericity_radius(W("(0)"), 0, 1, 2) == 0);
  const auto r = genericity_radius(W("(10)"), 0, 1, 8);
  REQUIRE(r.has_value());
  CHECK(*r <= 8);
  CHECK_THROWS_AS(genericity_radius(W("(10)"), 3, 3, 2), Error);
}

TEST_CASE("dense holonomy") {
  CHECK_THROWS_AS(dense_holonomy_R(W("(0)"), 1), NotDenseHolonomy);
  CHECK_THROWS_AS(dense_holonomy_R(W("01(1)"), 0), NotDenseHolonomy);
  const auto r0 = dense_holonomy_R(W("(10)"), 0);
  CHECK(r0.verified);
  CHECK(r0.types == 1);
  const auto r1 = dense_holonomy_R(W("(10)"), 1);
  CHECK(r1.verified);
  CHECK(r1.R == (std::int64_t{1} << r1.n));
  CHECK(r1.types == r1.representatives.size());
}

TEST_CASE("types repeat with period 2^(n+1)") {
  const auto w = W("(10)");
  const OmegaGraph graph(w);
  for (int r = 1; r <= 3; ++r) {
    const auto report = dense_holonomy_R(w, r);
    const std::int64_t period = std::int64_t{2} << report.n;
    for (auto z : report.representatives) {
      const auto c = canonical_certificate(oracle_ball(graph, z, r), 0);
      for (std::int64_t k : {-2, -1, 1, 3}) {
        CHECK(canonical_certificate(oracle_ball(graph, z + k * period, r), 0) == c);
      }
    }
  }
}

TEST_CASE("local isomorphism") {
  CHECK(local_iso_check(W("(10)"), W("(110)"), 2, 8).locally_iso());
  const auto v = local_iso_check(W("(0)"), W("(10)"), 0, 6);
  CHECK_FALSE(v.locally_iso());
  CHECK(v.witness_side == 0);
  REQUIRE(v.witness.has_value());
  // The witness is the loop type.
  const OmegaGraph graph(W("(0)"));
  CHECK(*v.witness == canonical_certificate(oracle_ball(graph, 0, 0), 0));
  CHECK(local_iso_check(W("(110)"), W("(110)"), 3, 7).locally_iso());
}

TEST_CASE("contraction depths") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(32) == 5);
  CHECK(contraction_depth(32) == 30);
  CHECK_THROWS_AS(ceil_log2(0), Error);
}

TEST_CASE("restrictions at depth against enumeration of prefixes") {
  for (const char* s : {"b", "ab", "bAbab", "BBaBa", "abababab"}) {
    const auto g = G(s);
    for (int d = 0; d <= 6; ++d) {
      std::set<GroupWord> expected;
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v) {
        expected.insert(restrict(g, FiniteWord::from_value(v, static_cast<std::size_t>(d))));
      }
      const auto got = restrictions_at_depth(g, d);
      CHECK(std::set<GroupWord>(got.begin(), got.end()) == expected);
    }
  }
}

TEST_CASE("contraction") {
  const auto b5 = contraction_check(G("bbbbb"));
  CHECK(b5.passed());
  for (const auto& h : restrictions_at_depth(G("bbbbb"), 1)) {
    CHECK((h == G("bbbbb") || h == G("aaaaa")));
  }
  std::string ba;
  for (int i = 0; i < 8; ++i) ba += "ba";
  CHECK(contraction_check(G(ba.c_str())).passed());
  for (const auto& h : restrictions_at_depth(G(ba.c_str()), 12)) CHECK(match_nucleus(h).has_value());
  const auto report = contraction_experiment(30, 32, 11);
  CHECK(report.samples == 30);
  CHECK(report.passed());
  CHECK(report.failing_words.empty());
  CHECK(contraction_check(GroupWord{}).passed());
}

TEST_CASE("0 and -42 in X_(10) are mirror images up to radius 12") {
  // With ω = -1/3, level(z) = 1 + v2(z - 1/3) and level(-42 - z) = 1 + v2(z + 127/3); the
  // arguments differ by 128/3, so the levels agree unless 3z ≡ 1 (mod 128).
  const OmegaGraph graph(W("(10)"));
  for (std::int64_t z = -85; z <= 42; ++z) {
    const bool exceptional = ((3 * z - 1) % 128 + 128) % 128 == 0;
    CHECK((graph.level_of(z) == graph.level_of(-42 - z)) != exceptional);
  }
  CHECK_FALSE(graph.level_of(43) == graph.level_of(-85));
  CHECK(genericity_radius(W("(10)"), 0, -42, 10) == std::nullopt);
  CHECK(genericity_radius(W("(10)"), 0, -42, 40) == 13);
}
