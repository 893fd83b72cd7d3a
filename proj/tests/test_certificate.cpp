#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "xomega/certificate.hpp"
#include "xomega/errors.hpp"
#include "xomega/omega_graph.hpp"

using namespace xomega;

namespace {

LabeledMultigraph random_multigraph(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  LabeledMultigraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(static_cast<std::int64_t>(i));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t e = 0; e < m; ++e) g.add_edge(pick(rng), pick(rng), EdgeLabel::at_level(0));
  return g;
}

LabeledMultigraph permuted(const LabeledMultigraph& g, const std::vector<std::size_t>& perm) {
  LabeledMultigraph h;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) h.add_vertex(static_cast<std::int64_t>(i));
  for (const auto& e : g.edges()) h.add_edge(perm[e.u], perm[e.v], e.label);
  return h;
}

// Multiset of (min, max) index pairs.
std::vector<std::pair<std::size_t, std::size_t>> edge_pairs(const LabeledMultigraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : g.edges()) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(out.begin(), out.end());
  return out;
}

// Pointed isomorphism by trying every permutation.
bool brute_iso(const LabeledMultigraph& g, std::size_t cg, const LabeledMultigraph& h, std::size_t ch) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  const auto target = edge_pairs(h);
  std::vector<std::size_t> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[cg] != ch) continue;
    if (edge_pairs(permuted(g, perm)) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("certificates are invariant under relabeling") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 12;
    const auto g = random_multigraph(n, rng() % (2 * n + 3), rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = permuted(g, perm);
    const std::size_t c = rng() % n;
    CHECK(canonical_certificate(g, c) == canonical_certificate(h, perm[c]));
  }
}

TEST_CASE("certificates agree with brute-force pointed isomorphism") {
  std::mt19937_64 rng(23);
  int equal = 0;
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t m = rng() % 8;
    const auto g = random_multigraph(n, m, rng);
    const auto h = random_multigraph(n, m, rng);
    const std::size_t cg = rng() % n, ch = rng() % n;
    const bool iso = brute_iso(g, cg, h, ch);
    equal += iso ? 1 : 0;
    CHECK((canonical_certificate(g, cg) == canonical_certificate(h, ch)) == iso);
  }
  CHECK(equal > 10);
}

TEST_CASE("symmetric graphs stay within the leaf budget") {
  // Cycle and complete graphs have large automorphism groups.
  LabeledMultigraph cycle;
  const std::size_t n = 200;
  for (std::size_t i = 0; i < n; ++i) cycle.add_vertex(static_cast<std::int64_t>(i));
  for (std::size_t i = 0; i < n; ++i) cycle.add_edge(i, (i + 1) % n, EdgeLabel::at_level(0));
  CHECK(canonical_certificate(cycle, 0) == canonical_certificate(cycle, 57));
  LabeledMultigraph k;
  for (std::size_t i = 0; i < 9; ++i) k.add_vertex(static_cast<std::int64_t>(i));
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i + 1; j < 9; ++j) k.add_edge(i, j, EdgeLabel::at_level(0));
  CHECK(canonical_certificate(k, 0) == canonical_certificate(k, 8));
  CanonicalOptions tiny;
  tiny.max_leaves = 1;
  LabeledMultigraph two_cycles;
  for (std::size_t i = 0; i < 8; ++i) two_cycles.add_vertex(static_cast<std::int64_t>(i));
  for (std::size_t i = 0; i < 4; ++i) {
    two_cycles.add_edge(i, (i + 1) % 4, EdgeLabel::at_level(0));
    two_cycles.add_edge(4 + i, 4 + (i + 1) % 4, EdgeLabel::at_level(0));
  }
  CHECK_NOTHROW(canonical_certificate(two_cycles, 0));
  CHECK_THROWS_AS(canonical_certificate(two_cycles, 0, tiny), ExplosionGuard);
}

TEST_CASE("balls of X_omega") {
  const auto zero = window(OmegaWord::parse("(0)"), -20, 20);
  const auto& g = zero.graph;
  // r = 0: one vertex, with or without a loop.
  CHECK(ball_certificate(g, zero.index(3), 0) == ball_certificate(g, zero.index(5), 0));
  CHECK(ball_certificate(g, zero.index(0), 0) != ball_certificate(g, zero.index(2), 0));
  CHECK(ball_certificate(g, zero.index(0), 1) != ball_certificate(g, zero.index(2), 1));
  // The reflection z -> -z of X_0 gives equal types at z and -z.
  for (int r = 0; r <= 3; ++r) CHECK(ball_certificate(g, zero.index(3), r) == ball_certificate(g, zero.index(-3), r));
  const auto ball = extract_ball(g, zero.index(0), 1);
  CHECK(ball.vertex_count() == 3);
  CHECK(ball.key(0) == 0);
  CHECK(ball.edge_count() == 4);  // includes the level-1 edge between -1 and 1
  CHECK(ball.sorted_keyed_edges() == oracle_ball(OmegaGraph(OmegaWord::parse("(0)")), 0, 1).sorted_keyed_edges());
}

TEST_CASE("extracted balls match the integer oracle") {
  for (const char* s : {"(10)", "(110)", "1(10)"}) {
    const auto w = OmegaWord::parse(s);
    const auto win = window(w, -600, 600);
    for (int r = 0; r <= 4; ++r) {
      for (std::int64_t z = -20; z <= 20; z += 3) {
        const auto a = extract_ball(win.graph, win.index(z), r);
        const auto b = oracle_ball(OmegaGraph(w), z, r);
        CHECK(a.sorted_keyed_edges() == b.sorted_keyed_edges());
        CHECK(canonical_certificate(a, 0) == canonical_certificate(b, 0));
      }
    }
  }
}
