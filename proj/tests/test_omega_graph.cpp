#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "xomega/errors.hpp"
#include "xomega/omega_graph.hpp"

using namespace xomega;

namespace {

OmegaWord W(const char* s) { return OmegaWord::parse(s); }

// Level by scanning the congruences z ≡ -a_n (mod 2^n) for n = 1..62.
VertexLevel congruence_level(const OmegaWord& w, std::int64_t z) {
  int found = 0;
  for (std::size_t n = 1; n <= 62; ++n) {
    const std::int64_t mod = std::int64_t{1} << n;
    const std::int64_t a = coefficient_a(w, n);
    if ((((z + a) % mod) + mod) % mod == 0) {
      REQUIRE(found == 0);  // at most one level
      found = static_cast<int>(n);
    }
  }
  return VertexLevel{found};
}

OmegaWord random_word(std::mt19937_64& rng, std::size_t max_pre = 6, std::size_t max_per = 5) {
  std::uniform_int_distribution<std::size_t> pre_len(0, max_pre), per_len(1, max_per);
  std::bernoulli_distribution bit(0.5);
  std::vector<Bit> pre(pre_len(rng)), per(per_len(rng));
  for (auto& b : pre) b = bit(rng);
  for (auto& b : per) b = bit(rng);
  return OmegaWord(FiniteWord(pre), FiniteWord(per));
}

std::multiset<std::int64_t> neighbor_set(const OmegaGraph& g, std::int64_t z) {
  std::multiset<std::int64_t> s;
  g.for_each_neighbor(z, [&](std::int64_t t, EdgeLabel) { s.insert(t); });
  return s;
}

}  // namespace

TEST_CASE("level search agrees with the congruence definition") {
  std::mt19937_64 rng(11);
  std::vector<OmegaWord> words = {W("(0)"), W("(1)"), W("(10)"), W("(110)"), W("1(10)"), W("0110(01101)")};
  for (int i = 0; i < 20; ++i) words.push_back(random_word(rng));
  for (const auto& w : words) {
    const OmegaGraph g(w);
    for (std::int64_t z = -300; z <= 300; ++z) CHECK(g.level_of(z) == congruence_level(w, z));
  }
}

TEST_CASE("the loop vertex is the only vertex without a level") {
  for (const char* s : {"(0)", "(1)", "1(0)", "01(0)", "0(1)", "1101(1)"}) {
    const auto w = W(s);
    const auto loop = tail_class(w).loop_vertex;
    REQUIRE(loop.has_value());
    const OmegaGraph g(w);
    for (std::int64_t z = -200; z <= 200; ++z) CHECK(g.level_of(z).is_loop() == (z == *loop));
  }
  const OmegaGraph mixed(W("(10)"));
  for (std::int64_t z = -1000; z <= 1000; ++z) CHECK_FALSE(mixed.level_of(z).is_loop());
}

TEST_CASE("long preperiods use the exact 2-adic path") {
  // Words whose first 62 letters sum with z to 0 mod 2^62.
  std::vector<Bit> pre(70, 0);
  pre[66] = 1;
  const OmegaWord w{FiniteWord(pre), FiniteWord::parse("0")};
  CHECK(level_of(w, 0).n == 67);
  CHECK(level_of(w, 1).n == 1);
  const OmegaWord ones{FiniteWord(std::vector<Bit>(64, 1)), FiniteWord::parse("01")};
  // -ones ≡ 1 mod 2^64, next letter 0 of the tail makes e.g. z = 1 land high.
  const auto lv = level_of(ones, 1);
  CHECK(lv.n == 65);
}

TEST_CASE("neighbors of small vertices") {
  auto n0 = neighbors(W("(10)"), 0);
  std::vector<std::int64_t> t;
  for (const auto& x : n0) t.push_back(x.vertex);
  std::sort(t.begin(), t.end());
  CHECK(t == std::vector<std::int64_t>{-2, -1, 1, 2});
  auto loop = neighbors(W("(0)"), 0);
  REQUIRE(loop.size() == 3);
  CHECK(loop[2].vertex == 0);
  CHECK(loop[2].label == EdgeLabel::loop());
}

TEST_CASE("X_omega is 4-regular and simple apart from loops") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto w = random_word(rng);
    const OmegaGraph g(w);
    for (std::int64_t z = -500; z <= 500; ++z) {
      const auto s = neighbor_set(g, z);
      const bool has_loop = s.count(z) > 0;
      CHECK(s.size() == (has_loop ? 3u : 4u));
      for (auto t : s) {
        if (t != z) CHECK(s.count(t) == 1);  // level-0 and level-n edges never coincide
        // symmetric adjacency
        CHECK(neighbor_set(g, t).count(z) >= 1);
      }
    }
  }
}

TEST_CASE("windows record each edge once") {
  const auto win = window(W("(10)"), -16, 16);
  CHECK(win.graph.vertex_count() == 33);
  const OmegaGraph g(W("(10)"));
  for (std::int64_t z = -16; z <= 16; ++z) {
    const auto s = neighbor_set(g, z);
    const bool inside = std::all_of(s.begin(), s.end(), [](std::int64_t t) { return t >= -16 && t <= 16; });
    CHECK(win.is_complete(z) == inside);
    if (inside) CHECK(win.graph.degree(win.index(z)) == 4);
  }
  CHECK_FALSE(win.is_complete(-16));
  const auto zero = window(W("(0)"), -8, 8);
  CHECK(zero.graph.loop_count(zero.index(0)) == 1);
  CHECK(zero.graph.degree(zero.index(0)) == 4);
}

TEST_CASE("finite models") {
  const auto x1 = model_graph(1);
  CHECK(x1.vertex_count() == 2);
  CHECK(x1.edge_count() == 4);
  CHECK(x1.sorted_keyed_edges() ==
        std::vector<LabeledMultigraph::KeyedEdge>{{0, 0, EdgeLabel::loop()},
                                                  {0, 1, EdgeLabel::at_level(0)},
                                                  {0, 1, EdgeLabel::at_level(0)},
                                                  {1, 1, EdgeLabel::at_level(1)}});
  for (int n = 1; n <= 10; ++n) {
    const auto x = model_graph(n);
    CHECK(x.vertex_count() == (std::size_t{1} << n));
    CHECK(x.edge_count() == (std::size_t{1} << (n + 1)));
    for (std::size_t v = 0; v < x.vertex_count(); ++v) CHECK(x.degree(v) == 4);
    CHECK(x.loop_count(0) == 1);
    CHECK(x.loop_count(std::size_t{1} << (n - 1)) == (n == 1 ? 1u : 1u));
  }
  const auto x2 = model_graph(2);
  CHECK(x2.sorted_keyed_edges().size() == 8);
  CHECK_THROWS(model_graph(0));
}

TEST_CASE("quotients are isomorphic to the finite models") {
  std::mt19937_64 rng(21);
  std::vector<OmegaWord> words = {W("(0)"), W("(1)"), W("(10)"), W("(110)"), W("1(10)")};
  for (int i = 0; i < 30; ++i) words.push_back(random_word(rng, 10, 6));
  for (const auto& w : words) {
    for (int n = 1; n <= 10; ++n) {
      const auto iso = quotient_model_shift(w, n);
      CHECK(validate_iso(iso, quotient_mod(w, n), model_graph(n), false));
    }
  }
  // Trivial case: all letters 0, shift 0.
  CHECK(quotient_model_shift(W("(0)"), 7).shift == 0);
}

TEST_CASE("quotient agrees with folding a window of X_omega") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 15; ++i) {
    const auto w = random_word(rng, 8, 4);
    const OmegaGraph g(w);
    for (int n = 1; n <= 6; ++n) {
      const std::int64_t mod = std::int64_t{1} << n;
      auto red = [mod](std::int64_t z) { return ((z % mod) + mod) % mod; };
      std::vector<LabeledMultigraph::KeyedEdge> folded;
      std::set<std::int64_t> high;  // residues of vertices above level n
      for (std::int64_t z = 0; z < mod; ++z) {
        folded.push_back({std::min(z, red(z + 1)), std::max(z, red(z + 1)), EdgeLabel::at_level(0)});
        const auto lv = g.level_of(z);
        if (!lv.is_loop() && lv.n < n) {
          const auto t = red(z + (std::int64_t{1} << lv.n));
          folded.push_back({std::min(z, t), std::max(z, t), EdgeLabel::at_level(lv.n)});
        } else if (lv.n == n) {
          folded.push_back({z, z, EdgeLabel::at_level(n)});
        }
      }
      for (std::int64_t z = -64 * mod; z < 64 * mod; ++z) {
        const auto lv = g.level_of(z);
        if (lv.is_loop() || lv.n > n) high.insert(red(z));
      }
      REQUIRE(high.size() == 1);
      folded.push_back({*high.begin(), *high.begin(), EdgeLabel::loop()});
      std::sort(folded.begin(), folded.end());
      CHECK(folded == quotient_mod(w, n).sorted_keyed_edges());
    }
  }
}

TEST_CASE("flip and reflection isomorphisms") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto w = random_word(rng);
    for (int n = 1; n <= 8; ++n) {
      const auto flip = flip_letter_iso(w, n);
      CHECK(flip.target.letter(static_cast<std::size_t>(n)) != w.letter(static_cast<std::size_t>(n)));
      CHECK(preserves_adjacency(flip.map, OmegaGraph(w), OmegaGraph(flip.target), -300, 300));
    }
    const auto psi = complement_iso(w);
    CHECK(preserves_adjacency(psi, OmegaGraph(w), OmegaGraph(complement(w)), -300, 300));
  }
}

TEST_CASE("isomorphisms between cofinal and anticofinal words") {
  std::mt19937_64 rng(13);
  std::bernoulli_distribution bit(0.5);
  for (int i = 0; i < 30; ++i) {
    const auto w = random_word(rng);
    // Change a few early letters to get a cofinal partner.
    std::vector<Bit> pre;
    for (std::size_t k = 1; k <= w.preperiod().size() + 5; ++k) pre.push_back(w.letter(k) ^ (bit(rng) ? 1 : 0));
    std::vector<Bit> per;
    for (std::size_t k = 1; k <= w.period().size(); ++k) per.push_back(w.letter(pre.size() + k));
    const OmegaWord cof{FiniteWord(pre), FiniteWord(per)};
    for (const auto& other : {cof, complement(cof)}) {
      const auto map = tail_iso(w, other);
      REQUIRE(map.has_value());
      CHECK(preserves_adjacency(*map, OmegaGraph(w), OmegaGraph(other), -400, 400));
    }
  }
  CHECK_FALSE(tail_iso(W("(10)"), W("(110)")).has_value());
  CHECK_FALSE(tail_iso(W("(0)"), W("(10)")).has_value());
  CHECK(tail_iso(W("(10)"), W("(10)"))->is_identity());
}

TEST_CASE("translation and reflection of partial graphs") {
  for (int n = 1; n <= 6; ++n) {
    const OmegaGraph g(W("(0)"), n);
    const std::int64_t shift = std::int64_t{1} << n;
    CHECK(preserves_adjacency([shift](std::int64_t z) { return z + shift; }, g, g, -500, 500, true));
    CHECK(preserves_adjacency([](std::int64_t z) { return -z; }, g, g, -500, 500, true));
  }
  // The half shift is not an automorphism.
  const OmegaGraph g(W("(0)"), 4);
  CHECK_FALSE(preserves_adjacency([](std::int64_t z) { return z + 8; }, g, g, -500, 500));
}

TEST_CASE("balls of X_omega converge to balls of the finite models") {
  for (const char* s : {"(10)", "(110)", "1(10)", "(0)"}) {
    for (int r = 0; r <= 4; ++r) CHECK(convergence_check(W(s), 14, r));
  }
  // At n = 1 the finite model is too small to look like X_omega.
  CHECK_FALSE(convergence_check(W("(10)"), 1, 2));
}
