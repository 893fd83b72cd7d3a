#include "xomega/omega_graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "xomega/certificate.hpp"
#include "xomega/errors.hpp"

namespace xomega {

namespace {

constexpr std::uint64_t kMask62 = (std::uint64_t{1} << 62) - 1;

std::int64_t mod_pow2(std::int64_t z, int n) { return z & ((std::int64_t{1} << n) - 1); }

std::size_t bit_length(std::int64_t z) {
  const auto u = static_cast<std::uint64_t>(z < 0 ? ~z : z);
  return static_cast<std::size_t>(std::bit_width(u));
}

}  // namespace

OmegaGraph::OmegaGraph(OmegaWord omega, std::optional<int> max_level)
    : omega_(std::move(omega)), max_level_(max_level) {
  if (max_level_ && *max_level_ < 0) throw Error("partial graph level must be >= 0");
  prefix62_ = static_cast<std::uint64_t>(numeric_prefix(omega_, 62));
}

VertexLevel OmegaGraph::level_of(std::int64_t z) const {
  const std::uint64_t t = (static_cast<std::uint64_t>(z) + prefix62_) & kMask62;
  if (t != 0) return VertexLevel{std::countr_zero(t) + 1};
  return level_slow(z);
}

VertexLevel OmegaGraph::level_slow(std::int64_t z) const {
  const OmegaWord sum = add_integer(omega_, z);
  const auto one = first_one(sum);
  if (!one) return VertexLevel{0};
  const std::size_t level = *one + 1;
  const std::size_t cap =
      bit_length(z) + omega_.preperiod().size() + 2 * omega_.period().size() + 2;
  if (level > cap) {
    throw IterationCapExceeded("level search for z = " + std::to_string(z) + " on " + omega_.str() +
                               " passed its cap of " + std::to_string(cap));
  }
  return VertexLevel{static_cast<int>(level)};
}

std::vector<Neighbor> OmegaGraph::neighbors(std::int64_t z) const {
  std::vector<Neighbor> out;
  out.reserve(4);
  for_each_neighbor(z, [&out](std::int64_t t, EdgeLabel l) { out.push_back(Neighbor{t, l}); });
  return out;
}

VertexLevel level_of(const OmegaWord& omega, std::int64_t z) { return OmegaGraph(omega).level_of(z); }

std::vector<Neighbor> neighbors(const OmegaWord& omega, std::int64_t z) {
  return OmegaGraph(omega).neighbors(z);
}

// ---------------------------------------------------------------------------

WindowGraph window(const OmegaGraph& graph, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error("window requires lo <= hi");
  WindowGraph w;
  w.lo = lo;
  w.hi = hi;
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  for (std::int64_t z = lo; z <= hi; ++z) w.graph.add_vertex(z);
  w.complete.assign(count, true);
  for (std::int64_t z = lo; z <= hi; ++z) {
    const std::size_t i = w.index(z);
    graph.for_each_neighbor(z, [&](std::int64_t t, EdgeLabel label) {
      if (!w.contains(t)) {
        w.complete[i] = false;
        return;
      }
      // Each edge is recorded from its lower endpoint; loops once.
      if (t == z || t > z) w.graph.add_edge(i, w.index(t), label);
    });
  }
  return w;
}

WindowGraph window(const OmegaWord& omega, std::int64_t lo, std::int64_t hi) {
  return window(OmegaGraph(omega), lo, hi);
}

WindowGraph partial_graph(const OmegaWord& omega, int n, std::int64_t lo, std::int64_t hi) {
  return window(OmegaGraph(omega, n), lo, hi);
}

LabeledMultigraph model_graph(int n) {
  if (n < 1 || n > 30) throw Error("model_graph: n must lie in [1, 30]");
  const std::int64_t size = std::int64_t{1} << n;
  LabeledMultigraph g;
  for (std::int64_t z = 0; z < size; ++z) g.add_vertex(z);
  auto idx = [](std::int64_t z) { return static_cast<std::size_t>(z); };
  for (std::int64_t z = 0; z < size; ++z) g.add_edge(idx(z), idx(mod_pow2(z + 1, n)), EdgeLabel::at_level(0));
  for (int k = 1; k < n; ++k) {
    const std::int64_t step = std::int64_t{1} << k;
    for (std::int64_t z = 0; z < (size >> k); ++z) {
      const std::int64_t u = step * z + step / 2;
      g.add_edge(idx(u), idx(mod_pow2(u + step, n)), EdgeLabel::at_level(k));
    }
  }
  g.add_edge(idx(size / 2), idx(size / 2), EdgeLabel::at_level(n));
  g.add_edge(0, 0, EdgeLabel::loop());
  return g;
}

LabeledMultigraph quotient_mod(const OmegaWord& omega, int n) {
  if (n < 1 || n > 30) throw Error("quotient_mod: n must lie in [1, 30]");
  const std::int64_t size = std::int64_t{1} << n;
  LabeledMultigraph g;
  for (std::int64_t z = 0; z < size; ++z) g.add_vertex(z);
  auto idx = [](std::int64_t z) { return static_cast<std::size_t>(z); };
  for (std::int64_t z = 0; z < size; ++z) g.add_edge(idx(z), idx(mod_pow2(z + 1, n)), EdgeLabel::at_level(0));
  for (int k = 1; k < n; ++k) {
    const std::int64_t step = std::int64_t{1} << k;
    const std::int64_t base = mod_pow2(-coefficient_a(omega, static_cast<std::size_t>(k)), k);
    for (std::int64_t j = 0; j < (size >> k); ++j) {
      const std::int64_t u = base + step * j;
      g.add_edge(idx(u), idx(mod_pow2(u + step, n)), EdgeLabel::at_level(k));
    }
  }
  const std::int64_t top = mod_pow2(-coefficient_a(omega, static_cast<std::size_t>(n)), n);
  g.add_edge(idx(top), idx(top), EdgeLabel::at_level(n));
  const std::int64_t sink = mod_pow2(-numeric_prefix(omega, static_cast<std::size_t>(n)), n);
  g.add_edge(idx(sink), idx(sink), EdgeLabel::loop());
  return g;
}

// ---------------------------------------------------------------------------

FlipIsomorphism flip_letter_iso(const OmegaWord& omega, int n) {
  if (n < 1 || n > 62) throw OverflowError("flip_letter_iso: n must lie in [1, 62]");
  const auto idx = static_cast<std::size_t>(n);
  const int x = omega.letter(idx);
  // Expand far enough that letter n is explicit, then flip it.
  std::vector<Bit> pre;
  const std::size_t len = std::max(idx, omega.preperiod().size());
  for (std::size_t i = 1; i <= len; ++i) pre.push_back(omega.letter(i));
  std::vector<Bit> per;
  for (std::size_t i = 1; i <= omega.period().size(); ++i) per.push_back(omega.letter(len + i));
  pre[idx - 1] ^= 1u;
  OmegaWord target(FiniteWord(std::move(pre)), FiniteWord(std::move(per)));
  const std::int64_t shift = -((1 - x) - x) * (std::int64_t{1} << (n - 1));
  return FlipIsomorphism{AffineMap{1, shift}, std::move(target)};
}

AffineMap complement_iso(const OmegaWord&) { return AffineMap{-1, 1}; }

std::optional<AffineMap> tail_iso(const OmegaWord& omega, const OmegaWord& other) {
  auto cofinal_map = [](const OmegaWord& from, const OmegaWord& to) {
    // Compose Φ_i over the finitely many indices where the words differ.
    const std::size_t last = std::max(from.preperiod().size(), to.preperiod().size());
    AffineMap map;
    OmegaWord current = from;
    for (std::size_t i = 1; i <= last; ++i) {
      if (current.letter(i) == to.letter(i)) continue;
      auto step = flip_letter_iso(current, static_cast<int>(i));
      map = map.then(step.map);
      current = std::move(step.target);
    }
    if (!(current == to)) throw Error("tail_iso: flip composition did not reach the target word");
    return map;
  };
  if (is_cofinal(omega, other)) return cofinal_map(omega, other);
  if (is_anticofinal(omega, other)) {
    return cofinal_map(omega, complement(other)).then(complement_iso(complement(other)));
  }
  return std::nullopt;
}

ResidueShift quotient_model_shift(const OmegaWord& omega, int n) {
  if (n < 1 || n > 62) throw OverflowError("quotient_model_shift: n must lie in [1, 62]");
  return ResidueShift{n, numeric_prefix(omega, static_cast<std::size_t>(n))};
}

bool validate_iso(const VertexMap& map, const LabeledMultigraph& g1, const LabeledMultigraph& g2,
                  bool ignore_labels) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  std::unordered_set<std::int64_t> image;
  for (auto key : g1.keys()) {
    const auto target = map(key);
    if (!g2.index_of(target) || !image.insert(target).second) return false;
  }
  using KeyedEdge = LabeledMultigraph::KeyedEdge;
  std::vector<KeyedEdge> mapped;
  mapped.reserve(g1.edge_count());
  for (const auto& e : g1.edges()) {
    auto u = map(g1.key(e.u));
    auto v = map(g1.key(e.v));
    if (u > v) std::swap(u, v);
    mapped.push_back(KeyedEdge{u, v, ignore_labels ? EdgeLabel{} : e.label});
  }
  std::sort(mapped.begin(), mapped.end());
  auto expected = g2.sorted_keyed_edges();
  if (ignore_labels) {
    for (auto& e : expected) e.label = EdgeLabel{};
    std::sort(expected.begin(), expected.end());
  }
  return mapped == expected;
}

bool preserves_adjacency(const VertexMap& map, const OmegaGraph& source, const OmegaGraph& target,
                         std::int64_t lo, std::int64_t hi, bool compare_labels) {
  std::vector<Neighbor> image;
  std::vector<Neighbor> actual;
  for (std::int64_t z = lo; z <= hi; ++z) {
    const std::int64_t fz = map(z);
    image.clear();
    actual.clear();
    source.for_each_neighbor(z, [&](std::int64_t t, EdgeLabel l) {
      image.push_back(Neighbor{map(t), compare_labels ? l : EdgeLabel{}});
    });
    target.for_each_neighbor(fz, [&](std::int64_t t, EdgeLabel l) {
      actual.push_back(Neighbor{t, compare_labels ? l : EdgeLabel{}});
    });
    std::sort(image.begin(), image.end());
    std::sort(actual.begin(), actual.end());
    if (image != actual) return false;
  }
  return true;
}

LabeledMultigraph oracle_ball(const OmegaGraph& graph, std::int64_t center, int r) {
  std::unordered_map<std::int64_t, int> dist;
  std::vector<std::int64_t> order;
  dist.emplace(center, 0);
  order.push_back(center);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::int64_t z = order[head];
    const int d = dist[z];
    if (d == r) continue;
    graph.for_each_neighbor(z, [&](std::int64_t t, EdgeLabel) {
      if (dist.emplace(t, d + 1).second) order.push_back(t);
    });
  }
  LabeledMultigraph ball;
  for (auto z : order) ball.add_vertex(z);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::int64_t z = order[i];
    graph.for_each_neighbor(z, [&](std::int64_t t, EdgeLabel label) {
      if (t < z) return;
      if (auto j = ball.index_of(t)) ball.add_edge(i, *j, label);
    });
  }
  return ball;
}

bool convergence_check(const OmegaWord& omega, int n, int r) {
  const auto ball = oracle_ball(OmegaGraph(omega), 0, r);
  const auto local = canonical_certificate(ball, 0);
  const auto model = model_graph(n);
  const auto point = mod_pow2(numeric_prefix(omega, static_cast<std::size_t>(n)), n);
  const auto remote = ball_certificate(model, *model.index_of(point), r);
  return local == remote;
}

}  // namespace xomega
