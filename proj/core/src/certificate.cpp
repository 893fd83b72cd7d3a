#include "xomega/certificate.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "xomega/errors.hpp"

namespace xomega {

std::string PointedBallCertificate::bytes() const {
  std::string out;
  out.reserve(code_.size() * 4);
  for (auto w : code_) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((w >> (8 * i)) & 0xffu));
  }
  return out;
}

std::size_t PointedBallCertificate::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : code_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string PointedBallCertificate::short_id() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

namespace {

// Simple multigraph: per vertex the loop count and (neighbor, multiplicity)
// pairs sorted by neighbor.
struct SmallGraph {
  std::size_t n = 0;
  std::vector<std::uint32_t> loops;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj;
};

SmallGraph to_small(const LabeledMultigraph& g) {
  SmallGraph s;
  s.n = g.vertex_count();
  s.loops.assign(s.n, 0);
  std::vector<std::map<std::uint32_t, std::uint32_t>> acc(s.n);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      ++s.loops[e.u];
    } else {
      ++acc[e.u][static_cast<std::uint32_t>(e.v)];
      ++acc[e.v][static_cast<std::uint32_t>(e.u)];
    }
  }
  s.adj.resize(s.n);
  for (std::size_t v = 0; v < s.n; ++v) s.adj[v].assign(acc[v].begin(), acc[v].end());
  return s;
}

using Coloring = std::vector<std::uint32_t>;

// Replaces arbitrary ordered color values by their dense ranks.
std::size_t rerank(Coloring& colors, const std::vector<std::uint64_t>& keys) {
  std::vector<std::uint64_t> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    colors[v] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  }
  return sorted.size();
}

std::size_t count_colors(const Coloring& colors) {
  std::vector<std::uint32_t> c = colors;
  std::sort(c.begin(), c.end());
  return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

// Iterated color refinement: a vertex's new color is determined by its old
// color and the multiset of (neighbor color, multiplicity). New colors are
// ordered by signature, which keeps the procedure isomorphism-invariant.
void refine(const SmallGraph& g, Coloring& colors) {
  std::size_t classes = count_colors(colors);
  std::vector<std::vector<std::uint64_t>> sig(g.n);
  std::vector<std::uint32_t> order(g.n);
  while (classes < g.n) {
    for (std::size_t v = 0; v < g.n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(colors[v]);
      for (auto [u, m] : g.adj[v]) s.push_back((std::uint64_t{colors[u]} << 32) | m);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
    Coloring next(g.n);
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < g.n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    const std::size_t next_classes = static_cast<std::size_t>(rank) + 1;
    colors = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
}

std::vector<std::uint32_t> encode(const SmallGraph& g, const Coloring& label) {
  std::vector<std::uint32_t> inv(g.n);
  for (std::size_t v = 0; v < g.n; ++v) inv[label[v]] = static_cast<std::uint32_t>(v);
  std::vector<std::uint32_t> code;
  code.reserve(1 + 2 * g.n + 4 * g.n);
  code.push_back(static_cast<std::uint32_t>(g.n));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> row;
  for (std::size_t p = 0; p < g.n; ++p) {
    const auto v = inv[p];
    row.clear();
    for (auto [u, m] : g.adj[v]) {
      if (label[u] > p) row.emplace_back(label[u], m);
    }
    std::sort(row.begin(), row.end());
    code.push_back(g.loops[v]);
    code.push_back(static_cast<std::uint32_t>(row.size()));
    for (auto [q, m] : row) {
      code.push_back(q);
      code.push_back(m);
    }
  }
  return code;
}

class CanonicalSearch {
 public:
  CanonicalSearch(const SmallGraph& g, const CanonicalOptions& options) : g_(g), options_(options) {}

  std::vector<std::uint32_t> run(Coloring colors) {
    std::vector<std::uint32_t> path;
    search(std::move(colors), path);
    return best_;
  }

 private:
  std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void leaf(const Coloring& label) {
    if (++leaves_ > options_.max_leaves) {
      throw ExplosionGuard("canonical labeling exceeded " + std::to_string(options_.max_leaves) + " leaves");
    }
    auto code = encode(g_, label);
    if (!have_best_ || code < best_) {
      best_ = std::move(code);
      best_label_ = label;
      have_best_ = true;
      return;
    }
    if (code == best_) {
      // label^-1 ∘ best_label is an automorphism.
      std::vector<std::uint32_t> best_inv(g_.n);
      for (std::size_t v = 0; v < g_.n; ++v) best_inv[best_label_[v]] = static_cast<std::uint32_t>(v);
      std::vector<std::uint32_t> perm(g_.n);
      bool identity = true;
      for (std::size_t v = 0; v < g_.n; ++v) {
        perm[v] = best_inv[label[v]];
        identity = identity && perm[v] == v;
      }
      if (!identity) automorphisms_.push_back(std::move(perm));
    }
  }

  void search(Coloring colors, std::vector<std::uint32_t>& path) {
    refine(g_, colors);
    std::vector<std::uint32_t> size(g_.n, 0);
    for (auto c : colors) ++size[c];
    std::optional<std::uint32_t> target;
    for (std::uint32_t c = 0; c < g_.n; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (!target) {
      leaf(colors);
      return;
    }
    std::vector<std::uint32_t> cell;
    for (std::size_t v = 0; v < g_.n; ++v) {
      if (colors[v] == *target) cell.push_back(static_cast<std::uint32_t>(v));
    }
    std::vector<std::uint32_t> explored;
    for (auto v : cell) {
      // Orbit pruning with the automorphisms found so far that fix the
      // current path pointwise.
      std::vector<std::uint32_t> parent(g_.n);
      std::iota(parent.begin(), parent.end(), 0u);
      for (const auto& perm : automorphisms_) {
        bool fixes = std::all_of(path.begin(), path.end(), [&](std::uint32_t p) { return perm[p] == p; });
        if (!fixes) continue;
        for (std::size_t x = 0; x < g_.n; ++x) {
          auto a = find(parent, static_cast<std::uint32_t>(x));
          auto b = find(parent, perm[x]);
          if (a != b) parent[a] = b;
        }
      }
      const auto root = find(parent, v);
      bool pruned = std::any_of(explored.begin(), explored.end(),
                                [&](std::uint32_t w) { return find(parent, w) == root; });
      if (pruned) continue;
      explored.push_back(v);

      std::vector<std::uint64_t> keys(g_.n);
      for (std::size_t u = 0; u < g_.n; ++u) {
        keys[u] = 2 * std::uint64_t{colors[u]} + ((colors[u] == *target && u != v) ? 1 : 0);
      }
      Coloring child(g_.n);
      rerank(child, keys);
      path.push_back(v);
      search(std::move(child), path);
      path.pop_back();
    }
  }

  const SmallGraph& g_;
  CanonicalOptions options_;
  std::vector<std::uint32_t> best_;
  Coloring best_label_;
  bool have_best_ = false;
  std::size_t leaves_ = 0;
  std::vector<std::vector<std::uint32_t>> automorphisms_;
};

std::vector<int> distances_from(const SmallGraph& g, std::size_t center) {
  std::vector<int> dist(g.n, -1);
  std::deque<std::size_t> queue{center};
  dist[center] = 0;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto [u, m] : g.adj[v]) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

}  // namespace

PointedBallCertificate canonical_certificate(const LabeledMultigraph& g, std::size_t center,
                                             const CanonicalOptions& options) {
  if (center >= g.vertex_count()) throw Error("certificate center out of range");
  const SmallGraph s = to_small(g);
  const auto dist = distances_from(s, center);
  std::vector<std::uint64_t> keys(s.n);
  for (std::size_t v = 0; v < s.n; ++v) {
    // Unreachable vertices sort last; loops and degree are seeded too.
    const std::uint64_t d = dist[v] < 0 ? 0xffffu : static_cast<std::uint64_t>(dist[v]);
    keys[v] = (d << 40) | (std::uint64_t{s.loops[v]} << 20) | s.adj[v].size();
  }
  Coloring colors(s.n);
  rerank(colors, keys);
  CanonicalSearch search(s, options);
  return PointedBallCertificate(search.run(std::move(colors)));
}

LabeledMultigraph extract_ball(const LabeledMultigraph& g, std::size_t center, int r) {
  return extract_ball(g, g.adjacency(), center, r);
}

LabeledMultigraph extract_ball(const LabeledMultigraph& g, const Adjacency& adj, std::size_t center, int r) {
  if (center >= g.vertex_count()) throw Error("ball center out of range");
  std::unordered_map<std::size_t, int> dist{{center, 0}};
  std::vector<std::size_t> order{center};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto v = order[head];
    const int d = dist[v];
    if (d == r) continue;
    for (std::size_t k = adj.offsets[v]; k < adj.offsets[v + 1]; ++k) {
      if (dist.emplace(adj.targets[k], d + 1).second) order.push_back(adj.targets[k]);
    }
  }
  LabeledMultigraph ball;
  std::unordered_map<std::size_t, std::size_t> local;
  for (auto v : order) local.emplace(v, ball.add_vertex(g.key(v)));
  std::vector<std::size_t> ids;
  for (auto v : order) {
    for (std::size_t k = adj.offsets[v]; k < adj.offsets[v + 1]; ++k) {
      if (local.count(adj.targets[k])) ids.push_back(adj.edge_ids[k]);
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (auto id : ids) {
    const auto& e = g.edges()[id];
    ball.add_edge(local.at(e.u), local.at(e.v), e.label);
  }
  return ball;
}

PointedBallCertificate ball_certificate(const LabeledMultigraph& g, std::size_t center, int r,
                                        const CanonicalOptions& options) {
  return canonical_certificate(extract_ball(g, center, r), 0, options);
}

}  // namespace xomega
