#pragma once

// Finite undirected multigraphs with loops and per-edge labels.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace xomega {

struct EdgeLabel {
  enum class Kind : std::uint8_t { Level, Loop, Gen };

  Kind kind = Kind::Level;
  int level = 0;  // Kind::Level only
  char gen = 0;   // Kind::Gen only: 'a' or 'b'

  static EdgeLabel at_level(int n) { return {Kind::Level, n, 0}; }
  /// The loop of X_ω at its unique unmatched vertex (all levels above n
  /// collapsed, in finite models and quotients).
  static EdgeLabel loop() { return {Kind::Loop, 0, 0}; }
  static EdgeLabel generator(char g) { return {Kind::Gen, 0, g}; }

  std::string str() const;

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

struct Edge {
  std::size_t u = 0;  // u <= v
  std::size_t v = 0;
  EdgeLabel label;

  bool is_loop() const noexcept { return u == v; }
};

/// Compressed adjacency; a loop appears twice in its vertex's list so that
/// list length equals degree.
struct Adjacency {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> targets;
  std::vector<std::size_t> edge_ids;  // parallel to targets

  std::size_t degree(std::size_t v) const { return offsets[v + 1] - offsets[v]; }
};

class LabeledMultigraph {
 public:
  LabeledMultigraph() = default;

  /// Adds a vertex with the given integer payload; returns its index.
  std::size_t add_vertex(std::int64_t key);
  void add_edge(std::size_t u, std::size_t v, EdgeLabel label);
  void add_edge_by_key(std::int64_t u, std::int64_t v, EdgeLabel label);

  std::size_t vertex_count() const noexcept { return keys_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::int64_t key(std::size_t i) const { return keys_.at(i); }
  const std::vector<std::int64_t>& keys() const noexcept { return keys_; }
  std::optional<std::size_t> index_of(std::int64_t key) const;
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Display names for export; by default the decimal key.
  void set_names(std::vector<std::string> names);
  std::string name(std::size_t i) const;

  /// Degree with loops counted twice.
  std::size_t degree(std::size_t i) const;
  std::size_t loop_count(std::size_t i) const;
  Adjacency adjacency() const;

  /// Edges as (key_u, key_v, label) with key_u <= key_v, sorted.
  struct KeyedEdge {
    std::int64_t u;
    std::int64_t v;
    EdgeLabel label;
    friend bool operator==(const KeyedEdge&, const KeyedEdge&) = default;
    friend auto operator<=>(const KeyedEdge&, const KeyedEdge&) = default;
  };
  std::vector<KeyedEdge> sorted_keyed_edges() const;

 private:
  std::vector<std::int64_t> keys_;
  std::vector<std::string> names_;
  std::unordered_map<std::int64_t, std::size_t> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> loops_;
};

}  // namespace xomega
