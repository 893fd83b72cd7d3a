#pragma once

// Text exports of finite graphs: Graphviz DOT, a sorted CSV edge list and a
// JSON document. All three are deterministic functions of the graph.

#include <optional>
#include <string>

#include "xomega/multigraph.hpp"

namespace xomega {

struct GraphMeta {
  std::string name = "G";
  std::string omega;       // PRE(P) text, empty when not applicable
  std::optional<int> n;    // level, when applicable
};

/// Edges as (key u, key v, label) with key u <= key v, sorted.
struct KeyedEdge {
  std::int64_t u = 0;
  std::int64_t v = 0;
  EdgeLabel label;
  friend auto operator<=>(const KeyedEdge&, const KeyedEdge&) = default;
};
std::vector<KeyedEdge> sorted_edges(const LabeledMultigraph& g);

/// `graph NAME { ... }` with one `u -- v [level="k"]` (or gen="a") line per
/// edge; loops are written `u -- u`.
std::string to_dot(const LabeledMultigraph& g, const GraphMeta& meta = {});
/// Header `u,v,label`, then one sorted edge per line.
std::string to_csv(const LabeledMultigraph& g);
/// {"vertices": [...], "edges": [{"u","v","label"}...], "meta": {...}}.
std::string to_json(const LabeledMultigraph& g, const GraphMeta& meta = {});

enum class GraphFormat { Dot, Csv, Json };
/// "dot", "csv" or "json"; Error otherwise.
GraphFormat parse_graph_format(const std::string& text);
std::string export_graph(const LabeledMultigraph& g, GraphFormat format, const GraphMeta& meta = {});

}  // namespace xomega
