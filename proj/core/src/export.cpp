#include "xomega/export.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "xomega/errors.hpp"

namespace xomega {

namespace {

std::string dot_attribute(const EdgeLabel& label) {
  if (label.kind == EdgeLabel::Kind::Gen) return "gen=\"" + label.str() + "\"";
  return "level=\"" + label.str() + "\"";
}

}  // namespace

std::vector<KeyedEdge> sorted_edges(const LabeledMultigraph& g) {
  std::vector<KeyedEdge> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    auto u = g.key(e.u), v = g.key(e.v);
    if (u > v) std::swap(u, v);
    out.push_back({u, v, e.label});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_dot(const LabeledMultigraph& g, const GraphMeta& meta) {
  std::ostringstream os;
  os << "graph " << meta.name << " {\n";
  if (!meta.omega.empty()) os << "  // omega = " << meta.omega << "\n";
  if (meta.n) os << "  // n = " << *meta.n << "\n";
  std::vector<std::int64_t> keys(g.keys().begin(), g.keys().end());
  std::sort(keys.begin(), keys.end());
  for (auto k : keys) os << "  " << k << ";\n";
  for (const auto& e : sorted_edges(g)) {
    os << "  " << e.u << " -- " << e.v << " [" << dot_attribute(e.label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_csv(const LabeledMultigraph& g) {
  std::ostringstream os;
  os << "u,v,label\n";
  for (const auto& e : sorted_edges(g)) os << e.u << ',' << e.v << ',' << e.label.str() << '\n';
  return os.str();
}

std::string to_json(const LabeledMultigraph& g, const GraphMeta& meta) {
  nlohmann::ordered_json doc;
  std::vector<std::int64_t> keys(g.keys().begin(), g.keys().end());
  std::sort(keys.begin(), keys.end());
  doc["vertices"] = keys;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : sorted_edges(g)) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"label", e.label.str()}});
  }
  doc["edges"] = std::move(edges);
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  m["name"] = meta.name;
  if (!meta.omega.empty()) m["omega"] = meta.omega;
  if (meta.n) m["n"] = *meta.n;
  doc["meta"] = std::move(m);
  return doc.dump(2) + "\n";
}

GraphFormat parse_graph_format(const std::string& text) {
  if (text == "dot") return GraphFormat::Dot;
  if (text == "csv") return GraphFormat::Csv;
  if (text == "json") return GraphFormat::Json;
  throw Error("unknown graph format '" + text + "' (expected dot, csv or json)");
}

std::string export_graph(const LabeledMultigraph& g, GraphFormat format, const GraphMeta& meta) {
  switch (format) {
    case GraphFormat::Dot:
      return to_dot(g, meta);
    case GraphFormat::Csv:
      return to_csv(g);
    case GraphFormat::Json:
      return to_json(g, meta);
  }
  return {};
}

}  // namespace xomega
