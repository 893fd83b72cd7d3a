#include "xomega/multigraph.hpp"

#include <algorithm>

#include "xomega/errors.hpp"

namespace xomega {

std::string EdgeLabel::str() const {
  switch (kind) {
    case Kind::Level:
      return std::to_string(level);
    case Kind::Loop:
      return "loop";
    case Kind::Gen:
      return std::string(1, gen);
  }
  return "?";
}

std::size_t LabeledMultigraph::add_vertex(std::int64_t key) {
  auto [it, inserted] = index_.emplace(key, keys_.size());
  if (!inserted) throw Error("duplicate vertex key " + std::to_string(key));
  keys_.push_back(key);
  degree_.push_back(0);
  loops_.push_back(0);
  return it->second;
}

void LabeledMultigraph::add_edge(std::size_t u, std::size_t v, EdgeLabel label) {
  if (u >= keys_.size() || v >= keys_.size()) throw Error("edge endpoint out of range");
  if (u > v) std::swap(u, v);
  edges_.push_back(Edge{u, v, label});
  if (u == v) {
    degree_[u] += 2;
    ++loops_[u];
  } else {
    ++degree_[u];
    ++degree_[v];
  }
}

void LabeledMultigraph::add_edge_by_key(std::int64_t u, std::int64_t v, EdgeLabel label) {
  auto iu = index_of(u);
  auto iv = index_of(v);
  if (!iu || !iv) throw Error("edge endpoint key not present");
  add_edge(*iu, *iv, label);
}

std::optional<std::size_t> LabeledMultigraph::index_of(std::int64_t key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void LabeledMultigraph::set_names(std::vector<std::string> names) {
  if (names.size() != keys_.size()) throw Error("name list size mismatch");
  names_ = std::move(names);
}

std::string LabeledMultigraph::name(std::size_t i) const {
  if (!names_.empty()) return names_.at(i);
  return std::to_string(keys_.at(i));
}

std::size_t LabeledMultigraph::degree(std::size_t i) const { return degree_.at(i); }
std::size_t LabeledMultigraph::loop_count(std::size_t i) const { return loops_.at(i); }

Adjacency LabeledMultigraph::adjacency() const {
  Adjacency adj;
  const std::size_t n = keys_.size();
  adj.offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) adj.offsets[i + 1] = adj.offsets[i] + degree_[i];
  adj.targets.resize(adj.offsets[n]);
  adj.edge_ids.resize(adj.offsets[n]);
  std::vector<std::size_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    adj.edge_ids[fill[e.u]] = id;
    adj.targets[fill[e.u]++] = e.v;
    adj.edge_ids[fill[e.v]] = id;
    adj.targets[fill[e.v]++] = e.u;
  }
  return adj;
}

std::vector<LabeledMultigraph::KeyedEdge> LabeledMultigraph::sorted_keyed_edges() const {
  std::vector<KeyedEdge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) {
    auto a = keys_[e.u];
    auto b = keys_[e.v];
    if (a > b) std::swap(a, b);
    out.push_back(KeyedEdge{a, b, e.label});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace xomega
