#include "xomega/schreier.hpp"

#include <bit>
#include <deque>
#include <unordered_map>

#include "xomega/errors.hpp"

namespace xomega {

LabeledMultigraph gamma_n(int n) {
  if (n < 1 || n > 24) throw Error("gamma_n: n must lie in [1, 24]");
  const std::uint64_t size = std::uint64_t{1} << n;
  LabeledMultigraph g;
  for (std::uint64_t v = 0; v < size; ++v) g.add_vertex(static_cast<std::int64_t>(v));
  for (std::uint64_t v = 0; v < size; ++v) {
    g.add_edge(v, act_level(Gen::A, v, n), EdgeLabel::generator('a'));
    g.add_edge(v, act_level(Gen::B, v, n), EdgeLabel::generator('b'));
  }
  return g;
}

VertexMap level_model_map(int n) {
  if (n < 1) throw Error("level_model_map: n must be >= 1");
  return [](std::int64_t v) { return v; };
}

std::uint64_t adding_machine_exponent(const FiniteWord& v) {
  if (v.size() > 24) throw Error("adding_machine_exponent: walk limited to 24 letters");
  const GroupWord a = GroupWord::parse("a");
  FiniteWord cur = FiniteWord::repeat(0, v.size());
  for (std::uint64_t m = 0;; ++m) {
    if (cur == v) return m;
    cur = act_finite(a, cur);
  }
}

OrbitalBall orbital_ball(const OmegaWord& omega, int r) {
  if (r < 0) throw Error("orbital_ball: radius must be >= 0");
  OrbitalBall ball{omega, r, {}, {}, {}, true};
  std::unordered_map<OmegaWord, std::size_t, OmegaWordHash> index;
  ball.vertices.push_back(omega);
  ball.distance.push_back(0);
  index.emplace(omega, 0);
  const GroupWord gens[4] = {GroupWord::parse("a"), GroupWord::parse("A"), GroupWord::parse("b"),
                             GroupWord::parse("B")};
  for (std::size_t head = 0; head < ball.vertices.size(); ++head) {
    if (ball.distance[head] == r) continue;
    for (const auto& s : gens) {
      OmegaWord image = act_omega(s, ball.vertices[head]);
      if (index.emplace(image, ball.vertices.size()).second) {
        ball.vertices.push_back(std::move(image));
        ball.distance.push_back(ball.distance[head] + 1);
      }
    }
  }
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) ball.graph.add_vertex(static_cast<std::int64_t>(i));
  std::vector<std::string> names;
  names.reserve(ball.vertices.size());
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    names.push_back(ball.vertices[i].str());
    for (int k : {0, 2}) {
      auto it = index.find(act_omega(gens[k], ball.vertices[i]));
      if (it != index.end()) ball.graph.add_edge(i, it->second, EdgeLabel::generator(k == 0 ? 'a' : 'b'));
    }
  }
  ball.graph.set_names(std::move(names));
  return ball;
}

std::vector<std::int64_t> orbital_integer_coordinates(const OmegaWord& omega, const OrbitalBall& ball) {
  std::vector<std::int64_t> out;
  out.reserve(ball.size());
  for (const auto& v : ball.vertices) {
    const auto m = integer_difference(v, omega);
    if (!m) throw NotInAOrbit(v.str() + " is not of the form a^m(" + omega.str() + ")");
    out.push_back(*m);
  }
  return out;
}

bool level_orbit_check(int n) {
  if (n < 1 || n > 20) throw Error("level_orbit_check: n must lie in [1, 20]");
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t mask = size - 1;
  std::vector<bool> seen(size, false);
  std::deque<std::uint64_t> queue{0};
  seen[0] = true;
  std::uint64_t reached = 1;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for_each_gamma_neighbor(v, n, [&](std::uint64_t t) {
      if (!seen[t]) {
        seen[t] = true;
        ++reached;
        queue.push_back(t);
      }
    });
  }
  if (reached != size) return false;
  const GroupWord b = GroupWord::parse("b");
  for (std::uint64_t v = 0; v < size; ++v) {
    const auto word = FiniteWord::from_value(v, static_cast<std::size_t>(n));
    const auto image = act_finite(b, word).value();
    const bool fixed = v == 0 || v == (std::uint64_t{1} << (n - 1));
    if (fixed) {
      if (image != v) return false;
      continue;
    }
    const std::uint64_t step = std::uint64_t{1} << (std::countr_zero(v) + 1);
    if (((image - v) & mask) != step) return false;
  }
  return true;
}

}  // namespace xomega
