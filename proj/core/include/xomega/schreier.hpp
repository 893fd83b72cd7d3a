#pragma once

// Schreier graphs of G: the level graphs Γ_n on {0,1}^n and balls of the
// orbital graph Γ_ω on the orbit of an infinite word.
//
// A level-n word x_1...x_n is stored as the integer x_1 + 2x_2 + ... +
// 2^(n-1)x_n, so a acts as +1 mod 2^n and the map onto the finite model X_n
// is the identity on keys.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "xomega/group.hpp"
#include "xomega/multigraph.hpp"
#include "xomega/omega_graph.hpp"
#include "xomega/words.hpp"

namespace xomega {

/// Vertices {0,1}^n (as integers); for each v and s ∈ {a, b} one edge
/// {v, s(v)} labeled s, a loop when s fixes v. Requires 1 <= n <= 24.
LabeledMultigraph gamma_n(int n);

/// Neighbors of v in Γ_n without building the graph: a^±1(v), b^±1(v).
/// b-loops are reported once.
template <class F>
void for_each_gamma_neighbor(std::uint64_t v, int n, F&& f) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  f((v + 1) & mask);
  f((v - 1) & mask);
  const std::uint64_t low = v & (~v + 1);  // lowest set bit; 0 for v = 0
  const std::uint64_t step = low << 1;
  if (step == 0 || step > mask) {
    f(v);  // b fixes 0^n and 0^(n-1)1
    return;
  }
  f((v + step) & mask);
  f((v - step) & mask);
}

/// v ↦ the exponent m with a^m(0^n) = v; on the integer encoding this is the
/// identity.
VertexMap level_model_map(int n);

/// The exponent m with a^m(0^n) = v, by walking the a-cycle.
std::uint64_t adding_machine_exponent(const FiniteWord& v);

struct OrbitalBall {
  OmegaWord center;
  int radius = 0;
  std::vector<OmegaWord> vertices;  // BFS order, vertices[0] == center
  std::vector<int> distance;
  /// Vertex keys are indices into `vertices`; edge labels are generators.
  LabeledMultigraph graph;
  bool exact = true;

  std::size_t size() const noexcept { return vertices.size(); }
};

/// Exact ball of radius r around ω in Γ_ω, with the induced a- and b-edges.
OrbitalBall orbital_ball(const OmegaWord& omega, int r);

/// Each ball vertex ↦ the integer m with vertex = a^m(ω). Throws
/// NotInAOrbit if some vertex is not of that form.
std::vector<std::int64_t> orbital_integer_coordinates(const OmegaWord& omega, const OrbitalBall& ball);

/// Γ_n is connected, and every b-step v → b(v) (computed on words) adds
/// exactly 2^(k+1) to the adding-machine exponent, k the number of leading
/// zeros of v, except at the two b-fixed words.
bool level_orbit_check(int n);

}  // namespace xomega
