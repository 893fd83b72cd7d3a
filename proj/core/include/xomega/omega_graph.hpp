#pragma once

// The 4-regular graphs X_ω on the integers, their partial graphs X_ω^n,
// the finite models X_n, the quotients X_ω mod 2^n and the explicit
// isomorphisms between them.
//
// Vertex z of X_ω sits on level n >= 1 when z ≡ -a_n^ω (mod 2^n). In 2-adic
// terms that is n = 1 + v_2(z + ω), so the level is read off the lowest set
// bit of z + ω; the single integer with z + ω = 0 (only possible for an
// eventually constant ω) carries the loop.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "xomega/multigraph.hpp"
#include "xomega/words.hpp"

namespace xomega {

/// Result of the level search: the unique n >= 1 with z ≡ -a_n (mod 2^n),
/// or the loop vertex (n == 0).
struct VertexLevel {
  int n = 0;
  bool is_loop() const noexcept { return n == 0; }
  friend bool operator==(const VertexLevel&, const VertexLevel&) = default;
};

struct Neighbor {
  std::int64_t vertex;
  EdgeLabel label;
  friend bool operator==(const Neighbor&, const Neighbor&) = default;
  friend auto operator<=>(const Neighbor&, const Neighbor&) = default;
};

/// Adjacency oracle for X_ω, or for X_ω^n when a level cap is given.
class OmegaGraph {
 public:
  explicit OmegaGraph(OmegaWord omega, std::optional<int> max_level = std::nullopt);

  const OmegaWord& omega() const noexcept { return omega_; }
  std::optional<int> max_level() const noexcept { return max_level_; }

  /// Level of z in the full graph X_ω (ignores the cap).
  VertexLevel level_of(std::int64_t z) const;

  /// Calls f(target, label) for every incident edge end; a loop is reported
  /// once with target == z.
  template <class F>
  void for_each_neighbor(std::int64_t z, F&& f) const {
    f(z - 1, EdgeLabel::at_level(0));
    f(z + 1, EdgeLabel::at_level(0));
    const VertexLevel lv = level_of(z);
    if (lv.is_loop()) {
      if (!max_level_) f(z, EdgeLabel::loop());
      return;
    }
    if (max_level_ && lv.n > *max_level_) return;
    const std::int64_t jump = std::int64_t{1} << lv.n;
    f(z - jump, EdgeLabel::at_level(lv.n));
    f(z + jump, EdgeLabel::at_level(lv.n));
  }

  std::vector<Neighbor> neighbors(std::int64_t z) const;

 private:
  VertexLevel level_slow(std::int64_t z) const;

  OmegaWord omega_;
  std::optional<int> max_level_;
  std::uint64_t prefix62_ = 0;
};

VertexLevel level_of(const OmegaWord& omega, std::int64_t z);
std::vector<Neighbor> neighbors(const OmegaWord& omega, std::int64_t z);

/// Finite induced piece of X_ω (or X_ω^n) on the closed interval [lo, hi].
struct WindowGraph {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  LabeledMultigraph graph;  // vertex index i has key lo + i
  std::vector<bool> complete;

  bool contains(std::int64_t z) const noexcept { return z >= lo && z <= hi; }
  std::size_t index(std::int64_t z) const { return static_cast<std::size_t>(z - lo); }
  bool is_complete(std::int64_t z) const { return contains(z) && complete[index(z)]; }
};

WindowGraph window(const OmegaWord& omega, std::int64_t lo, std::int64_t hi);
WindowGraph partial_graph(const OmegaWord& omega, int n, std::int64_t lo, std::int64_t hi);
WindowGraph window(const OmegaGraph& graph, std::int64_t lo, std::int64_t hi);

/// The finite model X_n on Z/2^n: level k = 1..n-1 edge families, the loop
/// at 2^(n-1) (level n) and one loop at 0 standing for every level above n.
LabeledMultigraph model_graph(int n);

/// X_ω mod 2^n: one edge per orbit of X_ω-edges under translation by 2^n.
/// Every level above n, and the loop of X_ω if any, lands on the single loop
/// at -numeric_prefix(ω, n) mod 2^n.
LabeledMultigraph quotient_mod(const OmegaWord& omega, int n);

/// z ↦ sign·z + shift.
struct AffineMap {
  int sign = 1;
  std::int64_t shift = 0;

  std::int64_t operator()(std::int64_t z) const noexcept { return sign * z + shift; }
  /// The map "this, then next".
  AffineMap then(const AffineMap& next) const noexcept {
    return AffineMap{sign * next.sign, next.sign * shift + next.shift};
  }
  bool is_identity() const noexcept { return sign == 1 && shift == 0; }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

struct FlipIsomorphism {
  AffineMap map;
  OmegaWord target;
};

/// Φ_n: X_ω → X_ω' where ω' is ω with letter n flipped.
FlipIsomorphism flip_letter_iso(const OmegaWord& omega, int n);
/// Ψ(z) = -z + 1: X_ω → X_complement(ω).
AffineMap complement_iso(const OmegaWord& omega);
/// An explicit isomorphism X_ω → X_ω' if the words are cofinal or
/// anticofinal, nullopt otherwise.
std::optional<AffineMap> tail_iso(const OmegaWord& omega, const OmegaWord& other);

/// z ↦ z + shift mod 2^n.
struct ResidueShift {
  int n = 1;
  std::int64_t shift = 0;
  std::int64_t operator()(std::int64_t z) const noexcept {
    const std::int64_t mask = (std::int64_t{1} << n) - 1;
    return (z + shift) & mask;
  }
};

/// quotient_mod(ω, n) → model_graph(n), z ↦ z + x_1 + 2x_2 + ... + 2^(n-1)x_n.
ResidueShift quotient_model_shift(const OmegaWord& omega, int n);

using VertexMap = std::function<std::int64_t(std::int64_t)>;

/// True iff `map` is a bijection of vertex keys carrying g1's edge multiset
/// onto g2's (labels compared only when ignore_labels is false).
bool validate_iso(const VertexMap& map, const LabeledMultigraph& g1, const LabeledMultigraph& g2,
                  bool ignore_labels = true);

/// For every z in [lo, hi]: the neighbor multiset of map(z) in `target`
/// equals the image of the neighbor multiset of z in `source`.
bool preserves_adjacency(const VertexMap& map, const OmegaGraph& source, const OmegaGraph& target,
                         std::int64_t lo, std::int64_t hi, bool compare_labels = false);

/// The pointed ball B(center, r) of X_ω as a finite multigraph (induced on
/// the vertices at distance <= r; keys are the integers). The center has
/// index 0.
LabeledMultigraph oracle_ball(const OmegaGraph& graph, std::int64_t center, int r);

/// Pointed r-ball at 0 in X_ω vs the pointed r-ball at
/// numeric_prefix(ω, n) mod 2^n in X_n.
bool convergence_check(const OmegaWord& omega, int n, int r);

}  // namespace xomega
