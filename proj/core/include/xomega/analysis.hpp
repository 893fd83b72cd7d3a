#pragma once

// Metric and local-structure analytics on X_ω, X_n and Γ_n: distances,
// diameters, growth, r-type censuses, dense holonomy, local isomorphism and
// the contraction experiment for G.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xomega/certificate.hpp"
#include "xomega/group.hpp"
#include "xomega/multigraph.hpp"
#include "xomega/omega_graph.hpp"
#include "xomega/words.hpp"

namespace xomega {

/// Upper bound on worker threads for analysis routines; 0 means "any".
/// Every routine currently runs on the calling thread, so the cap only
/// validates the value.
void set_thread_cap(int threads);
int thread_cap();

// ---------------------------------------------------------------------------
// Distances

struct DistanceTable {
  std::size_t source = 0;
  std::vector<int> dist;  // -1 when unreachable

  int at(std::size_t v) const { return dist.at(v); }
  int eccentricity() const;
};

/// Breadth-first distances; loops and edge multiplicities are irrelevant.
DistanceTable bfs(const LabeledMultigraph& graph, std::size_t source);

/// Distances from `source` in Γ_n (n <= 28) computed on the implicit graph.
/// Levels above 24 need `big_memory`; otherwise ExplosionGuard is thrown.
std::vector<std::uint16_t> gamma_distances(int n, std::uint64_t source, bool big_memory = false);

/// Level m = (n^2 + 3n + 2)/2 for the distance identity below.
int corner_level(int n);
/// d(0^m, 0^(m-1)1) in Γ_m for m = corner_level(n); equals n·2^n + 1.
std::int64_t corner_distance(int n, bool big_memory = false);

struct DiameterResult {
  int n = 0;
  int diameter = 0;      // exact value (exact mode) or -1
  int lower = 0;         // d(0^n, 0^(n-1)1)
  int upper = 0;         // 2·lower
  std::size_t sweeps = 0;  // breadth-first searches used
  /// diameter / (sqrt(n)·2^sqrt(2n)); exact mode only.
  double ratio() const;
};

/// Exact diameter of Γ_n by eccentricity bounding (n <= 22).
DiameterResult diameter_gamma(int n);
/// Interval [d(0^n, 0^(n-1)1), 2·d(0^n, 0^(n-1)1)] without the exact value.
DiameterResult diameter_interval(int n, bool big_memory = false);

/// Diameter by running a search from every vertex; used to cross-check.
int diameter_all_pairs(const LabeledMultigraph& graph);

// ---------------------------------------------------------------------------
// Growth

struct GrowthTable {
  enum class Oracle { Integer, Orbital };
  std::string center;
  Oracle oracle = Oracle::Integer;
  std::vector<std::uint64_t> counts;  // counts[r] = |B(center, r)|

  int radius() const noexcept { return static_cast<int>(counts.size()) - 1; }
};

inline constexpr std::size_t kDefaultGrowthBudget = std::size_t{1} << 30;

/// |B(0, r)| in X_ω for r = 0..R by breadth-first search over the integers.
/// The visited set is a bitmap over a window that doubles as the ball
/// spreads; ExplosionGuard once it would exceed `budget_bytes`.
GrowthTable growth_x_omega(const OmegaWord& omega, int R, std::size_t budget_bytes = kDefaultGrowthBudget);
/// As growth_x_omega, but stops at the largest radius the budget allows.
GrowthTable growth_x_omega_within(const OmegaWord& omega, int R, std::size_t budget_bytes = kDefaultGrowthBudget);
/// |B(ω, r)| in Γ_ω for r = 0..R from orbital_ball.
GrowthTable growth_orbital(const OmegaWord& omega, int R);

/// 20·r^(log2 r + 2), as a long double.
long double growth_upper_bound(int r);

struct GrowthBoundsReport {
  bool upper_ok = true;
  std::optional<int> first_violation;
  /// max over r of |B(r)| / (20 r^(log2 r + 2))
  long double worst_upper_ratio = 0;
  struct Lower {
    int n;
    int radius;  // 2·Diam(Γ_n)
    std::uint64_t count;
    bool ok;
  };
  std::vector<Lower> lower;
  bool lower_ok = true;

  bool passed() const noexcept { return upper_ok && lower_ok; }
};

/// Upper bound for r = 2..R and, for each n <= max_n with 2·Diam(Γ_n) <= R,
/// the lower mechanism |B(0, 2·Diam(Γ_n))| >= 2^n.
GrowthBoundsReport growth_bounds_check(const GrowthTable& table, int max_n = 10);

struct RestrictionBoundReport {
  std::size_t ball_size = 0;        // |B(ω, n)| in Γ_ω
  std::size_t restrictions = 0;     // syntactic |N(n, k)|
  std::size_t fused = 0;            // after fusing words equal to depth 32
  bool holds = false;               // ball_size <= 2^k · restrictions
  bool holds_fused = false;         // ball_size <= 2^k · fused
};

/// |B(ω, n)| <= 2^k·|{g|_{x_1..x_k} : l(g) <= n}|.
RestrictionBoundReport restriction_bound_check(const OmegaWord& omega, int n, int k);

// ---------------------------------------------------------------------------
// Types

/// Certificate of B(z, r) inside the window; IncompleteBall unless every
/// vertex at distance < r from z is complete in the window.
PointedBallCertificate window_ball_certificate(const WindowGraph& window, std::int64_t z, int r);

struct TypeCensus {
  int r = 0;
  struct Entry {
    std::vector<std::int64_t> representatives;  // sorted by |z|, then z
    std::size_t multiplicity = 0;
  };
  std::map<PointedBallCertificate, Entry> types;
  std::size_t scanned = 0;

  std::size_t type_count() const noexcept { return types.size(); }
  bool contains(const PointedBallCertificate& c) const { return types.count(c) > 0; }
};

/// r-types of every window vertex whose r-ball lies inside the window.
/// Keeps up to `keep` representatives per type.
TypeCensus type_census(const WindowGraph& window, int r, std::size_t keep = 4);

/// Smallest r <= cap at which z1 and z2 have different r-types in X_ω.
std::optional<int> genericity_radius(const OmegaWord& omega, std::int64_t z1, std::int64_t z2, int cap);

struct HolonomyReport {
  int r = 0;
  int n = 0;            // every representative's (r+1)-ball lies in (-2^(n-1), 2^(n-1))
  std::int64_t R = 0;   // 2^n
  std::size_t types = 0;
  std::vector<std::int64_t> representatives;
  std::int64_t census_half_width = 0;  // census window [-w, w]
  std::int64_t checked_lo = 0;         // centers verified
  std::int64_t checked_hi = 0;
  bool verified = false;
};

/// Finds R = 2^n such that every R-ball of X_ω contains all r-types, and
/// verifies it on every center of a window of width 2^(n+3). Throws
/// NotDenseHolonomy for eventually constant ω.
HolonomyReport dense_holonomy_R(const OmegaWord& omega, int r);

struct LocalIsoVerdict {
  enum class Kind { LocallyIso, Distinguished };
  Kind kind = Kind::LocallyIso;
  /// A type present in exactly one of the two graphs.
  std::optional<PointedBallCertificate> witness;
  /// 0 if the witness comes from the first graph, 1 from the second.
  int witness_side = -1;
  std::size_t types_first = 0;
  std::size_t types_second = 0;

  bool locally_iso() const noexcept { return kind == Kind::LocallyIso; }
};

/// Compares the r-type sets of X_ω and X_ω' on the windows [-2^m, 2^m].
LocalIsoVerdict local_iso_check(const OmegaWord& omega, const OmegaWord& other, int r, int m);

// ---------------------------------------------------------------------------
// Contraction

/// ⌈log2 n⌉ for n >= 1.
int ceil_log2(std::size_t n);
/// ⌈log2 n⌉·(⌈log2 n⌉ + 1).
int contraction_depth(std::size_t n);

/// {g|_v : |v| = depth}, deduplicated as reduced words.
std::vector<GroupWord> restrictions_at_depth(const GroupWord& g, int depth);

struct ContractionReport {
  std::size_t samples = 0;
  std::size_t restrictions_checked = 0;
  std::size_t failures = 0;            // restrictions outside the nucleus pattern
  std::size_t halving_violations = 0;  // syllable count above m/2 + 1
  std::vector<std::string> failing_words;

  bool passed() const noexcept { return failures == 0; }
};

/// For `samples` random reduced words g with 1 <= l(g) <= max_len, checks
/// that all restrictions at depth contraction_depth(l(g)) match the nucleus
/// pattern, and that at depth ⌈log2 l(g)⌉ + 1 the number of b-syllables is
/// at most m/2 + 1.
ContractionReport contraction_experiment(std::size_t samples, std::size_t max_len, std::uint64_t seed);
/// The same checks for one word.
ContractionReport contraction_check(const GroupWord& g);

}  // namespace xomega
