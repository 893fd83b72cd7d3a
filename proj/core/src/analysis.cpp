#include "xomega/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "xomega/errors.hpp"
#include "xomega/schreier.hpp"

namespace xomega {

namespace {

int g_thread_cap = 0;

constexpr std::uint16_t kUnseen = std::numeric_limits<std::uint16_t>::max();

void check_gamma_level(int n, bool big_memory) {
  if (n < 1 || n > 28) throw Error("Γ_n searches need 1 <= n <= 28");
  if (n > 24 && !big_memory) {
    throw ExplosionGuard("level " + std::to_string(n) + " has 2^" + std::to_string(n) +
                         " vertices; enable big-memory mode");
  }
}

// Breadth-first search on Γ_n. Stops early once `target` is reached.
std::vector<std::uint16_t> gamma_bfs(int n, std::uint64_t source, std::optional<std::uint64_t> target,
                                     std::vector<std::uint32_t>& queue) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint16_t> dist(size, kUnseen);
  queue.resize(size);
  std::size_t head = 0, tail = 0;
  dist[source] = 0;
  queue[tail++] = static_cast<std::uint32_t>(source);
  while (head < tail) {
    const std::uint64_t v = queue[head++];
    if (target && v == *target) break;
    const std::uint16_t next = static_cast<std::uint16_t>(dist[v] + 1);
    if (next == kUnseen) throw Error("Γ_n distance exceeds 16 bits");
    for_each_gamma_neighbor(v, n, [&](std::uint64_t t) {
      if (dist[t] == kUnseen) {
        dist[t] = next;
        queue[tail++] = static_cast<std::uint32_t>(t);
      }
    });
  }
  return dist;
}

}  // namespace

void set_thread_cap(int threads) {
  if (threads < 0) throw Error("thread cap must be >= 0");
  g_thread_cap = threads;
}

int thread_cap() { return g_thread_cap; }

// ---------------------------------------------------------------------------

int DistanceTable::eccentricity() const {
  int e = 0;
  for (int d : dist) e = std::max(e, d);
  return e;
}

DistanceTable bfs(const LabeledMultigraph& graph, std::size_t source) {
  if (source >= graph.vertex_count()) throw Error("bfs source out of range");
  const auto adj = graph.adjacency();
  DistanceTable table{source, std::vector<int>(graph.vertex_count(), -1)};
  std::deque<std::size_t> queue{source};
  table.dist[source] = 0;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (std::size_t k = adj.offsets[v]; k < adj.offsets[v + 1]; ++k) {
      const auto u = adj.targets[k];
      if (table.dist[u] < 0) {
        table.dist[u] = table.dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return table;
}

std::vector<std::uint16_t> gamma_distances(int n, std::uint64_t source, bool big_memory) {
  check_gamma_level(n, big_memory);
  std::vector<std::uint32_t> queue;
  return gamma_bfs(n, source & ((std::uint64_t{1} << n) - 1), std::nullopt, queue);
}

int corner_level(int n) {
  if (n < 1) throw Error("corner_level: n must be >= 1");
  return (n * n + 3 * n + 2) / 2;
}

std::int64_t corner_distance(int n, bool big_memory) {
  const int m = corner_level(n);
  check_gamma_level(m, big_memory);
  const std::uint64_t target = std::uint64_t{1} << (m - 1);
  std::vector<std::uint32_t> queue;
  const auto dist = gamma_bfs(m, 0, target, queue);
  return dist[target];
}

double DiameterResult::ratio() const {
  if (diameter < 0) return std::nan("");
  const double s = std::sqrt(static_cast<double>(n));
  return diameter / (s * std::exp2(std::sqrt(2.0 * n)));
}

DiameterResult diameter_gamma(int n) {
  if (n < 1 || n > 22) throw Error("diameter_gamma: exact mode needs 1 <= n <= 22");
  const std::uint64_t size = std::uint64_t{1} << n;
  DiameterResult result;
  result.n = n;
  std::vector<std::uint32_t> queue;
  const std::uint64_t half = size >> 1;
  {
    const auto d0 = gamma_bfs(n, 0, std::nullopt, queue);
    result.lower = d0[half];
    result.upper = 2 * result.lower;
  }
  // Eccentricity bounding: keep per-vertex bounds lo <= ecc <= hi and
  // sweep from extreme candidates until the diameter bounds meet.
  std::vector<int> lo(size, 0), hi(size, std::numeric_limits<int>::max());
  std::vector<std::uint32_t> candidates(size);
  for (std::uint64_t v = 0; v < size; ++v) candidates[v] = static_cast<std::uint32_t>(v);
  int best = 0;
  bool pick_high = true;
  while (!candidates.empty()) {
    std::uint32_t v = candidates.front();
    for (auto c : candidates) {
      if (pick_high ? (hi[c] > hi[v] || (hi[c] == hi[v] && lo[c] > lo[v])) : lo[c] < lo[v]) v = c;
    }
    pick_high = !pick_high;
    const auto dist = gamma_bfs(n, v, std::nullopt, queue);
    ++result.sweeps;
    int ecc = 0;
    for (auto d : dist) ecc = std::max<int>(ecc, d);
    best = std::max(best, ecc);
    std::size_t keep = 0;
    for (auto w : candidates) {
      const int d = dist[w];
      lo[w] = std::max({lo[w], d, ecc - d});
      hi[w] = std::min(hi[w], ecc + d);
      if (w != v && hi[w] > best && lo[w] != hi[w]) candidates[keep++] = w;
      else best = std::max(best, lo[w] == hi[w] ? lo[w] : best);
    }
    candidates.resize(keep);
  }
  result.diameter = best;
  return result;
}

DiameterResult diameter_interval(int n, bool big_memory) {
  check_gamma_level(n, big_memory);
  DiameterResult result;
  result.n = n;
  result.diameter = -1;
  std::vector<std::uint32_t> queue;
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  const auto dist = gamma_bfs(n, 0, half, queue);
  result.lower = dist[half];
  result.upper = 2 * result.lower;
  result.sweeps = 1;
  return result;
}

int diameter_all_pairs(const LabeledMultigraph& graph) {
  int diameter = 0;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    const auto t = bfs(graph, v);
    for (int d : t.dist) {
      if (d < 0) throw Error("diameter of a disconnected graph");
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

// ---------------------------------------------------------------------------

namespace {

// Visited set over a symmetric integer window [-half, half) that doubles on
// demand.
class BitWindow {
 public:
  BitWindow(std::int64_t half, std::size_t budget_bytes) : half_(half), budget_(budget_bytes) {
    bits_.assign(static_cast<std::size_t>(2 * half_ / 64), 0);
  }

  /// Marks z; returns true if it was not marked before.
  bool insert(std::int64_t z) {
    while (z < -half_ || z >= half_) grow();
    const auto i = static_cast<std::uint64_t>(z + half_);
    auto& word = bits_[i >> 6];
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (word & mask) return false;
    word |= mask;
    return true;
  }

 private:
  void grow() {
    const std::int64_t next = 2 * half_;
    if (static_cast<std::uint64_t>(2 * next / 8) > budget_) {
      throw ExplosionGuard("growth search needs a window wider than 2^" +
                           std::to_string(std::bit_width(static_cast<std::uint64_t>(2 * next)) - 1) +
                           " integers, beyond the memory budget");
    }
    std::vector<std::uint64_t> wider(static_cast<std::size_t>(2 * next / 64), 0);
    const auto offset = static_cast<std::size_t>((next - half_) / 64);
    std::copy(bits_.begin(), bits_.end(), wider.begin() + static_cast<std::ptrdiff_t>(offset));
    bits_.swap(wider);
    half_ = next;
  }

  std::int64_t half_;
  std::size_t budget_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

namespace {

// Appends |B(0, r)| to table.counts for r = 0..R; a budget overrun leaves the
// completed radii in place.
void grow_counts(const OmegaWord& omega, int R, std::size_t budget_bytes, GrowthTable& table) {
  if (R < 0) throw Error("growth radius must be >= 0");
  const OmegaGraph graph(omega);
  table.center = "0";
  table.oracle = GrowthTable::Oracle::Integer;
  BitWindow seen(std::int64_t{1} << 16, budget_bytes);
  seen.insert(0);
  std::uint64_t count = 1;
  std::vector<std::int64_t> frontier{0}, next;
  table.counts.push_back(1);
  for (int r = 1; r <= R; ++r) {
    next.clear();
    for (auto z : frontier) {
      graph.for_each_neighbor(z, [&](std::int64_t t, EdgeLabel) {
        if (seen.insert(t)) next.push_back(t);
      });
    }
    count += next.size();
    frontier.swap(next);
    table.counts.push_back(count);
  }
}

}  // namespace

GrowthTable growth_x_omega(const OmegaWord& omega, int R, std::size_t budget_bytes) {
  GrowthTable table;
  grow_counts(omega, R, budget_bytes, table);
  return table;
}

GrowthTable growth_x_omega_within(const OmegaWord& omega, int R, std::size_t budget_bytes) {
  GrowthTable table;
  try {
    grow_counts(omega, R, budget_bytes, table);
  } catch (const ExplosionGuard&) {
  }
  return table;
}

GrowthTable growth_orbital(const OmegaWord& omega, int R) {
  const auto ball = orbital_ball(omega, R);
  GrowthTable table;
  table.center = omega.str();
  table.oracle = GrowthTable::Oracle::Orbital;
  table.counts.assign(static_cast<std::size_t>(R) + 1, 0);
  for (int d : ball.distance) ++table.counts[static_cast<std::size_t>(d)];
  for (std::size_t r = 1; r < table.counts.size(); ++r) table.counts[r] += table.counts[r - 1];
  return table;
}

long double growth_upper_bound(int r) {
  const long double x = r;
  return 20.0L * std::pow(x, std::log2(x) + 2.0L);
}

GrowthBoundsReport growth_bounds_check(const GrowthTable& table, int max_n) {
  GrowthBoundsReport report;
  for (int r = 2; r <= table.radius(); ++r) {
    const long double count = static_cast<long double>(table.counts[static_cast<std::size_t>(r)]);
    const long double bound = growth_upper_bound(r);
    report.worst_upper_ratio = std::max(report.worst_upper_ratio, count / bound);
    if (count > bound && report.upper_ok) {
      report.upper_ok = false;
      report.first_violation = r;
    }
  }
  for (int n = 1; n <= max_n; ++n) {
    const int radius = 2 * diameter_gamma(n).diameter;
    if (radius > table.radius()) break;
    const auto count = table.counts[static_cast<std::size_t>(radius)];
    const bool ok = count >= (std::uint64_t{1} << n);
    report.lower.push_back({n, radius, count, ok});
    report.lower_ok = report.lower_ok && ok;
  }
  return report;
}

RestrictionBoundReport restriction_bound_check(const OmegaWord& omega, int n, int k) {
  if (n < 0 || k < 1) throw Error("restriction_bound_check: need n >= 0 and k >= 1");
  RestrictionBoundReport report;
  report.ball_size = orbital_ball(omega, n).size();
  std::vector<Bit> prefix;
  for (int i = 1; i <= k; ++i) prefix.push_back(omega.letter(static_cast<std::size_t>(i)));
  const auto set = restriction_set(static_cast<std::size_t>(n), FiniteWord(prefix));
  report.restrictions = set.size();
  report.fused = fused_count(set, kDefaultEqualityDepth);
  const std::size_t scale = std::size_t{1} << k;
  report.holds = report.ball_size <= scale * report.restrictions;
  report.holds_fused = report.ball_size <= scale * report.fused;
  return report;
}

// ---------------------------------------------------------------------------

namespace {

// The induced r-ball at z if all vertices at distance < r are complete.
std::optional<LabeledMultigraph> complete_ball(const WindowGraph& window, const Adjacency& adj, std::int64_t z,
                                               int r) {
  if (!window.contains(z)) return std::nullopt;
  const auto center = window.index(z);
  std::unordered_map<std::size_t, int> dist{{center, 0}};
  std::vector<std::size_t> order{center};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto v = order[head];
    const int d = dist[v];
    if (d == r) continue;
    if (!window.complete[v]) return std::nullopt;
    for (std::size_t k = adj.offsets[v]; k < adj.offsets[v + 1]; ++k) {
      if (dist.emplace(adj.targets[k], d + 1).second) order.push_back(adj.targets[k]);
    }
  }
  return extract_ball(window.graph, adj, center, r);
}

bool closer(std::int64_t a, std::int64_t b) {
  const auto ua = a < 0 ? -a : a, ub = b < 0 ? -b : b;
  return ua != ub ? ua < ub : a < b;
}

}  // namespace

PointedBallCertificate window_ball_certificate(const WindowGraph& window, std::int64_t z, int r) {
  const auto ball = complete_ball(window, window.graph.adjacency(), z, r);
  if (!ball) {
    throw IncompleteBall("the " + std::to_string(r) + "-ball at " + std::to_string(z) + " leaves the window [" +
                         std::to_string(window.lo) + ", " + std::to_string(window.hi) + "]");
  }
  return canonical_certificate(*ball, 0);
}

TypeCensus type_census(const WindowGraph& window, int r, std::size_t keep) {
  TypeCensus census;
  census.r = r;
  const auto adj = window.graph.adjacency();
  for (std::int64_t z = window.lo; z <= window.hi; ++z) {
    const auto ball = complete_ball(window, adj, z, r);
    if (!ball) continue;
    auto& entry = census.types[canonical_certificate(*ball, 0)];
    ++entry.multiplicity;
    entry.representatives.push_back(z);
    ++census.scanned;
  }
  for (auto& [cert, entry] : census.types) {
    std::sort(entry.representatives.begin(), entry.representatives.end(), closer);
    if (entry.representatives.size() > keep) entry.representatives.resize(keep);
  }
  return census;
}

std::optional<int> genericity_radius(const OmegaWord& omega, std::int64_t z1, std::int64_t z2, int cap) {
  if (z1 == z2) throw Error("genericity_radius needs two distinct vertices");
  const OmegaGraph graph(omega);
  for (int r = 0; r <= cap; ++r) {
    if (canonical_certificate(oracle_ball(graph, z1, r), 0) != canonical_certificate(oracle_ball(graph, z2, r), 0)) {
      return r;
    }
  }
  return std::nullopt;
}

HolonomyReport dense_holonomy_R(const OmegaWord& omega, int r) {
  if (!tail_class(omega).mixed()) {
    throw NotDenseHolonomy(omega.str() + " is eventually constant; its single loop vertex is a unique type");
  }
  HolonomyReport report;
  report.r = r;
  const OmegaGraph graph(omega);
  // Census on growing windows until the type set is unchanged over two
  // doublings.
  std::set<PointedBallCertificate> types;
  TypeCensus census;
  int stable = 0;
  for (int k = 5; k <= 20 && stable < 2; ++k) {
    const std::int64_t w = std::int64_t{1} << k;
    census = type_census(window(graph, -w, w), r, 1);
    std::set<PointedBallCertificate> now;
    for (const auto& [cert, entry] : census.types) now.insert(cert);
    stable = (now == types) ? stable + 1 : 0;
    types = std::move(now);
    report.census_half_width = w;
  }
  if (stable < 2) throw Error("dense_holonomy_R: r-type census did not stabilize");
  report.types = types.size();
  std::int64_t extent = 0;
  for (const auto& [cert, entry] : census.types) {
    const auto z = entry.representatives.front();
    report.representatives.push_back(z);
    const auto ball = oracle_ball(graph, z, r + 1);
    for (auto key : ball.keys()) extent = std::max(extent, key < 0 ? -key : key);
  }
  std::sort(report.representatives.begin(), report.representatives.end(), closer);
  // Smallest n with extent < 2^(n-1).
  report.n = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(extent))) + 1;
  report.R = std::int64_t{1} << report.n;

  // Every integer interval [c - R, c + R] lies inside the R-ball at c, so it
  // suffices that each such interval meets every type.
  const std::int64_t span = std::int64_t{1} << (report.n + 2);
  report.checked_lo = -span;
  report.checked_hi = span;
  const std::int64_t lo = -span - report.R, hi = span + report.R;
  std::map<PointedBallCertificate, std::size_t> id;
  for (const auto& c : types) id.emplace(c, id.size());
  std::vector<std::size_t> type_of(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t z = lo; z <= hi; ++z) {
    const auto cert = canonical_certificate(oracle_ball(graph, z, r), 0);
    auto it = id.find(cert);
    if (it == id.end()) return report;  // a type the census missed: not verified
    type_of[static_cast<std::size_t>(z - lo)] = it->second;
  }
  std::vector<std::size_t> count(id.size(), 0);
  std::size_t present = 0;
  auto add = [&](std::int64_t z, int delta) {
    auto& c = count[type_of[static_cast<std::size_t>(z - lo)]];
    if (delta > 0 && c++ == 0) ++present;
    if (delta < 0 && --c == 0) --present;
  };
  for (std::int64_t z = -span - report.R; z <= -span + report.R; ++z) add(z, 1);
  bool ok = present == id.size();
  for (std::int64_t c = -span + 1; c <= span && ok; ++c) {
    add(c - report.R - 1, -1);
    add(c + report.R, 1);
    ok = present == id.size();
  }
  report.verified = ok;
  return report;
}

LocalIsoVerdict local_iso_check(const OmegaWord& omega, const OmegaWord& other, int r, int m) {
  const std::int64_t w = std::int64_t{1} << m;
  const auto first = type_census(window(omega, -w, w), r, 1);
  const auto second = type_census(window(other, -w, w), r, 1);
  LocalIsoVerdict verdict;
  verdict.types_first = first.type_count();
  verdict.types_second = second.type_count();
  for (const auto& [cert, entry] : first.types) {
    if (!second.contains(cert)) {
      verdict.kind = LocalIsoVerdict::Kind::Distinguished;
      verdict.witness = cert;
      verdict.witness_side = 0;
      return verdict;
    }
  }
  for (const auto& [cert, entry] : second.types) {
    if (!first.contains(cert)) {
      verdict.kind = LocalIsoVerdict::Kind::Distinguished;
      verdict.witness = cert;
      verdict.witness_side = 1;
      return verdict;
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------

int ceil_log2(std::size_t n) {
  if (n == 0) throw Error("ceil_log2(0)");
  return static_cast<int>(std::bit_width(n - 1));
}

int contraction_depth(std::size_t n) {
  const int l = ceil_log2(n);
  return l * (l + 1);
}

std::vector<GroupWord> restrictions_at_depth(const GroupWord& g, int depth) {
  std::set<GroupWord> level{g};
  for (int d = 0; d < depth; ++d) {
    std::set<GroupWord> next;
    for (const auto& h : level) {
      next.insert(restrict(h, Bit{0}));
      next.insert(restrict(h, Bit{1}));
    }
    level.swap(next);
  }
  return {level.begin(), level.end()};
}

ContractionReport contraction_check(const GroupWord& g) {
  ContractionReport report;
  report.samples = 1;
  if (g.is_identity()) {
    report.restrictions_checked = 1;
    return report;
  }
  const std::size_t n = g.length();
  for (const auto& h : restrictions_at_depth(g, contraction_depth(n))) {
    ++report.restrictions_checked;
    if (!match_nucleus(h)) {
      ++report.failures;
      if (report.failing_words.size() < 8) report.failing_words.push_back(g.str() + " -> " + h.str());
    }
  }
  const std::size_t m = to_syllables(g).b_syllables();
  for (const auto& h : restrictions_at_depth(g, ceil_log2(n) + 1)) {
    if (to_syllables(h).b_syllables() > m / 2 + 1) ++report.halving_violations;
  }
  return report;
}

ContractionReport contraction_experiment(std::size_t samples, std::size_t max_len, std::uint64_t seed) {
  if (max_len == 0) throw Error("contraction_experiment: max_len must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(1, max_len);
  ContractionReport total;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto g = random_reduced_word(length(rng), rng);
    const auto one = contraction_check(g);
    total.samples += 1;
    total.restrictions_checked += one.restrictions_checked;
    total.failures += one.failures;
    total.halving_violations += one.halving_violations;
    for (const auto& s : one.failing_words) {
      if (total.failing_words.size() < 8) total.failing_words.push_back(s);
    }
  }
  return total;
}

}  // namespace xomega
