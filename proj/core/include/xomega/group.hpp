#pragma once

// The self-similar group G = <a, b> with a = (e, a)σ and b = (b, a), acting
// on binary words.
//
// Conventions used throughout:
//  * A word g = s_1 s_2 ... s_n acts with s_n applied first:
//    g(v) = s_1(s_2(...s_n(v))).
//  * g = (g|_0, g|_1)π means g(x w) = π(x) g|_x(w).
//  * Elements are freely reduced words; semantic equality is only available
//    to a finite depth (equal_on_level).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "xomega/words.hpp"

namespace xomega {

enum class Gen : std::uint8_t { A = 0, Ainv = 1, B = 2, Binv = 3 };

constexpr Gen inverse(Gen g) noexcept { return static_cast<Gen>(static_cast<std::uint8_t>(g) ^ 1u); }
constexpr bool is_a(Gen g) noexcept { return g == Gen::A || g == Gen::Ainv; }
char to_char(Gen g) noexcept;

/// Freely reduced word over {a, a^-1, b, b^-1}; the empty word is e.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(const std::vector<Gen>& letters);

  /// Letters a, A (= a^-1), b, B (= b^-1); "e" or "" is the identity.
  static GroupWord parse(std::string_view text);
  static GroupWord a_power(std::int64_t k);
  static GroupWord b_power(std::int64_t k);

  const std::vector<Gen>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  GroupWord operator*(const GroupWord& rhs) const;
  GroupWord inverse() const;

  std::string str() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Gen> letters_;
};

struct GroupWordHash {
  std::size_t operator()(const GroupWord& w) const noexcept { return w.hash(); }
};

FiniteWord act_finite(const GroupWord& g, const FiniteWord& v);
/// Same action on level-n words stored as n-bit integers (bit i-1 = x_i), n <= 63.
std::uint64_t act_level(const GroupWord& g, std::uint64_t v, int n);
std::uint64_t act_level(Gen s, std::uint64_t v, int n);
OmegaWord act_omega(const GroupWord& g, const OmegaWord& w);
/// a^m(ω), computed as ω + m in Z_2.
OmegaWord act_power_a(std::int64_t m, const OmegaWord& w);

GroupWord restrict(const GroupWord& g, Bit x);
GroupWord restrict(const GroupWord& g, const FiniteWord& v);

/// Root permutation of g: true iff g swaps the first letter.
bool swaps_root(const GroupWord& g);

/// Memoized depth-bounded triviality test for elements of G.
class LevelEquality {
 public:
  /// True iff g acts trivially on {0,1}^depth.
  bool trivial_to_depth(const GroupWord& g, int depth);
  bool equal_on_level(const GroupWord& g, const GroupWord& h, int depth);
  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  struct Known {
    int trivial_depth = 0;     // acts trivially at least this deep
    int nontrivial_depth = -1;  // acts nontrivially at this depth (-1: unknown)
  };
  std::unordered_map<GroupWord, Known, GroupWordHash> memo_;
};

inline constexpr int kDefaultEqualityDepth = 32;

/// g and h act identically on {0,1}^L.
bool equal_on_level(const GroupWord& g, const GroupWord& h, int L);

/// a^{α_0} b^{β_1} a^{α_1} ... b^{β_m} a^{α_m} with nonzero interior exponents.
struct SyllableForm {
  std::vector<std::int64_t> a_exponents;  // size m + 1
  std::vector<std::int64_t> b_exponents;  // size m

  std::size_t b_syllables() const noexcept { return b_exponents.size(); }
  friend bool operator==(const SyllableForm&, const SyllableForm&) = default;
};

SyllableForm to_syllables(const GroupWord& g);

/// Pattern of the set {a^{ε1} b^k a^{ε2}, a^k : k ∈ Z, ε_i ∈ {-1, 0, 1}}.
struct NucleusElement {
  enum class Kind { PowerOfA, Sandwich };
  Kind kind = Kind::PowerOfA;
  int left = 0;   // ε1, Sandwich only
  std::int64_t k = 0;
  int right = 0;  // ε2, Sandwich only

  static NucleusElement power_of_a(std::int64_t k) { return {Kind::PowerOfA, 0, k, 0}; }
  static NucleusElement sandwich(int e1, std::int64_t k, int e2) { return {Kind::Sandwich, e1, k, e2}; }
  friend bool operator==(const NucleusElement&, const NucleusElement&) = default;
};

std::optional<NucleusElement> match_nucleus(const GroupWord& g);

/// Number of syntactically distinct reduced words of the nucleus pattern with
/// length <= n.
std::size_t nucleus_size_up_to(std::size_t n);

/// Calls f on every reduced word of length <= n (including e), in shortlex order.
void for_each_reduced_word(std::size_t n, const std::function<void(const GroupWord&)>& f);

/// The restriction set {g|_prefix : l(g) <= n}, deduplicated as reduced
/// words. Throws ExplosionGuard when more than `budget` words would be
/// enumerated.
std::vector<GroupWord> restriction_set(std::size_t n, const FiniteWord& prefix,
                                       std::size_t budget = 5'000'000);

/// Number of classes after fusing words that agree to the given depth.
std::size_t fused_count(const std::vector<GroupWord>& words, int depth = kDefaultEqualityDepth);

/// Uniformly random reduced word of exactly the given length.
GroupWord random_reduced_word(std::size_t length, std::mt19937_64& rng);

}  // namespace xomega

template <>
struct std::hash<xomega::GroupWord> {
  std::size_t operator()(const xomega::GroupWord& w) const noexcept { return w.hash(); }
};
