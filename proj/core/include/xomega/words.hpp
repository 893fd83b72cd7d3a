#pragma once

// Binary words: finite words, eventually periodic infinite words and the
// 2-adic arithmetic on them.
//
// Letters are 1-indexed in the mathematical sense (x_1 is the first letter)
// but stored 0-indexed. A word x_1 x_2 ... is read as the 2-adic integer
// x_1 + 2 x_2 + 4 x_3 + ... (least significant bit first).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xomega {

using Bit = std::uint8_t;

class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(std::vector<Bit> bits);

  /// Parses a string over {0,1}; the empty string is the empty word.
  static FiniteWord parse(std::string_view text);
  /// The n-letter word whose numeric value is `value` mod 2^n.
  static FiniteWord from_value(std::uint64_t value, std::size_t n);
  static FiniteWord repeat(Bit b, std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  /// 0-indexed access: at(0) is x_1.
  Bit at(std::size_t i) const { return bits_.at(i); }
  Bit operator[](std::size_t i) const noexcept { return bits_[i]; }
  const std::vector<Bit>& bits() const noexcept { return bits_; }

  /// Σ x_i 2^(i-1); requires size() <= 63.
  std::uint64_t value() const;

  FiniteWord concat(const FiniteWord& other) const;
  FiniteWord prefix(std::size_t n) const;
  void push_back(Bit b) { bits_.push_back(b & 1u); }

  std::string str() const;

  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;
  friend auto operator<=>(const FiniteWord&, const FiniteWord&) = default;

 private:
  std::vector<Bit> bits_;
};

/// ω = preperiod · period^∞, always kept in canonical form (primitive period,
/// minimal preperiod) so that == is equality of the infinite sequences.
class OmegaWord {
 public:
  OmegaWord(FiniteWord preperiod, FiniteWord period);

  /// Parses the `PRE(P)` grammar, e.g. "(0)", "(10)", "110(0)".
  static OmegaWord parse(std::string_view text);
  static OmegaWord constant(Bit b);
  /// The 2-adic integer m·2^shift.
  static OmegaWord from_integer(std::int64_t m, std::size_t shift = 0);

  const FiniteWord& preperiod() const noexcept { return pre_; }
  const FiniteWord& period() const noexcept { return period_; }

  /// x_i for i >= 1.
  Bit letter(std::size_t i) const;

  std::string str() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const OmegaWord&, const OmegaWord&) = default;
  friend auto operator<=>(const OmegaWord&, const OmegaWord&) = default;

 private:
  void canonicalize();

  FiniteWord pre_;
  FiniteWord period_;
};

struct OmegaWordHash {
  std::size_t operator()(const OmegaWord& w) const noexcept { return w.hash(); }
};

struct TailClass {
  enum class Kind { EventuallyConstant, Mixed };
  Kind kind = Kind::Mixed;
  /// The loop vertex of X_ω; set iff kind == EventuallyConstant.
  std::optional<std::int64_t> loop_vertex;

  bool mixed() const noexcept { return kind == Kind::Mixed; }
};

/// x_i of ω, i >= 1.
Bit letter(const OmegaWord& w, std::size_t i);

/// a_n^ω = Σ_{i<=n} x_i 2^(i-1) - 2^(n-1), for 1 <= n <= 62.
std::int64_t coefficient_a(const OmegaWord& w, std::size_t n);

/// Σ_{i<=n} x_i 2^(i-1), for 0 <= n <= 62.
std::int64_t numeric_prefix(const OmegaWord& w, std::size_t n);

OmegaWord complement(const OmegaWord& w);
bool is_cofinal(const OmegaWord& u, const OmegaWord& v);
bool is_anticofinal(const OmegaWord& u, const OmegaWord& v);
TailClass tail_class(const OmegaWord& w);

// 2-adic arithmetic.

/// u + v + carry_in in Z_2.
OmegaWord add(const OmegaWord& u, const OmegaWord& v, Bit carry_in = 0);
/// -w in Z_2.
OmegaWord negate(const OmegaWord& w);
/// w + m·2^shift in Z_2.
OmegaWord add_integer(const OmegaWord& w, std::int64_t m, std::size_t shift = 0);
/// The integer m with u = v + m, if u - v is an ordinary integer that fits
/// in 62 bits; nullopt if u and v are not cofinal.
std::optional<std::int64_t> integer_difference(const OmegaWord& u, const OmegaWord& v);
/// The value of w as an ordinary integer, if it has a constant tail and fits.
std::optional<std::int64_t> to_integer(const OmegaWord& w);
/// 0-indexed position of the first 1 letter; nullopt iff w = 0^∞.
std::optional<std::size_t> first_one(const OmegaWord& w);

}  // namespace xomega

template <>
struct std::hash<xomega::OmegaWord> {
  std::size_t operator()(const xomega::OmegaWord& w) const noexcept { return w.hash(); }
};
