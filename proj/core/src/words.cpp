#include "xomega/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "xomega/errors.hpp"

namespace xomega {

FiniteWord::FiniteWord(std::vector<Bit> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw ParseError("finite word letters must be 0 or 1");
  }
}

FiniteWord FiniteWord::parse(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("invalid letter '" + std::string(1, c) + "' in binary word");
    }
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return FiniteWord(std::move(bits));
}

FiniteWord FiniteWord::from_value(std::uint64_t value, std::size_t n) {
  std::vector<Bit> bits(n);
  for (std::size_t i = 0; i < n; ++i) {
    bits[i] = i < 64 ? static_cast<Bit>((value >> i) & 1u) : 0;
  }
  return FiniteWord(std::move(bits));
}

FiniteWord FiniteWord::repeat(Bit b, std::size_t n) {
  return FiniteWord(std::vector<Bit>(n, static_cast<Bit>(b & 1u)));
}

std::uint64_t FiniteWord::value() const {
  if (bits_.size() > 63) throw OverflowError("finite word too long for a 63-bit value");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) v |= std::uint64_t{bits_[i]} << i;
  return v;
}

FiniteWord FiniteWord::concat(const FiniteWord& other) const {
  std::vector<Bit> bits = bits_;
  bits.insert(bits.end(), other.bits_.begin(), other.bits_.end());
  return FiniteWord(std::move(bits));
}

FiniteWord FiniteWord::prefix(std::size_t n) const {
  n = std::min(n, bits_.size());
  return FiniteWord(std::vector<Bit>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n)));
}

std::string FiniteWord::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (Bit b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

// ---------------------------------------------------------------------------

OmegaWord::OmegaWord(FiniteWord preperiod, FiniteWord period)
    : pre_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw ParseError("omega word period must be nonempty");
  canonicalize();
}

void OmegaWord::canonicalize() {
  const auto& p = period_.bits();
  const std::size_t len = p.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < len && ok; ++i) ok = p[i] == p[i % d];
    if (ok) {
      period_ = period_.prefix(d);
      break;
    }
  }
  std::vector<Bit> pre = pre_.bits();
  std::vector<Bit> per = period_.bits();
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
  }
  pre_ = FiniteWord(std::move(pre));
  period_ = FiniteWord(std::move(per));
}

OmegaWord OmegaWord::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') {
    throw ParseError("omega word must have the form PRE(P), got '" + std::string(text) + "'");
  }
  auto pre = FiniteWord::parse(text.substr(0, open));
  auto per = FiniteWord::parse(text.substr(open + 1, text.size() - open - 2));
  if (per.empty()) throw ParseError("omega word period must be nonempty: '" + std::string(text) + "'");
  return OmegaWord(std::move(pre), std::move(per));
}

OmegaWord OmegaWord::constant(Bit b) { return OmegaWord(FiniteWord(), FiniteWord::repeat(b, 1)); }

OmegaWord OmegaWord::from_integer(std::int64_t m, std::size_t shift) {
  std::vector<Bit> pre(shift, 0);
  const auto u = static_cast<std::uint64_t>(m);
  for (std::size_t i = 0; i < 64; ++i) pre.push_back(static_cast<Bit>((u >> i) & 1u));
  return OmegaWord(FiniteWord(std::move(pre)), FiniteWord::repeat(m < 0 ? 1 : 0, 1));
}

Bit OmegaWord::letter(std::size_t i) const {
  if (i == 0) throw Error("omega word letters are 1-indexed");
  --i;
  if (i < pre_.size()) return pre_[i];
  return period_[(i - pre_.size()) % period_.size()];
}

std::string OmegaWord::str() const { return pre_.str() + "(" + period_.str() + ")"; }

std::size_t OmegaWord::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t x) { h = (h ^ x) * 1099511628211ull; };
  for (Bit b : pre_.bits()) mix(b);
  mix(7);
  for (Bit b : period_.bits()) mix(b + 2u);
  return h;
}

// ---------------------------------------------------------------------------

Bit letter(const OmegaWord& w, std::size_t i) { return w.letter(i); }

std::int64_t numeric_prefix(const OmegaWord& w, std::size_t n) {
  if (n > 62) throw OverflowError("numeric_prefix: n = " + std::to_string(n) + " exceeds 62");
  std::int64_t s = 0;
  for (std::size_t i = 1; i <= n; ++i) s |= std::int64_t{w.letter(i)} << (i - 1);
  return s;
}

std::int64_t coefficient_a(const OmegaWord& w, std::size_t n) {
  if (n == 0) throw Error("coefficient_a: n must be >= 1");
  if (n > 62) throw OverflowError("coefficient_a: n = " + std::to_string(n) + " exceeds 62");
  return numeric_prefix(w, n) - (std::int64_t{1} << (n - 1));
}

OmegaWord complement(const OmegaWord& w) {
  auto flip = [](const FiniteWord& f) {
    std::vector<Bit> bits = f.bits();
    for (auto& b : bits) b ^= 1u;
    return FiniteWord(std::move(bits));
  };
  return OmegaWord(flip(w.preperiod()), flip(w.period()));
}

bool is_cofinal(const OmegaWord& u, const OmegaWord& v) {
  const std::size_t start = std::max(u.preperiod().size(), v.preperiod().size()) + 1;
  const std::size_t span = std::lcm(u.period().size(), v.period().size());
  for (std::size_t i = start; i < start + span; ++i) {
    if (u.letter(i) != v.letter(i)) return false;
  }
  return true;
}

bool is_anticofinal(const OmegaWord& u, const OmegaWord& v) { return is_cofinal(u, complement(v)); }

TailClass tail_class(const OmegaWord& w) {
  if (w.period().size() > 1) return TailClass{TailClass::Kind::Mixed, std::nullopt};
  const auto& pre = w.preperiod();
  if (pre.size() > 61) throw OverflowError("tail_class: loop vertex exceeds the 62-bit range");
  std::int64_t loop = 0;
  if (w.period()[0] == 0) {
    loop = -static_cast<std::int64_t>(pre.value());
  } else {
    loop = 1;
    for (std::size_t i = 0; i < pre.size(); ++i) loop += std::int64_t{1 - pre[i]} << i;
  }
  return TailClass{TailClass::Kind::EventuallyConstant, loop};
}

// ---------------------------------------------------------------------------

OmegaWord add(const OmegaWord& u, const OmegaWord& v, Bit carry_in) {
  const std::size_t start = std::max(u.preperiod().size(), v.preperiod().size());
  const std::size_t span = std::lcm(u.period().size(), v.period().size());
  // seen[(phase, carry)] = digit index where that state was first entered.
  std::vector<std::ptrdiff_t> seen(2 * span, -1);
  std::vector<Bit> digits;
  unsigned carry = carry_in & 1u;
  for (std::size_t i = 0;; ++i) {
    if (i >= start) {
      const std::size_t state = 2 * ((i - start) % span) + carry;
      if (seen[state] >= 0) {
        const auto loop_start = static_cast<std::size_t>(seen[state]);
        std::vector<Bit> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(loop_start));
        std::vector<Bit> per(digits.begin() + static_cast<std::ptrdiff_t>(loop_start), digits.end());
        return OmegaWord(FiniteWord(std::move(pre)), FiniteWord(std::move(per)));
      }
      seen[state] = static_cast<std::ptrdiff_t>(i);
    }
    const unsigned s = u.letter(i + 1) + v.letter(i + 1) + carry;
    digits.push_back(static_cast<Bit>(s & 1u));
    carry = s >> 1;
  }
}

OmegaWord negate(const OmegaWord& w) { return add(complement(w), OmegaWord::constant(0), 1); }

OmegaWord add_integer(const OmegaWord& w, std::int64_t m, std::size_t shift) {
  if (m == 0) return w;
  return add(w, OmegaWord::from_integer(m, shift));
}

std::optional<std::int64_t> to_integer(const OmegaWord& w) {
  if (w.period().size() != 1) return std::nullopt;
  const auto& pre = w.preperiod();
  if (pre.size() > 62) throw OverflowError("to_integer: value exceeds the 62-bit range");
  auto value = static_cast<std::int64_t>(pre.value());
  if (w.period()[0] == 1) value -= std::int64_t{1} << pre.size();
  return value;
}

std::optional<std::int64_t> integer_difference(const OmegaWord& u, const OmegaWord& v) {
  // u - v = u + complement(v) + 1.
  return to_integer(add(u, complement(v), 1));
}

std::optional<std::size_t> first_one(const OmegaWord& w) {
  const auto& pre = w.preperiod();
  for (std::size_t i = 0; i < pre.size(); ++i) {
    if (pre[i] == 1) return i;
  }
  const auto& per = w.period();
  for (std::size_t i = 0; i < per.size(); ++i) {
    if (per[i] == 1) return pre.size() + i;
  }
  return std::nullopt;
}

}  // namespace xomega
