#include "xomega/group.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "xomega/errors.hpp"

namespace xomega {

char to_char(Gen g) noexcept {
  switch (g) {
    case Gen::A: return 'a';
    case Gen::Ainv: return 'A';
    case Gen::B: return 'b';
    case Gen::Binv: return 'B';
  }
  return '?';
}

namespace {

void push_reduced(std::vector<Gen>& out, Gen g) {
  if (!out.empty() && out.back() == inverse(g)) {
    out.pop_back();
  } else {
    out.push_back(g);
  }
}

struct LetterStep {
  bool swap;
  std::optional<Gen> section[2];
};

// s = (s|_0, s|_1)π for the four letters.
constexpr LetterStep step_of(Gen g) {
  switch (g) {
    case Gen::A: return {true, {std::nullopt, Gen::A}};
    case Gen::Ainv: return {true, {Gen::Ainv, std::nullopt}};
    case Gen::B: return {false, {Gen::B, Gen::A}};
    case Gen::Binv: return {false, {Gen::Binv, Gen::Ainv}};
  }
  return {false, {std::nullopt, std::nullopt}};
}

// Applies one letter in place to bits[pos..].
void apply_letter(Gen g, std::vector<Bit>& bits, std::size_t pos) {
  for (std::size_t i = pos; i < bits.size(); ++i) {
    switch (g) {
      case Gen::A:
        if (bits[i] == 0) { bits[i] = 1; return; }
        bits[i] = 0;
        break;
      case Gen::Ainv:
        if (bits[i] == 1) { bits[i] = 0; return; }
        bits[i] = 1;
        break;
      case Gen::B:
        if (bits[i] == 1) g = Gen::A;
        break;
      case Gen::Binv:
        if (bits[i] == 1) g = Gen::Ainv;
        break;
    }
  }
}

}  // namespace

GroupWord::GroupWord(const std::vector<Gen>& letters) {
  letters_.reserve(letters.size());
  for (auto g : letters) push_reduced(letters_, g);
}

GroupWord GroupWord::parse(std::string_view text) {
  std::vector<Gen> letters;
  if (text == "e") return GroupWord();
  for (char c : text) {
    switch (c) {
      case 'a': letters.push_back(Gen::A); break;
      case 'A': letters.push_back(Gen::Ainv); break;
      case 'b': letters.push_back(Gen::B); break;
      case 'B': letters.push_back(Gen::Binv); break;
      case ' ': break;
      default: throw ParseError("group word: unexpected character '" + std::string(1, c) + "'");
    }
  }
  return GroupWord(letters);
}

GroupWord GroupWord::a_power(std::int64_t k) {
  GroupWord w;
  w.letters_.assign(static_cast<std::size_t>(k < 0 ? -k : k), k < 0 ? Gen::Ainv : Gen::A);
  return w;
}

GroupWord GroupWord::b_power(std::int64_t k) {
  GroupWord w;
  w.letters_.assign(static_cast<std::size_t>(k < 0 ? -k : k), k < 0 ? Gen::Binv : Gen::B);
  return w;
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
  GroupWord out = *this;
  for (auto g : rhs.letters_) push_reduced(out.letters_, g);
  return out;
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(xomega::inverse(*it));
  return out;
}

std::string GroupWord::str() const {
  if (letters_.empty()) return "e";
  std::string s;
  s.reserve(letters_.size());
  for (auto g : letters_) s.push_back(to_char(g));
  return s;
}

std::size_t GroupWord::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto g : letters_) {
    h ^= static_cast<std::uint64_t>(g) + 1;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------

FiniteWord act_finite(const GroupWord& g, const FiniteWord& v) {
  std::vector<Bit> bits = v.bits();
  const auto& letters = g.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) apply_letter(*it, bits, 0);
  return FiniteWord(std::move(bits));
}

std::uint64_t act_level(Gen s, std::uint64_t v, int n) {
  if (n < 1 || n > 63) throw OverflowError("act_level: n must lie in [1, 63]");
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  v &= mask;
  switch (s) {
    case Gen::A: return (v + 1) & mask;
    case Gen::Ainv: return (v - 1) & mask;
    case Gen::B:
    case Gen::Binv: {
      if (v == 0) return 0;
      const std::uint64_t step = std::uint64_t{1} << (std::countr_zero(v) + 1);
      return (s == Gen::B ? v + step : v - step) & mask;
    }
  }
  return v;
}

std::uint64_t act_level(const GroupWord& g, std::uint64_t v, int n) {
  const auto& letters = g.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = act_level(*it, v, n);
  return v;
}

OmegaWord act_omega(const GroupWord& g, const OmegaWord& w) {
  OmegaWord cur = w;
  const auto& letters = g.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    switch (*it) {
      case Gen::A: cur = add_integer(cur, 1); break;
      case Gen::Ainv: cur = add_integer(cur, -1); break;
      case Gen::B:
      case Gen::Binv: {
        // b(0^p 1 u) = 0^p 1 a(u): add ±2^(p+1).
        const auto p = first_one(cur);
        if (p) cur = add_integer(cur, *it == Gen::B ? 1 : -1, *p + 1);
        break;
      }
    }
  }
  return cur;
}

OmegaWord act_power_a(std::int64_t m, const OmegaWord& w) { return add_integer(w, m); }

GroupWord restrict(const GroupWord& g, Bit x) {
  const auto& letters = g.letters();
  std::vector<Gen> sections;
  sections.reserve(letters.size());
  x &= 1u;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const auto step = step_of(*it);
    if (step.section[x]) sections.push_back(*step.section[x]);
    if (step.swap) x ^= 1u;
  }
  std::reverse(sections.begin(), sections.end());
  return GroupWord(sections);
}

GroupWord restrict(const GroupWord& g, const FiniteWord& v) {
  GroupWord cur = g;
  // g|_{xu} = (g|_x)|_u.
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cur.is_identity()) break;
    cur = restrict(cur, v[i]);
  }
  return cur;
}

bool swaps_root(const GroupWord& g) {
  std::size_t count = 0;
  for (auto s : g.letters()) count += is_a(s) ? 1 : 0;
  return (count & 1u) != 0;
}

bool LevelEquality::trivial_to_depth(const GroupWord& g, int depth) {
  if (depth <= 0 || g.is_identity()) return true;
  auto& known = memo_[g];
  if (known.trivial_depth >= depth) return true;
  if (known.nontrivial_depth >= 0 && known.nontrivial_depth <= depth) return false;
  bool result = !swaps_root(g);
  if (result) {
    const GroupWord left = restrict(g, Bit{0});
    const GroupWord right = restrict(g, Bit{1});
    result = trivial_to_depth(left, depth - 1) && trivial_to_depth(right, depth - 1);
  }
  // memo_ may have rehashed during the recursion.
  auto& entry = memo_[g];
  if (result) {
    entry.trivial_depth = std::max(entry.trivial_depth, depth);
  } else if (entry.nontrivial_depth < 0 || depth < entry.nontrivial_depth) {
    entry.nontrivial_depth = depth;
  }
  return result;
}

bool LevelEquality::equal_on_level(const GroupWord& g, const GroupWord& h, int depth) {
  return trivial_to_depth(g * h.inverse(), depth);
}

bool equal_on_level(const GroupWord& g, const GroupWord& h, int L) {
  LevelEquality eq;
  return eq.equal_on_level(g, h, L);
}

// ---------------------------------------------------------------------------

SyllableForm to_syllables(const GroupWord& g) {
  SyllableForm form;
  form.a_exponents.push_back(0);
  bool in_b = false;
  for (auto s : g.letters()) {
    const std::int64_t sign = (s == Gen::A || s == Gen::B) ? 1 : -1;
    if (is_a(s)) {
      if (in_b) {
        form.a_exponents.push_back(0);
        in_b = false;
      }
      form.a_exponents.back() += sign;
    } else {
      if (!in_b) {
        form.b_exponents.push_back(0);
        in_b = true;
      }
      form.b_exponents.back() += sign;
    }
  }
  if (in_b) form.a_exponents.push_back(0);
  return form;
}

std::optional<NucleusElement> match_nucleus(const GroupWord& g) {
  const auto form = to_syllables(g);
  if (form.b_syllables() == 0) return NucleusElement::power_of_a(form.a_exponents[0]);
  if (form.b_syllables() == 1) {
    const auto e1 = form.a_exponents[0];
    const auto e2 = form.a_exponents[1];
    if (e1 >= -1 && e1 <= 1 && e2 >= -1 && e2 <= 1) {
      return NucleusElement::sandwich(static_cast<int>(e1), form.b_exponents[0], static_cast<int>(e2));
    }
  }
  return std::nullopt;
}

std::size_t nucleus_size_up_to(std::size_t n) {
  const auto len = static_cast<std::int64_t>(n);
  std::size_t count = static_cast<std::size_t>(2 * len + 1);
  for (int e1 = -1; e1 <= 1; ++e1) {
    for (int e2 = -1; e2 <= 1; ++e2) {
      const std::int64_t room = len - std::abs(e1) - std::abs(e2);
      if (room > 0) count += static_cast<std::size_t>(2 * room);
    }
  }
  return count;
}

void for_each_reduced_word(std::size_t n, const std::function<void(const GroupWord&)>& f) {
  for (std::size_t len = 0; len <= n; ++len) {
    std::vector<Gen> word(len);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == len) {
        f(GroupWord(word));
        return;
      }
      for (std::uint8_t c = 0; c < 4; ++c) {
        const Gen g = static_cast<Gen>(c);
        if (i > 0 && word[i - 1] == inverse(g)) continue;
        word[i] = g;
        rec(i + 1);
      }
    };
    rec(0);
  }
}

std::vector<GroupWord> restriction_set(std::size_t n, const FiniteWord& prefix, std::size_t budget) {
  // Number of reduced words of length <= n: 1 + 4(3^n - 1)/2.
  std::size_t total = 1;
  std::size_t layer = 4;
  for (std::size_t k = 1; k <= n; ++k) {
    total += layer;
    if (total > budget) {
      throw ExplosionGuard("restriction_set: " + std::to_string(n) + " letters exceed the budget of " +
                           std::to_string(budget) + " words");
    }
    layer *= 3;
  }
  std::set<GroupWord> out;
  for_each_reduced_word(n, [&](const GroupWord& g) { out.insert(restrict(g, prefix)); });
  return {out.begin(), out.end()};
}

std::size_t fused_count(const std::vector<GroupWord>& words, int depth) {
  LevelEquality eq;
  std::vector<const GroupWord*> reps;
  for (const auto& w : words) {
    bool found = false;
    for (const auto* r : reps) {
      if (eq.equal_on_level(w, *r, depth)) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(&w);
  }
  return reps.size();
}

GroupWord random_reduced_word(std::size_t length, std::mt19937_64& rng) {
  std::vector<Gen> letters;
  letters.reserve(length);
  std::uniform_int_distribution<int> first(0, 3);
  std::uniform_int_distribution<int> next(0, 2);
  for (std::size_t i = 0; i < length; ++i) {
    if (i == 0) {
      letters.push_back(static_cast<Gen>(first(rng)));
      continue;
    }
    // Choose among the three letters other than the inverse of the last one.
    const auto forbidden = static_cast<int>(inverse(letters.back()));
    int c = next(rng);
    if (c >= forbidden) ++c;
    letters.push_back(static_cast<Gen>(c));
  }
  return GroupWord(letters);
}

}  // namespace xomega
