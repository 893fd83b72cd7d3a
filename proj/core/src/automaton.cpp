#include "xomega/automaton.hpp"

#include <algorithm>
#include <sstream>

#include "xomega/errors.hpp"

namespace xomega {

Automaton::Automaton() {
  states_.push_back(State{"e", false, {0, 0}});
  by_name_.emplace("e", 0);
}

std::size_t Automaton::add_state(std::string name) {
  if (by_name_.count(name)) throw Error("automaton: duplicate state " + name);
  const auto id = states_.size();
  by_name_.emplace(name, id);
  states_.push_back(State{std::move(name), false, {id, id}});
  return id;
}

std::size_t Automaton::state(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) throw ParseError("automaton: unknown state " + std::string(name));
  return it->second;
}

void Automaton::define(std::string_view name, bool swap, std::string_view section0, std::string_view section1) {
  auto& s = states_.at(state(name));
  s.swap = swap;
  s.section[0] = state(section0);
  s.section[1] = state(section1);
  trivial_memo_.clear();
  nontrivial_memo_.clear();
}

Automaton::Word Automaton::parse(std::string_view text) const {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    bool inv = false;
    if (!token.empty() && token.back() == '\'') {
      inv = true;
      token.pop_back();
    }
    const auto s = state(token);
    if (s != 0) w.push_back(Letter{s, inv});
  }
  return w;
}

Automaton::Word Automaton::inverse(const Word& w) const {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

Automaton::Word Automaton::restrict(const Word& w, unsigned x) const {
  Word sections;
  x &= 1u;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const auto& s = states_[it->state];
    std::size_t next;
    if (!it->inverse) {
      next = s.section[x];
      if (s.swap) x ^= 1u;
    } else {
      // s^-1 at x: find y with s(y) = x; then (s^-1)|_x = (s|_y)^-1.
      const unsigned y = s.swap ? (x ^ 1u) : x;
      next = s.section[y];
      x = y;
    }
    if (next != 0) sections.push_back(Letter{next, it->inverse});
  }
  std::reverse(sections.begin(), sections.end());
  Word reduced;
  for (const auto& l : sections) {
    if (!reduced.empty() && reduced.back().state == l.state && reduced.back().inverse != l.inverse) {
      reduced.pop_back();
    } else {
      reduced.push_back(l);
    }
  }
  return reduced;
}

bool Automaton::swaps_root(const Word& w) const {
  bool swap = false;
  for (const auto& l : w) swap ^= states_[l.state].swap;
  return swap;
}

std::string Automaton::key(const Word& w) const {
  std::string k;
  for (const auto& l : w) {
    k += std::to_string(l.state);
    k.push_back(l.inverse ? '-' : '+');
  }
  return k;
}

bool Automaton::trivial_to_depth(const Word& w, int depth) {
  if (depth <= 0 || w.empty()) return true;
  const auto k = key(w);
  if (auto it = trivial_memo_.find(k); it != trivial_memo_.end() && it->second >= depth) return true;
  if (auto it = nontrivial_memo_.find(k); it != nontrivial_memo_.end() && it->second <= depth) return false;
  bool result = !swaps_root(w);
  if (result) {
    result = trivial_to_depth(restrict(w, 0), depth - 1) && trivial_to_depth(restrict(w, 1), depth - 1);
  }
  if (result) {
    auto& d = trivial_memo_[k];
    d = std::max(d, depth);
  } else {
    auto [it, fresh] = nontrivial_memo_.emplace(k, depth);
    if (!fresh) it->second = std::min(it->second, depth);
  }
  return result;
}

bool Automaton::equal_on_level(const Word& u, const Word& v, int depth) {
  Word w = u;
  const auto inv = inverse(v);
  w.insert(w.end(), inv.begin(), inv.end());
  return trivial_to_depth(w, depth);
}

Automaton combined_automaton() {
  Automaton m;
  for (const char* name : {"a", "b", "a1", "b1", "a2", "b2"}) m.add_state(name);
  m.define("a", true, "e", "a");
  m.define("b", false, "b", "a");
  m.define("a1", true, "e", "a1");
  m.define("b1", true, "b1", "a1");
  m.define("a2", true, "e", "a2");
  m.define("b2", true, "a1", "b2");
  return m;
}

namespace {

bool check(Automaton& m, int L) {
  const auto b = m.parse("b");
  return m.equal_on_level(b, m.parse("a b1"), L) && m.equal_on_level(b, m.parse("b2 a'"), L) &&
         m.equal_on_level(m.parse("a"), m.parse("a1"), L) && m.equal_on_level(m.parse("a"), m.parse("a2"), L);
}

}  // namespace

bool verify_automata_equivalence(int L) {
  auto m = combined_automaton();
  return check(m, L);
}

bool verify_automata_equivalence_perturbed(int L) {
  auto m = combined_automaton();
  m.define("b2", true, "b2", "a1");
  return check(m, L);
}

}  // namespace xomega
