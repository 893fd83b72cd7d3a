#pragma once

// Finite invertible binary automata and depth-bounded equality of words in
// their states. Used to check that G coincides with the group generated by
// the alternative automaton with states a1 = (e, a1)σ, b1 = (b1, a1)σ,
// a2 = (e, a2)σ, b2 = (a1, b2)σ.

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace xomega {

class Automaton {
 public:
  struct State {
    std::string name;
    bool swap = false;
    std::size_t section[2] = {0, 0};
  };

  /// State 0 is always the identity "e".
  Automaton();

  /// Declares a state; sections are set with define().
  std::size_t add_state(std::string name);
  void define(std::string_view name, bool swap, std::string_view section0, std::string_view section1);

  std::size_t state(std::string_view name) const;
  const State& at(std::size_t i) const { return states_.at(i); }
  std::size_t size() const noexcept { return states_.size(); }

  /// Letter: state index and inversion flag.
  struct Letter {
    std::size_t state;
    bool inverse;
    friend bool operator==(const Letter&, const Letter&) = default;
  };
  using Word = std::vector<Letter>;

  /// Space separated state names, a trailing ' marks an inverse: "b1 a'".
  Word parse(std::string_view text) const;
  Word inverse(const Word& w) const;

  /// Section of a word at one letter, with identity letters dropped and free
  /// cancellation applied. Words act right to left like GroupWord.
  Word restrict(const Word& w, unsigned x) const;
  bool swaps_root(const Word& w) const;

  bool trivial_to_depth(const Word& w, int depth);
  bool equal_on_level(const Word& u, const Word& v, int depth);

 private:
  std::string key(const Word& w) const;

  std::vector<State> states_;
  std::unordered_map<std::string, std::size_t> by_name_;
  std::unordered_map<std::string, int> trivial_memo_;
  std::unordered_map<std::string, int> nontrivial_memo_;
};

/// a = (e, a)σ, b = (b, a) together with the alternative generators.
Automaton combined_automaton();

/// b acts like b1 followed by a, and like a^-1 followed by b2, on
/// {0,1}^L. In the right-to-left word convention these are the words
/// "a b1" and "b2 a'".
bool verify_automata_equivalence(int L);

/// The same check against an automaton whose b2 has its sections swapped;
/// expected to fail.
bool verify_automata_equivalence_perturbed(int L);

}  // namespace xomega
