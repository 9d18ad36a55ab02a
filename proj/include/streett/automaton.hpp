#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "streett/bits.hpp"
#include "streett/errors.hpp"

namespace streett {

// Letters are dense indices 0..size-1; display names are optional.
struct Alphabet {
  int size = 1;
  std::vector<std::string> names; // empty, or one unique name per letter

  bool operator==(const Alphabet&) const = default;
};

struct Transition {
  int src = 0;
  int letter = 0;
  int dst = 0;

  auto operator<=>(const Transition&) const = default;
};

enum class PairBasis { states, transitions };

// One Streett pair <G,B>. Exactly one representation is populated,
// according to the automaton's basis.
struct StreettPair {
  StateSet g_states = 0;
  StateSet b_states = 0;
  std::vector<int> g_transitions; // sorted ids into StreettNSA::transitions
  std::vector<int> b_transitions;

  bool operator==(const StreettPair&) const = default;
};

// Nondeterministic Streett automaton over dense letters.
struct StreettNSA {
  int n = 1;
  Alphabet alphabet;
  StateSet initial = 0;
  std::vector<Transition> transitions; // sorted, duplicate-free
  PairBasis basis = PairBasis::states;
  std::vector<StreettPair> pairs;

  bool operator==(const StreettNSA&) const = default;

  int k() const { return static_cast<int>(pairs.size()); }
  int mu() const { return n < k() ? n : k(); }

  // Throws semantic_error if any structural invariant is broken.
  void validate() const;

  int transition_id(const Transition& t) const;

  // Per-transition pair-membership masks (bit i-1 = pair i), transition basis.
  IndexSet g_mask(int transition_id) const;
  IndexSet b_mask(int transition_id) const;

  // delta(q, letter) for every q in from.
  StateSet successors(StateSet from, int letter) const;
};

// Ultimately periodic word u.v^omega.
struct Lasso {
  std::vector<int> prefix;
  std::vector<int> cycle; // nonempty

  bool operator==(const Lasso&) const = default;
  std::string to_string() const;
};

// What a run's eventual loop visits. Ids are context-dependent:
// NSA states / NSA transition ids for the oracle, deterministic-automaton
// states / transition ids for determinized automata.
struct CycleSummary {
  bool has_states = false;
  std::vector<int> states; // sorted
  bool has_transitions = false;
  std::vector<int> transitions; // sorted
  std::vector<int> priorities;  // multiset, parity only
};

} // namespace streett
