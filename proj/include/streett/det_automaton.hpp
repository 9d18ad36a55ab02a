#pragma once

#include <string>
#include <vector>

#include "streett/acceptance.hpp"
#include "streett/automaton.hpp"

namespace streett {

enum class DetKind {
  rabin_transitions,  // DRTA: Rabin pairs over transitions, indexed by node names
  parity_transitions, // DPTA: one priority per transition
  rabin_states,       // DRA baseline: Rabin pairs over states
};

// Deterministic automaton with a total step function. Transition id is
// state * alphabet_size + letter.
struct DetAutomaton {
  DetKind kind = DetKind::rabin_transitions;
  int num_states = 0;
  int sigma = 1;
  int initial = 0;
  int sink = -1; // -1 when every move is live

  std::vector<int> step; // dense, size num_states * sigma

  // rabin_transitions: per transition, sorted pair ids it accepts / rejects.
  std::vector<std::vector<int>> t_acc;
  std::vector<std::vector<int>> t_rej;
  std::vector<std::string> pair_names; // display names, index = pair id

  // parity_transitions
  std::vector<int> priority;
  int max_priority = 0; // 2n(mu+1)+1 of the source

  // rabin_states: pairs as sorted state lists, indexed like pair_names.
  std::vector<RabinPair> state_pairs;

  // Source-automaton parameters (bounds, priority ranges).
  int source_n = 0;
  int source_k = 0;

  int source_mu() const { return source_n < source_k ? source_n : source_k; }
  int transition(int state, int letter) const { return state * sigma + letter; }
  int non_sink_states() const { return num_states - (sink >= 0 ? 1 : 0); }

  void validate() const;
};

} // namespace streett
