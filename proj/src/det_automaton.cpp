#include "streett/det_automaton.hpp"

#include <algorithm>

namespace streett {

void DetAutomaton::validate() const
{
  if (num_states < 1 || sigma < 1)
    throw semantic_error("deterministic automaton needs at least one state and letter");
  if (initial < 0 || initial >= num_states)
    throw semantic_error("initial state out of range");
  if (sink >= num_states)
    throw semantic_error("sink state out of range");
  size_t nt = static_cast<size_t>(num_states) * sigma;
  if (step.size() != nt)
    throw semantic_error("step table is not total");
  for (int dst : step)
    if (dst < 0 || dst >= num_states)
      throw semantic_error("step target out of range");
  switch (kind) {
  case DetKind::rabin_transitions: {
    if (t_acc.size() != nt || t_rej.size() != nt)
      throw semantic_error("signature tables do not cover every transition");
    int pairs = static_cast<int>(pair_names.size());
    std::vector<char> used(pair_names.size(), 0);
    for (const auto* table : {&t_acc, &t_rej})
      for (const auto& ids : *table)
        for (int id : ids) {
          if (id < 0 || id >= pairs)
            throw semantic_error("transition references an unknown Rabin pair");
          used[id] = 1;
        }
    if (std::find(used.begin(), used.end(), 0) != used.end())
      throw semantic_error("Rabin pair indexed by a name that occurs in no signature");
    break;
  }
  case DetKind::parity_transitions: {
    if (priority.size() != nt)
      throw semantic_error("priority table does not cover every transition");
    int lo = source_n > 0 ? 2 : 0; // foreign automata may use priorities 0 and 1
    for (int p : priority)
      if (p < lo || p > max_priority)
        throw semantic_error("priority " + std::to_string(p) + " outside {"
                             + std::to_string(lo) + ",...,"
                             + std::to_string(max_priority) + "}");
    break;
  }
  case DetKind::rabin_states: {
    if (state_pairs.size() != pair_names.size())
      throw semantic_error("state pair and name tables disagree");
    for (const auto& p : state_pairs)
      for (const auto* side : {&p.accept, &p.reject})
        for (int s : *side)
          if (s < 0 || s >= num_states)
            throw semantic_error("Rabin pair references an unknown state");
    break;
  }
  }
}

} // namespace streett
