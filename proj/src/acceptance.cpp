#include "streett/acceptance.hpp"

#include <algorithm>

namespace streett {

namespace {

bool intersects(const std::vector<int>& sorted_a, const std::vector<int>& sorted_b)
{
  auto a = sorted_a.begin();
  auto b = sorted_b.begin();
  while (a != sorted_a.end() && b != sorted_b.end()) {
    if (*a < *b)
      ++a;
    else if (*b < *a)
      ++b;
    else
      return true;
  }
  return false;
}

bool intersects_states(const std::vector<int>& sorted_states, StateSet set)
{
  for (int q : sorted_states)
    if (state_in(set, q))
      return true;
  return false;
}

} // namespace

bool evaluate_streett(const CycleSummary& cycle, const std::vector<StreettPair>& pairs,
                      PairBasis basis)
{
  if (basis == PairBasis::states && !cycle.has_states)
    throw basis_error("state-based Streett pairs need a state summary");
  if (basis == PairBasis::transitions && !cycle.has_transitions)
    throw basis_error("transition-based Streett pairs need a transition summary");
  for (const auto& p : pairs) {
    if (basis == PairBasis::states) {
      if (!intersects_states(cycle.states, p.g_states) &&
          intersects_states(cycle.states, p.b_states))
        return false;
    } else {
      if (!intersects(cycle.transitions, p.g_transitions) &&
          intersects(cycle.transitions, p.b_transitions))
        return false;
    }
  }
  return true; // vacuous for k = 0
}

bool evaluate_rabin(const std::vector<int>& inf_ids, const std::vector<RabinPair>& pairs)
{
  for (const auto& p : pairs)
    if (intersects(inf_ids, p.accept) && !intersects(inf_ids, p.reject))
      return true;
  return false; // no pair can witness an empty list
}

bool evaluate_rabin(const CycleSummary& cycle, const std::vector<RabinPair>& pairs)
{
  if (!cycle.has_transitions)
    throw basis_error("transition-indexed Rabin pairs need a transition summary");
  return evaluate_rabin(cycle.transitions, pairs);
}

bool evaluate_parity(const CycleSummary& cycle)
{
  if (cycle.priorities.empty())
    throw domain_error("parity evaluation on an empty priority multiset");
  int min = *std::min_element(cycle.priorities.begin(), cycle.priorities.end());
  return min % 2 == 0;
}

} // namespace streett
