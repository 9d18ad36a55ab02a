#include "streett/automaton.hpp"

#include <algorithm>
#include <sstream>

namespace streett {

void StreettNSA::validate() const
{
  if (n < 1 || n > kMaxStates)
    throw semantic_error("state count out of range: " + std::to_string(n));
  if (alphabet.size < 1)
    throw semantic_error("alphabet must have at least one letter");
  if (!alphabet.names.empty()) {
    if (static_cast<int>(alphabet.names.size()) != alphabet.size)
      throw semantic_error("letter name count does not match alphabet size");
    auto sorted = alphabet.names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw semantic_error("duplicate letter name");
  }
  if (initial == 0)
    throw semantic_error("initial state set is empty");
  if (initial & ~full_state_set(n))
    throw semantic_error("initial state out of range");
  if (k() > kMaxPairs)
    throw semantic_error("pair count out of range: " + std::to_string(k()));
  if (!std::is_sorted(transitions.begin(), transitions.end()))
    throw semantic_error("transition list not sorted");
  if (std::adjacent_find(transitions.begin(), transitions.end()) != transitions.end())
    throw semantic_error("duplicate transition");
  for (const auto& t : transitions) {
    if (t.src < 0 || t.src >= n || t.dst < 0 || t.dst >= n)
      throw semantic_error("transition references an unknown state");
    if (t.letter < 0 || t.letter >= alphabet.size)
      throw semantic_error("transition references an unknown letter");
  }
  StateSet all = full_state_set(n);
  for (const auto& p : pairs) {
    if (basis == PairBasis::states) {
      if (!p.g_transitions.empty() || !p.b_transitions.empty())
        throw semantic_error("state-based pair carries transition members");
      if ((p.g_states | p.b_states) & ~all)
        throw semantic_error("pair member state out of range");
    } else {
      if (p.g_states != 0 || p.b_states != 0)
        throw semantic_error("transition-based pair carries state members");
      for (const auto& ids : {p.g_transitions, p.b_transitions}) {
        if (!std::is_sorted(ids.begin(), ids.end()))
          throw semantic_error("pair transition list not sorted");
        for (int id : ids)
          if (id < 0 || id >= static_cast<int>(transitions.size()))
            throw semantic_error("pair references an unknown transition");
      }
    }
  }
}

int StreettNSA::transition_id(const Transition& t) const
{
  auto it = std::lower_bound(transitions.begin(), transitions.end(), t);
  if (it == transitions.end() || !(*it == t))
    return -1;
  return static_cast<int>(it - transitions.begin());
}

IndexSet StreettNSA::g_mask(int transition_id) const
{
  IndexSet m = 0;
  for (int i = 0; i < k(); ++i)
    if (std::binary_search(pairs[i].g_transitions.begin(), pairs[i].g_transitions.end(),
                           transition_id))
      m |= index_bit(i + 1);
  return m;
}

IndexSet StreettNSA::b_mask(int transition_id) const
{
  IndexSet m = 0;
  for (int i = 0; i < k(); ++i)
    if (std::binary_search(pairs[i].b_transitions.begin(), pairs[i].b_transitions.end(),
                           transition_id))
      m |= index_bit(i + 1);
  return m;
}

StateSet StreettNSA::successors(StateSet from, int letter) const
{
  StateSet out = 0;
  for (const auto& t : transitions)
    if (t.letter == letter && state_in(from, t.src))
      out |= state_bit(t.dst);
  return out;
}

std::string Lasso::to_string() const
{
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < prefix.size(); ++i)
    os << (i ? " " : "") << prefix[i];
  os << " ; ";
  for (size_t i = 0; i < cycle.size(); ++i)
    os << (i ? " " : "") << cycle[i];
  os << ')';
  return os.str();
}

} // namespace streett
