#pragma once

#include <vector>

#include "streett/automaton.hpp"

namespace streett {

// Rabin pair <A,R> over an arbitrary id space (deterministic-automaton
// transitions or states). Members are sorted.
struct RabinPair {
  std::vector<int> accept;
  std::vector<int> reject;
};

// Streett condition on a cycle: for all i, Inf cap G_i != {} or Inf cap B_i = {}.
// The summary must carry the component matching the pair basis.
bool evaluate_streett(const CycleSummary& cycle, const std::vector<StreettPair>& pairs,
                      PairBasis basis);

// Rabin condition: some pair has Inf cap A != {} and Inf cap R = {}.
// inf_ids are the cycle's visited ids in the pairs' id space, sorted.
bool evaluate_rabin(const std::vector<int>& inf_ids, const std::vector<RabinPair>& pairs);
bool evaluate_rabin(const CycleSummary& cycle, const std::vector<RabinPair>& pairs);

// Parity (min even) on the priorities visited by the cycle.
bool evaluate_parity(const CycleSummary& cycle);

} // namespace streett
