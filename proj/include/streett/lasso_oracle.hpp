#pragma once

#include <vector>

#include "streett/automaton.hpp"
#include "streett/det_automaton.hpp"

namespace streett {

// Unrolling of a lasso against an NSA: one vertex per (state, word phase),
// edges tagged with the originating NSA transition id. Phases 0..|u|-1 read
// the prefix, the rest cycle through v.
struct ProductGraph {
  struct Edge {
    int to = 0;
    int transition = 0;
  };

  int vertices = 0;
  std::vector<std::vector<Edge>> out;
  std::vector<int> state_of;    // NSA state per vertex
  std::vector<char> reachable;  // from (Q0, phase 0)
};

ProductGraph build_product(const StreettNSA& nsa, const Lasso& lasso);

// True iff the reachable part contains a cycle whose visited states (or
// transitions, per basis) satisfy every Streett pair. Recursive
// strongly-connected decomposition: a component whose bad pairs block it is
// retried with the offending B members deleted.
bool streett_good_cycle_exists(const ProductGraph& graph, const std::vector<StreettPair>& pairs,
                               PairBasis basis);

// Ground truth: does the NSA accept u.v^omega?
bool nsa_accepts(const StreettNSA& nsa, const Lasso& lasso);

// Runs the deterministic automaton on the lasso, detects the final loop by
// repetition of the state at cycle phase 0, and evaluates the acceptance
// condition on that loop.
bool det_accepts(const DetAutomaton& aut, const Lasso& lasso);

} // namespace streett
