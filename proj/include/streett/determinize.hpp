#pragma once

#include <memory>
#include <string>
#include <vector>

#include "streett/automaton.hpp"
#include "streett/det_automaton.hpp"
#include "streett/index_calculus.hpp"
#include "streett/safra_tree.hpp"

namespace streett {

// Per-transition event record of the DRTA construction. Names are the
// source tree's names at transformation start; one name may occur on both
// sides (a node can turn accepting and then be renamed in the same step).
struct RabinSignature {
  std::vector<Name> acc; // sorted, unique
  std::vector<Name> rej; // sorted, unique

  bool operator==(const RabinSignature&) const = default;
  std::string to_string() const;
};

// Parity event: empty, or (st, p) for the minimal-source-position node that
// turned accepting or rejecting.
struct ParitySignature {
  bool has_event = false;
  bool rejecting = false; // st; acc otherwise
  int position = 0;       // 1-based source LIR position

  bool operator==(const ParitySignature&) const = default;
  std::string to_string() const;
};

// (acc,i) -> 2i; (rej,i) -> 2i-1 for i >= 2; empty or (rej,1) -> 2n(mu+1)+1.
int priority_of(const ParitySignature& sig, int n, int mu);

struct HSuccessorResult {
  SafraTree tree; // canonicalized; sink tree on a dead move
  RabinSignature sig;
};

struct LirSuccessorResult {
  SafraTree tree;
  ParitySignature sig;
};

// Observer for the six construction steps (CLI --trace).
class TraceSink {
public:
  virtual ~TraceSink() = default;
  virtual void on_step(int step_no, const std::string& what, const SafraTree& tree,
                       TreeMode mode) = 0;
};

// Pairs as the tree construction sees them. Pair j is only ever watched by a
// node that dropped index j, and Cover-pruning never drops an index whose G
// is empty, so empty-G pairs (pure B-avoidance obligations) are merged into
// one slot whose G holds a virtual element outside the real state space.
// That keeps every obligation watchable; the oracle keeps the raw pairs.
struct EffectivePairs {
  int k_eff = 0;
  bool has_virtual = false;      // a merged empty-G pair exists
  std::vector<StateSet> g;       // 1-based; g[k_eff] may contain the virtual bit
  std::vector<StateSet> b;
};

EffectivePairs effective_pairs(const StreettNSA& nsa);
GFamily effective_family(const StreettNSA& nsa);

// Shared context of the three constructions over one state-based NSA.
class Determinizer {
public:
  // Throws basis_error on transition-based pairs (convert first).
  explicit Determinizer(StreettNSA nsa);

  const StreettNSA& nsa() const { return nsa_; }
  const IndexCalculus& calc() const { return calc_; }
  int n() const { return nsa_.n; }
  int k() const { return nsa_.k(); }
  int mu() const { return nsa_.mu(); }
  int k_eff() const { return pairs_.k_eff; }
  // spine-length budget of the effective construction; min(n,k) unless the
  // virtual slot is live
  int mu_eff() const
  {
    int cap = n() + (pairs_.has_virtual ? 1 : 0);
    return cap < pairs_.k_eff ? cap : pairs_.k_eff;
  }

  // The merged empty-G obligation is unsatisfiable when its B covers every
  // state; the language is empty and the builders emit a sink-only automaton.
  bool always_empty() const { return always_empty_; }

  // Single branch with l = Q0 along the Mini chain from h(root) = [k_eff].
  SafraTree initial_tree(TreeMode mode) const;
  MuSafraTree initial_mu_tree() const;

  HSuccessorResult h_safra_successor(const SafraTree& tree, int letter,
                                     TraceSink* trace = nullptr) const;
  LirSuccessorResult lir_successor(const SafraTree& tree, int letter,
                                   TraceSink* trace = nullptr) const;
  MuSafraTree mu_safra_successor(const MuSafraTree& tree, int letter,
                                 TraceSink* trace = nullptr) const;

  StateSet letter_successors(StateSet from, int letter) const;

private:
  struct Engine;
  friend struct Engine;

  StreettNSA nsa_;
  EffectivePairs pairs_;
  IndexCalculus calc_;
  std::vector<StateSet> succ_; // succ_[q * sigma + a]
  bool always_empty_ = false;
};

struct BuildOptions {
  int state_cap = 300000; // reachable states, sink included
};

struct BuildResult {
  DetAutomaton automaton;
  std::vector<SafraTree> trees;       // one per state; sink holds the sink tree
  std::vector<MuSafraTree> mu_trees;  // build_dra only
  std::vector<RabinSignature> rabin_sigs; // build_drta only, per transition
  int max_tree_nodes = 0;             // over non-sink states
};

BuildResult build_drta(const StreettNSA& nsa, const BuildOptions& opts = {});
BuildResult build_dpta(const StreettNSA& nsa, const BuildOptions& opts = {});
BuildResult build_dra(const StreettNSA& nsa, const BuildOptions& opts = {});

} // namespace streett
