#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "streett/automaton.hpp"

namespace streett {

struct GenSpec {
  int n = 1;
  int k = 0;
  int sigma = 1;
  double transition_density = 1.0; // (0,1]
  double pair_density = 0.5;       // [0,1]
  std::uint64_t seed = 0;

  bool operator==(const GenSpec&) const = default;
};

// Seeded random NSA with state-based pairs. Draw order is fixed so golden
// files stay valid: transitions (src, letter, dst) lexicographic, then per
// pair G then B per state, then the initial set (state 0 if all draws miss).
StreettNSA random_nsa(const GenSpec& spec);

// ----- full Streett automata ------------------------------------------------
// The alphabet is the powerset of marked edges (p, m, q) with
// m in {none, G_1..G_k, B_1..B_k}; a letter is a triple-set bitmask.

struct MarkedTriple {
  int src = 0;
  int mark = 0; // 0 = no mark, 1..k = G_i, k+1..2k = B_i
  int dst = 0;
};

int full_streett_triple_bits(int n, int k); // n * (2k+1) * n
std::vector<MarkedTriple> letter_triples(std::uint64_t letter_mask, int n, int k);

// Explicit materialization: every state initial, alphabet of 2^bits letters,
// transition-based pairs. Guarded at 12 triple bits; larger instances must
// go through the sampled/lazy path below.
StreettNSA full_streett(int n, int k);

// Restriction of the full automaton to the given letter masks (sorted,
// unique); letters are renumbered densely in mask order.
StreettNSA full_streett_restricted(int n, int k, const std::vector<std::uint64_t>& letters);

// Seeded sample of distinct letter masks, ascending. Works for any triple
// count up to 63 bits.
std::vector<std::uint64_t> sample_full_streett_letters(int n, int k, int count,
                                                       std::uint64_t seed);

// ----- basis conversion -----------------------------------------------------

// Mark-splitting: states become (state, incoming mark set), initial states
// carry the empty annotation. Language-preserving on lassos.
StreettNSA to_state_based(const StreettNSA& nsa, int state_cap = kMaxStates);

// ----- lasso enumeration ----------------------------------------------------

// Exhaustive, duplicate-free stream over all lassos with |u| <= max_prefix
// and 1 <= |v| <= max_cycle. Order: total length, then prefix length, then
// prefix lexicographic, then cycle lexicographic.
class LassoEnumerator {
public:
  LassoEnumerator(int sigma, int max_prefix, int max_cycle);
  std::optional<Lasso> next();

private:
  bool bump_word(std::vector<int>& word) const;
  bool advance_shape();

  int sigma_;
  int max_prefix_;
  int max_cycle_;
  int total_;
  int prefix_len_;
  std::vector<int> prefix_;
  std::vector<int> cycle_;
  bool done_ = false;
  bool fresh_shape_ = true;
};

std::vector<Lasso> enumerate_lassos(int sigma, int max_prefix, int max_cycle);

} // namespace streett
