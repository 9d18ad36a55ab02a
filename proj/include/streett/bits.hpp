#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace streett {

// State sets are bit masks over automaton states (state q <-> bit q, q < 64).
using StateSet = std::uint64_t;

// Index sets are subsets of [k] = {1,...,k}; index i is stored in bit i-1,
// so 0 can never be a member.
using IndexSet = std::uint32_t;

constexpr int kMaxStates = 64;
constexpr int kMaxPairs = 32;

inline bool state_in(StateSet s, int q) { return (s >> q) & 1u; }
inline StateSet state_bit(int q) { return StateSet{1} << q; }
inline int state_count(StateSet s) { return std::popcount(s); }

inline StateSet full_state_set(int n)
{
  return n >= kMaxStates ? ~StateSet{0} : (StateSet{1} << n) - 1;
}

inline std::vector<int> states_of(StateSet s)
{
  std::vector<int> out;
  while (s) {
    int q = std::countr_zero(s);
    out.push_back(q);
    s &= s - 1;
  }
  return out;
}

inline bool index_in(IndexSet s, int i) { return i >= 1 && ((s >> (i - 1)) & 1u); }
inline IndexSet index_bit(int i) { return IndexSet{1} << (i - 1); }
inline IndexSet full_index_set(int k)
{
  return k >= kMaxPairs ? ~IndexSet{0} : (IndexSet{1} << k) - 1;
}
inline int index_count(IndexSet s) { return std::popcount(s); }

// Largest member of s, or 0 when s is empty.
inline int max_index(IndexSet s)
{
  return s == 0 ? 0 : 32 - std::countl_zero(s);
}

inline std::vector<int> indices_of(IndexSet s)
{
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

} // namespace streett
