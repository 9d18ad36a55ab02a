#pragma once

#include <unordered_map>
#include <vector>

#include "streett/bits.hpp"
#include "streett/errors.hpp"

namespace streett {

// The first components G_1..G_k of an automaton's Streett pairs, with the
// derived union G_beta.
struct GFamily {
  int k = 0;
  std::vector<StateSet> g; // g[i-1] = G_i

  StateSet g_union(IndexSet beta) const
  {
    StateSet u = 0;
    for (int i = 1; i <= k; ++i)
      if (index_in(beta, i))
        u |= g[i - 1];
    return u;
  }
};

// Cover/Mini index operators. Results are memoized per beta; one instance
// serves one automaton and is not meant to be shared across threads.
class IndexCalculus {
public:
  explicit IndexCalculus(GFamily family) : fam_(std::move(family)) {}

  const GFamily& family() const { return fam_; }
  int k() const { return fam_.k; }

  // Cover(beta) = { j in [k] | G_j subset of G_beta }.
  IndexSet cover(IndexSet beta) const;

  // Mini(beta): minimal fresh obligations after beta; see cover() for the
  // ambient family. j is a member iff j lies outside Cover(beta), no other
  // outside index yields a strictly smaller union with G_beta, and j is the
  // least index achieving its union value.
  IndexSet mini(IndexSet beta) const;

private:
  void check_domain(IndexSet beta) const
  {
    if (beta & ~full_index_set(fam_.k))
      throw domain_error("index set not contained in [k]");
  }

  GFamily fam_;
  mutable std::unordered_map<IndexSet, IndexSet> cover_memo_;
  mutable std::unordered_map<IndexSet, IndexSet> mini_memo_;
};

} // namespace streett
