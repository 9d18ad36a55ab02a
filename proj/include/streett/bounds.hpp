#pragma once

#include <optional>
#include <string>

#include "streett/bigint.hpp"
#include "streett/determinize.hpp"

namespace streett {

// Exact bound values for an NSA with n states and k pairs, mu = min(n,k).
struct BoundSet {
  int n = 0;
  int k = 0;
  int mu = 0;

  BigUint drta_states;                    // n^{5n} (n!)^n
  std::optional<BigUint> drta_states_k;   // n^{5n} k^{nk}, applies when k <= n
  BigUint dpta_states;                    // 3 (n(mu+1)-1)! n! X, X = (n!)^n or k^{nk}
  BigUint rabin_name_count;               // C(n+mu, n) n^n (mu!)^n
  BigUint prior_dra_states;                  // n^{7n}(n!)^{n+1} / n^{5n} k^{n(k+2)} n!
  BigUint prior_drta_states;                 // n^{5n}(n!)^{n+1} / n^{5n} k^{nk} n!
  int tree_node_bound = 0;                // n(mu+1)
  int priority_low = 2;
  int priority_high = 0;                  // 2n(mu+1)+1
};

BoundSet compute_bounds(int n, int k);

// What a determinization run actually produced.
struct BoundsObservation {
  std::optional<int> drta_non_sink;
  std::optional<int> drta_pair_names;
  std::optional<int> dpta_non_sink;
  std::optional<int> dpta_min_priority;
  std::optional<int> dpta_max_priority;
  std::optional<int> dra_non_sink;
  std::optional<int> max_tree_nodes;
};

BoundsObservation observe_bounds(const BuildResult* drta, const BuildResult* dpta,
                                 const BuildResult* dra);

// True iff every observed value sits inside its bound; failures lists the
// broken rows.
bool bounds_conform(const BoundSet& bounds, const BoundsObservation& obs,
                    std::vector<std::string>* failures = nullptr);

// Observed-versus-bound table, one row per metric; CZ bounds are reported
// for comparison next to the tight ones.
std::string render_bounds_table(const BoundSet& bounds, const BoundsObservation& obs);

} // namespace streett
