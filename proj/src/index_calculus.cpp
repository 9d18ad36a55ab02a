#include "streett/index_calculus.hpp"

namespace streett {

IndexSet IndexCalculus::cover(IndexSet beta) const
{
  check_domain(beta);
  if (auto it = cover_memo_.find(beta); it != cover_memo_.end())
    return it->second;
  StateSet gb = fam_.g_union(beta);
  IndexSet out = 0;
  for (int j = 1; j <= fam_.k; ++j)
    if ((fam_.g[j - 1] & ~gb) == 0)
      out |= index_bit(j);
  cover_memo_.emplace(beta, out);
  return out;
}

IndexSet IndexCalculus::mini(IndexSet beta) const
{
  check_domain(beta);
  if (auto it = mini_memo_.find(beta); it != mini_memo_.end())
    return it->second;
  StateSet gb = fam_.g_union(beta);
  IndexSet outside = full_index_set(fam_.k) & ~cover(beta);
  IndexSet out = 0;
  for (int j : indices_of(outside)) {
    StateSet uj = fam_.g[j - 1] | gb;
    bool member = true;
    for (int jp : indices_of(outside)) {
      if (jp == j)
        continue;
      StateSet ujp = fam_.g[jp - 1] | gb;
      if (ujp != uj && (ujp & ~uj) == 0) { // proper subset: condition (1)
        member = false;
        break;
      }
      if (jp < j && ujp == uj) { // equal union at a smaller index: condition (2)
        member = false;
        break;
      }
    }
    if (member)
      out |= index_bit(j);
  }
  mini_memo_.emplace(beta, out);
  return out;
}

} // namespace streett
