#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "streett/bits.hpp"
#include "streett/errors.hpp"
#include "streett/index_calculus.hpp"

namespace streett {

// Structure-derived node name: a sequence of j^occ components, empty for the
// root. Rendered "2^2.1^1", root as "eps".
struct NameComponent {
  int j = 0;
  int occ = 1;
  auto operator<=>(const NameComponent&) const = default;
};

struct Name {
  std::vector<NameComponent> parts;

  bool is_root() const { return parts.empty(); }
  auto operator<=>(const Name&) const = default;
  std::string to_string() const;
};

// Batch-mode node name bucket.depth; (0,0) means undefined.
struct MuName {
  int bucket = 0;
  int depth = 0;

  bool defined() const { return bucket > 0; }
  auto operator<=>(const MuName&) const = default;
  std::string to_string() const;
};

enum class TreeMode { h_safra, lir, mu };

struct TreeNode {
  StateSet label = 0;
  IndexSet hset = 0;
  int parent = -1;
  std::vector<int> kids; // ordered left to right
  std::uint32_t age = 0; // creation stamp; smaller = older
  MuName mu_name{};      // mu mode only
  bool alive = true;
};

// Ordered labelled tree shared by all three determinization flavours.
// Nodes live in an arena; ids stay stable inside one successor step and are
// renumbered to preorder by canonicalized().
class SafraTree {
public:
  static SafraTree single_node(StateSet label, IndexSet h);
  static SafraTree sink_tree(int k);

  int root() const { return root_; }
  bool is_sink() const { return nodes_[root_].label == 0; }

  const TreeNode& node(int id) const { return nodes_[id]; }
  StateSet label(int id) const { return nodes_[id].label; }
  IndexSet hset(int id) const { return nodes_[id].hset; }
  int parent(int id) const { return nodes_[id].parent; }
  const std::vector<int>& kids(int id) const { return nodes_[id].kids; }
  std::vector<int>& kids_mut(int id) { return nodes_[id].kids; }
  std::uint32_t age(int id) const { return nodes_[id].age; }
  bool alive(int id) const { return nodes_[id].alive; }
  MuName mu_name(int id) const { return nodes_[id].mu_name; }
  void set_mu_name(int id, MuName m) { nodes_[id].mu_name = m; }
  void set_label(int id, StateSet s) { nodes_[id].label = s; }

  int size() const;
  int arena_size() const { return static_cast<int>(nodes_.size()); }
  std::vector<int> preorder() const;
  std::vector<int> lir_order() const; // live ids by ascending age

  // Appends a youngest child (rightmost, freshest age).
  int add_child(int parent, StateSet label, IndexSet h);
  void remove_states_in_subtree(int id, StateSet states);
  // Detaches id from its parent and kills the whole subtree; killed ids are
  // appended to removed in preorder.
  void remove_subtree(int id, std::vector<int>& removed);
  // Kills all child subtrees of id.
  void remove_children(int id, std::vector<int>& removed);

  // max((h(parent) u {0}) \ h(node)); 0 when the node misses nothing.
  int j_value(int id) const;

  // Preorder arena, ages renumbered: LIR rank in lir mode, preorder position
  // otherwise (sibling order already encodes every age comparison the
  // successor makes in the non-LIR modes).
  SafraTree canonicalized(TreeMode mode) const;

  bool equal_structure(const SafraTree& other, TreeMode mode) const;

private:
  std::vector<TreeNode> nodes_;
  int root_ = -1;
  std::uint32_t next_age_ = 0;
};

// mu tree state: explicit names live in the nodes, E/F as sorted name sets.
struct MuSafraTree {
  SafraTree tree;
  std::vector<MuName> e_names;
  std::vector<MuName> f_names;
};

// Stable sort of every sibling group by descending j; equal-j nodes keep
// their relative (age) order.
void stor_sort_siblings(SafraTree& tree, int parent);
void stor_sort_all(SafraTree& tree);

// Rule-3 naming: root eps, child name = parent name + j^occ where occ-1
// counts equal-j left siblings. Arena-indexed; dead slots hold empty names.
std::vector<Name> assign_names_mn(const SafraTree& tree);

// Maximal leftmost-child chains, listed by head preorder. Every live node is
// on exactly one spine.
std::vector<std::vector<int>> left_spines(const SafraTree& tree);

// Rules 1-2 batch naming. A spine keeps its bucket iff its head carried
// depth 1 (it already headed that spine); every other spine takes the lowest
// free bucket, in head preorder. Depths restart at 1 per spine. Throws
// construction_error when more than bucket_limit spines are live.
// Passing an empty carried vector names a fresh tree from bucket 1.
std::vector<MuName> assign_names_mb(SafraTree& tree, const std::vector<MuName>& carried,
                                    int bucket_limit);

// Injective byte encoding of the canonicalized tree; lir mode additionally
// encodes LIR ranks, mu mode encodes names and the E/F sets.
std::string canonical_encode(const SafraTree& tree, TreeMode mode,
                             const std::vector<MuName>* e_names = nullptr,
                             const std::vector<MuName>* f_names = nullptr);

// Violation report; empty means the tree satisfies every mode-applicable
// invariant. Violations name the node and the broken rule. max_nodes is the
// size budget, n(min(n,k)+1) when negative.
std::vector<std::string> check_invariants(const SafraTree& tree, TreeMode mode,
                                          const IndexCalculus& calc, int n,
                                          int max_nodes = -1,
                                          const std::vector<MuName>* e_names = nullptr,
                                          const std::vector<MuName>* f_names = nullptr);

// Indented debug rendering (CLI --trace); not meant to be parsed back.
std::string render_tree(const SafraTree& tree, TreeMode mode);

} // namespace streett
