#include "streett/safra_tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace streett {

std::string Name::to_string() const
{
  if (parts.empty())
    return "eps";
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i)
      os << '.';
    os << parts[i].j << '^' << parts[i].occ;
  }
  return os.str();
}

std::string MuName::to_string() const
{
  if (!defined())
    return "?";
  return std::to_string(bucket) + "." + std::to_string(depth);
}

SafraTree SafraTree::single_node(StateSet label, IndexSet h)
{
  SafraTree t;
  t.nodes_.push_back(TreeNode{label, h, -1, {}, 0, {}, true});
  t.root_ = 0;
  t.next_age_ = 1;
  return t;
}

SafraTree SafraTree::sink_tree(int k)
{
  return single_node(0, full_index_set(k));
}

int SafraTree::size() const
{
  int c = 0;
  for (const auto& nd : nodes_)
    c += nd.alive ? 1 : 0;
  return c;
}

std::vector<int> SafraTree::preorder() const
{
  std::vector<int> out;
  out.reserve(nodes_.size());
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    out.push_back(id);
    const auto& ks = nodes_[id].kids;
    for (auto it = ks.rbegin(); it != ks.rend(); ++it)
      stack.push_back(*it);
  }
  return out;
}

std::vector<int> SafraTree::lir_order() const
{
  std::vector<int> out = preorder();
  std::sort(out.begin(), out.end(),
            [this](int a, int b) { return nodes_[a].age < nodes_[b].age; });
  return out;
}

int SafraTree::add_child(int parent, StateSet label, IndexSet h)
{
  int id = static_cast<int>(nodes_.size());
  nodes_.push_back(TreeNode{label, h, parent, {}, next_age_++, {}, true});
  nodes_[parent].kids.push_back(id);
  return id;
}

void SafraTree::remove_states_in_subtree(int id, StateSet states)
{
  nodes_[id].label &= ~states;
  for (int c : nodes_[id].kids)
    remove_states_in_subtree(c, states);
}

void SafraTree::remove_subtree(int id, std::vector<int>& removed)
{
  int p = nodes_[id].parent;
  if (p >= 0) {
    auto& ks = nodes_[p].kids;
    ks.erase(std::remove(ks.begin(), ks.end(), id), ks.end());
  }
  std::vector<int> stack{id};
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    nodes_[t].alive = false;
    removed.push_back(t);
    for (auto it = nodes_[t].kids.rbegin(); it != nodes_[t].kids.rend(); ++it)
      stack.push_back(*it);
    nodes_[t].kids.clear();
  }
}

void SafraTree::remove_children(int id, std::vector<int>& removed)
{
  auto ks = nodes_[id].kids; // remove_subtree edits the live list
  for (int c : ks)
    remove_subtree(c, removed);
}

int SafraTree::j_value(int id) const
{
  int p = nodes_[id].parent;
  if (p < 0)
    throw domain_error("j-value is undefined on the root");
  return max_index(nodes_[p].hset & ~nodes_[id].hset);
}

SafraTree SafraTree::canonicalized(TreeMode mode) const
{
  std::vector<int> order = preorder();
  std::vector<std::uint32_t> new_age(nodes_.size(), 0);
  if (mode == TreeMode::lir) {
    std::vector<int> lir = lir_order();
    for (size_t r = 0; r < lir.size(); ++r)
      new_age[lir[r]] = static_cast<std::uint32_t>(r);
  } else {
    for (size_t i = 0; i < order.size(); ++i)
      new_age[order[i]] = static_cast<std::uint32_t>(i);
  }
  std::vector<int> new_id(nodes_.size(), -1);
  for (size_t i = 0; i < order.size(); ++i)
    new_id[order[i]] = static_cast<int>(i);

  SafraTree out;
  out.nodes_.resize(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    const TreeNode& src = nodes_[order[i]];
    TreeNode& dst = out.nodes_[i];
    dst.label = src.label;
    dst.hset = src.hset;
    dst.age = new_age[order[i]];
    dst.mu_name = src.mu_name;
    dst.alive = true;
    dst.parent = src.parent < 0 ? -1 : new_id[src.parent];
    dst.kids.reserve(src.kids.size());
    for (int c : src.kids)
      dst.kids.push_back(new_id[c]);
  }
  out.root_ = 0;
  out.next_age_ = static_cast<std::uint32_t>(order.size());
  return out;
}

bool SafraTree::equal_structure(const SafraTree& other, TreeMode mode) const
{
  SafraTree a = canonicalized(mode);
  SafraTree b = other.canonicalized(mode);
  if (a.arena_size() != b.arena_size())
    return false;
  for (int i = 0; i < a.arena_size(); ++i) {
    const TreeNode& x = a.nodes_[i];
    const TreeNode& y = b.nodes_[i];
    if (x.label != y.label || x.hset != y.hset || x.parent != y.parent || x.kids != y.kids)
      return false;
    if (mode == TreeMode::lir && x.age != y.age)
      return false;
    if (mode == TreeMode::mu && x.mu_name != y.mu_name)
      return false;
  }
  return true;
}

void stor_sort_siblings(SafraTree& tree, int parent)
{
  auto& ks = tree.kids_mut(parent);
  std::stable_sort(ks.begin(), ks.end(),
                   [&tree](int a, int b) { return tree.j_value(a) > tree.j_value(b); });
}

void stor_sort_all(SafraTree& tree)
{
  for (int id : tree.preorder())
    if (!tree.kids(id).empty())
      stor_sort_siblings(tree, id);
}

std::vector<Name> assign_names_mn(const SafraTree& tree)
{
  std::vector<Name> names(tree.arena_size());
  for (int id : tree.preorder()) {
    const auto& ks = tree.kids(id);
    for (size_t i = 0; i < ks.size(); ++i) {
      int j = tree.j_value(ks[i]);
      int occ = 1;
      for (size_t l = 0; l < i; ++l)
        if (tree.j_value(ks[l]) == j)
          ++occ;
      Name nm = names[id];
      nm.parts.push_back(NameComponent{j, occ});
      names[ks[i]] = std::move(nm);
    }
  }
  return names;
}

std::vector<std::vector<int>> left_spines(const SafraTree& tree)
{
  std::vector<std::vector<int>> spines;
  for (int id : tree.preorder()) {
    int p = tree.parent(id);
    bool head = p < 0 || tree.kids(p).front() != id;
    if (!head)
      continue;
    std::vector<int> spine;
    int cur = id;
    for (;;) {
      spine.push_back(cur);
      if (tree.kids(cur).empty())
        break;
      cur = tree.kids(cur).front();
    }
    spines.push_back(std::move(spine));
  }
  return spines;
}

std::vector<MuName> assign_names_mb(SafraTree& tree, const std::vector<MuName>& carried,
                                    int bucket_limit)
{
  auto spines = left_spines(tree);
  if (static_cast<int>(spines.size()) > bucket_limit)
    throw construction_error("name buckets exhausted: " + std::to_string(spines.size())
                             + " left spines exceed the " + std::to_string(bucket_limit)
                             + "-bucket range");

  auto carried_of = [&](int id) -> MuName {
    return id < static_cast<int>(carried.size()) ? carried[id] : MuName{};
  };

  std::set<int> taken;
  std::vector<int> bucket_of(spines.size(), 0);
  for (size_t s = 0; s < spines.size(); ++s) {
    MuName old = carried_of(spines[s].front());
    if (old.defined() && old.depth == 1) {
      bucket_of[s] = old.bucket;
      taken.insert(old.bucket);
    }
  }
  int next_free = 1;
  for (size_t s = 0; s < spines.size(); ++s) {
    if (bucket_of[s] != 0)
      continue;
    while (taken.count(next_free))
      ++next_free;
    bucket_of[s] = next_free;
    taken.insert(next_free);
  }

  std::vector<MuName> names(tree.arena_size());
  for (size_t s = 0; s < spines.size(); ++s)
    for (size_t d = 0; d < spines[s].size(); ++d) {
      MuName nm{bucket_of[s], static_cast<int>(d) + 1};
      names[spines[s][d]] = nm;
      tree.set_mu_name(spines[s][d], nm);
    }
  return names;
}

namespace {

void put_u16(std::string& out, unsigned v)
{
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::string& out, std::uint32_t v)
{
  for (int i = 0; i < 4; ++i)
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v)
{
  for (int i = 0; i < 8; ++i)
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_name_list(std::string& out, const std::vector<MuName>& names)
{
  put_u16(out, static_cast<unsigned>(names.size()));
  for (const MuName& m : names) {
    put_u16(out, static_cast<unsigned>(m.bucket));
    put_u16(out, static_cast<unsigned>(m.depth));
  }
}

} // namespace

std::string canonical_encode(const SafraTree& tree, TreeMode mode,
                             const std::vector<MuName>* e_names,
                             const std::vector<MuName>* f_names)
{
  SafraTree c = tree.canonicalized(mode);
  std::string out;
  out.push_back(static_cast<char>(mode));
  put_u16(out, static_cast<unsigned>(c.arena_size()));
  for (int id = 0; id < c.arena_size(); ++id) {
    const TreeNode& nd = c.node(id);
    put_u64(out, nd.label);
    put_u32(out, nd.hset);
    put_u16(out, static_cast<unsigned>(nd.kids.size()));
    if (mode == TreeMode::lir)
      put_u16(out, static_cast<unsigned>(nd.age));
    if (mode == TreeMode::mu) {
      put_u16(out, static_cast<unsigned>(nd.mu_name.bucket));
      put_u16(out, static_cast<unsigned>(nd.mu_name.depth));
    }
  }
  if (mode == TreeMode::mu) {
    static const std::vector<MuName> none;
    put_name_list(out, e_names ? *e_names : none);
    put_name_list(out, f_names ? *f_names : none);
  }
  return out;
}

namespace {

std::string node_tag(const SafraTree& tree, int id)
{
  std::ostringstream os;
  os << "node[l={";
  auto qs = states_of(tree.label(id));
  for (size_t i = 0; i < qs.size(); ++i)
    os << (i ? "," : "") << qs[i];
  os << "} h={";
  auto is = indices_of(tree.hset(id));
  for (size_t i = 0; i < is.size(); ++i)
    os << (i ? "," : "") << is[i];
  os << "}]";
  return os.str();
}

} // namespace

std::vector<std::string> check_invariants(const SafraTree& tree, TreeMode mode,
                                          const IndexCalculus& calc, int n,
                                          int max_nodes,
                                          const std::vector<MuName>* e_names,
                                          const std::vector<MuName>* f_names)
{
  std::vector<std::string> bad;
  auto report = [&](int id, const std::string& what) {
    bad.push_back(node_tag(tree, id) + ": " + what);
  };

  int k = calc.k();
  int mu = n < k ? n : k;
  if (max_nodes < 0)
    max_nodes = n * (mu + 1);
  IndexSet all = full_index_set(k);
  auto order = tree.preorder();

  if (static_cast<int>(order.size()) > max_nodes)
    bad.push_back("tree has " + std::to_string(order.size()) + " nodes, above the "
                  + std::to_string(max_nodes) + "-node size budget");

  if (tree.hset(tree.root()) != all)
    report(tree.root(), "root index label differs from [k]");

  for (int id : order) {
    if (tree.label(id) == 0)
      report(id, "empty state label");
    const auto& ks = tree.kids(id);
    if (!ks.empty()) {
      StateSet uni = 0;
      bool disjoint = true;
      for (int c : ks) {
        if (uni & tree.label(c))
          disjoint = false;
        uni |= tree.label(c);
      }
      if (!disjoint)
        report(id, "sibling state labels are not disjoint");
      if (uni != tree.label(id))
        report(id, "label differs from the union of its children");
      bool strictly_smaller_child = false;
      for (int c : ks)
        if (tree.hset(c) != tree.hset(id))
          strictly_smaller_child = true;
      if (!strictly_smaller_child)
        report(id, "no child with strictly smaller index label");
      for (size_t i = 1; i < ks.size(); ++i)
        if (tree.j_value(ks[i - 1]) < tree.j_value(ks[i]))
          report(id, "children not in structural order (descending j)");
    } else {
      IndexSet h = tree.hset(id);
      if (h != 0 && calc.mini(all & ~h) != 0)
        report(id, "leaf violates the leaf condition (h nonempty and Mini([k]-h) nonempty)");
    }
    int p = tree.parent(id);
    if (p >= 0) {
      IndexSet h = tree.hset(id);
      IndexSet hp = tree.hset(p);
      if (h & ~hp)
        report(id, "index label not contained in parent's");
      if (index_count(hp & ~h) > 1)
        report(id, "index label misses more than one element of parent's");
    }
  }

  if (mode == TreeMode::h_safra || mode == TreeMode::lir) {
    auto names = assign_names_mn(tree);
    std::set<Name> seen;
    for (int id : order)
      if (!seen.insert(names[id]).second)
        report(id, "duplicate derived name " + names[id].to_string());
  }

  if (mode == TreeMode::lir) {
    auto lir = tree.lir_order();
    std::set<std::uint32_t> ages;
    for (int id : lir)
      if (!ages.insert(tree.age(id)).second)
        report(id, "duplicate creation stamp in the LIR");
    if (!lir.empty() && lir.front() != tree.root())
      bad.push_back("LIR does not start with the root");
    for (int id : order) {
      int p = tree.parent(id);
      if (p >= 0 && !(tree.age(p) < tree.age(id)))
        report(id, "parent does not precede child in the LIR");
    }
  }

  if (mode == TreeMode::mu) {
    int max_spine = max_nodes / std::max(1, n); // mu+1 under the default budget
    auto spines = left_spines(tree);
    if (static_cast<int>(spines.size()) > n)
      bad.push_back("more than n = " + std::to_string(n) + " left spines");
    std::set<MuName> seen;
    for (const auto& spine : spines) {
      if (static_cast<int>(spine.size()) > max_spine)
        report(spine.front(), "left spine longer than the per-spine budget");
      int bucket = tree.mu_name(spine.front()).bucket;
      for (size_t d = 0; d < spine.size(); ++d) {
        MuName nm = tree.mu_name(spine[d]);
        if (!nm.defined())
          report(spine[d], "undefined batch-mode name");
        else {
          if (nm.bucket != bucket || nm.depth != static_cast<int>(d) + 1)
            report(spine[d], "name " + nm.to_string() + " inconsistent with its spine position");
          if (nm.bucket < 1 || nm.bucket > n || nm.depth < 1 || nm.depth > max_spine)
            report(spine[d], "name " + nm.to_string() + " outside the name range");
          if (!seen.insert(nm).second)
            report(spine[d], "duplicate batch-mode name " + nm.to_string());
        }
      }
    }
    auto range_ok = [&](const MuName& m) {
      return m.bucket >= 1 && m.bucket <= n && m.depth >= 1 && m.depth <= max_spine;
    };
    if (e_names && f_names) {
      for (const MuName& m : *e_names) {
        if (!range_ok(m))
          bad.push_back("E contains out-of-range name " + m.to_string());
        if (std::binary_search(f_names->begin(), f_names->end(), m))
          bad.push_back("E and F are not disjoint at " + m.to_string());
      }
      for (const MuName& m : *f_names)
        if (!range_ok(m))
          bad.push_back("F contains out-of-range name " + m.to_string());
    }
  }

  return bad;
}

std::string render_tree(const SafraTree& tree, TreeMode mode)
{
  std::vector<Name> mn;
  if (mode != TreeMode::mu)
    mn = assign_names_mn(tree);
  std::vector<int> lir = tree.lir_order();
  std::vector<int> pos(tree.arena_size(), 0);
  for (size_t r = 0; r < lir.size(); ++r)
    pos[lir[r]] = static_cast<int>(r) + 1;

  std::ostringstream os;
  auto walk = [&](auto&& self, int id, int depth) -> void {
    for (int i = 0; i < depth; ++i)
      os << "  ";
    os << "- l={";
    auto qs = states_of(tree.label(id));
    for (size_t i = 0; i < qs.size(); ++i)
      os << (i ? "," : "") << 'q' << qs[i];
    os << "} h={";
    auto is = indices_of(tree.hset(id));
    for (size_t i = 0; i < is.size(); ++i)
      os << (i ? "," : "") << is[i];
    os << "}";
    if (tree.parent(id) >= 0)
      os << " j=" << tree.j_value(id);
    os << " name=" << (mode == TreeMode::mu ? tree.mu_name(id).to_string() : mn[id].to_string());
    if (mode == TreeMode::lir)
      os << " lir=" << pos[id];
    os << '\n';
    for (int c : tree.kids(id))
      self(self, c, depth + 1);
  };
  walk(walk, tree.root(), 0);
  return os.str();
}

} // namespace streett
