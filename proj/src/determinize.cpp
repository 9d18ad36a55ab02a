#include "streett/determinize.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace streett {

std::string RabinSignature::to_string() const
{
  std::ostringstream os;
  os << "acc={";
  for (size_t i = 0; i < acc.size(); ++i)
    os << (i ? "," : "") << acc[i].to_string();
  os << "} rej={";
  for (size_t i = 0; i < rej.size(); ++i)
    os << (i ? "," : "") << rej[i].to_string();
  os << '}';
  return os.str();
}

std::string ParitySignature::to_string() const
{
  if (!has_event)
    return "empty";
  return std::string("(") + (rejecting ? "rej" : "acc") + "," + std::to_string(position) + ")";
}

int priority_of(const ParitySignature& sig, int n, int mu)
{
  int top = 2 * n * (mu + 1) + 1;
  if (!sig.has_event)
    return top;
  if (sig.position < 1 || sig.position > n * (mu + 1))
    throw domain_error("signature position " + std::to_string(sig.position)
                       + " outside [1, n(mu+1)]");
  if (sig.rejecting)
    return sig.position == 1 ? top : 2 * sig.position - 1;
  return 2 * sig.position;
}

EffectivePairs effective_pairs(const StreettNSA& nsa)
{
  int k = nsa.k();
  std::vector<StateSet> g(k), b(k);
  for (int i = 0; i < k; ++i) {
    g[i] = nsa.pairs[i].g_states;
    b[i] = nsa.pairs[i].b_states;
  }

  // pair i implies pair j when G_i subset G_j and B_j subset B_i; implied
  // pairs carry no information and would only stretch the index chains
  std::vector<char> dropped(k, 0);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k && !dropped[j]; ++i) {
      if (i == j)
        continue;
      bool implies = (g[i] & ~g[j]) == 0 && (b[j] & ~b[i]) == 0;
      bool identical = g[i] == g[j] && b[i] == b[j];
      if (implies && (i < j || !identical))
        dropped[j] = 1;
    }

  EffectivePairs eff;
  eff.g.push_back(0); // 1-based
  eff.b.push_back(0);
  StateSet b_glob = 0;
  for (int i = 0; i < k; ++i) {
    if (dropped[i])
      continue;
    if (g[i] == 0) {
      b_glob |= b[i];
    } else {
      eff.g.push_back(g[i]);
      eff.b.push_back(b[i]);
    }
  }
  // one slot for all pure B-avoidance obligations; its G holds a virtual
  // element so the index calculus never prunes it (it stays watchable)
  if (b_glob != 0) {
    eff.has_virtual = true;
    eff.g.push_back(state_bit(nsa.n));
    eff.b.push_back(b_glob);
  }
  eff.k_eff = static_cast<int>(eff.g.size()) - 1;

  // the virtual slot can push the spine budget past min(n,k)+1; reclaim by
  // shedding always-satisfied pairs (empty B) before that happens
  int nominal_mu = nsa.mu();
  auto mu_of = [&](const EffectivePairs& e) {
    int cap = nsa.n + (e.has_virtual ? 1 : 0);
    return cap < e.k_eff ? cap : e.k_eff;
  };
  while (mu_of(eff) > nominal_mu) {
    bool shed = false;
    for (size_t i = 1; i < eff.g.size(); ++i)
      if (eff.b[i] == 0 && !(eff.has_virtual && i + 1 == eff.g.size())) {
        eff.g.erase(eff.g.begin() + static_cast<long>(i));
        eff.b.erase(eff.b.begin() + static_cast<long>(i));
        --eff.k_eff;
        shed = true;
        break;
      }
    if (!shed)
      break;
  }
  return eff;
}

GFamily effective_family(const StreettNSA& nsa)
{
  EffectivePairs eff = effective_pairs(nsa);
  GFamily fam;
  fam.k = eff.k_eff;
  fam.g.assign(eff.g.begin() + 1, eff.g.end());
  return fam;
}

Determinizer::Determinizer(StreettNSA nsa)
  : nsa_(std::move(nsa)), calc_(GFamily{})
{
  nsa_.validate();
  if (nsa_.basis != PairBasis::states)
    throw basis_error("determinization needs state-based pairs; convert first");
  if (nsa_.n >= kMaxStates)
    throw capacity_error("determinization needs a free bit for the virtual element; "
                         "at most 63 states");
  pairs_ = effective_pairs(nsa_);
  if (pairs_.has_virtual && pairs_.b.back() == full_state_set(nsa_.n))
    always_empty_ = true; // no run can avoid the merged B forever
  calc_ = IndexCalculus(effective_family(nsa_));
  succ_.assign(static_cast<size_t>(nsa_.n) * nsa_.alphabet.size, 0);
  for (const auto& t : nsa_.transitions)
    succ_[static_cast<size_t>(t.src) * nsa_.alphabet.size + t.letter] |= state_bit(t.dst);
}

StateSet Determinizer::letter_successors(StateSet from, int letter) const
{
  StateSet out = 0;
  for (int q : states_of(from))
    out |= succ_[static_cast<size_t>(q) * nsa_.alphabet.size + letter];
  return out;
}

SafraTree Determinizer::initial_tree(TreeMode mode) const
{
  IndexSet all = full_index_set(k_eff());
  SafraTree t = SafraTree::single_node(nsa_.initial, all);
  int cur = t.root();
  while (t.hset(cur) != 0) {
    IndexSet m = calc_.mini(all & ~t.hset(cur));
    if (m == 0)
      break;
    cur = t.add_child(cur, nsa_.initial, t.hset(cur) & ~index_bit(max_index(m)));
  }
  return t.canonicalized(mode);
}

MuSafraTree Determinizer::initial_mu_tree() const
{
  MuSafraTree out;
  out.tree = initial_tree(TreeMode::mu);
  assign_names_mb(out.tree, {}, n());
  return out;
}

// One run of the six-step transformation. Source node ids stay valid in the
// working copy; new nodes get fresh arena slots.
struct Determinizer::Engine {
  const Determinizer& det;
  const SafraTree& src;
  TreeMode mode;
  TraceSink* trace;

  SafraTree t;
  int src_arena;
  std::vector<int> removed3;  // source ids removed in the horizontal merge
  std::vector<int> removed4;  // source ids removed under accepting nodes
  std::vector<int> accepting; // source ids
  bool dead = false;

  Engine(const Determinizer& d, const SafraTree& source, TreeMode m, TraceSink* tr)
    : det(d), src(source), mode(m), trace(tr), t(source),
      src_arena(source.arena_size())
  {}

  bool is_source(int id) const { return id < src_arena && src.alive(id); }

  void emit(int step, const std::string& what)
  {
    if (trace)
      trace->on_step(step, what, t, mode);
  }

  void run(int letter)
  {
    update(letter);
    emit(1, "update");
    if (t.label(t.root()) == 0) {
      dead = true;
      return;
    }
    create_siblings(letter);
    stor_sort_all(t);
    emit(2, "create siblings");
    horizontal_merge();
    emit(3, "horizontal merge");
    vertical_merge();
    emit(4, "vertical merge");
  }

  void update(int letter)
  {
    for (int id : t.preorder())
      t.set_label(id, det.letter_successors(t.label(id), letter));
  }

  IndexSet g_child_h(IndexSet h_parent, int j) const
  {
    // h(tau) - max([0..j) cap ({0} u Mini([k]-h(tau)))); removing 0 is a no-op
    IndexSet mini = det.calc_.mini(full_index_set(det.k_eff()) & ~h_parent);
    int best = 0;
    for (int i : indices_of(mini))
      if (i < j)
        best = std::max(best, i);
    return best == 0 ? h_parent : h_parent & ~index_bit(best);
  }

  // pairs whose G became covered at this node's index label: they will never
  // get a drop slot of their own, so their B is watched here
  IndexSet covered_here(IndexSet h) const
  {
    IndexSet dropped = full_index_set(det.k_eff()) & ~h;
    return det.calc_.cover(dropped) & ~dropped;
  }

  void create_siblings(int)
  {
    // case (b) runs on the post-(a) label in every mode: a node's B-visitors
    // must leave even when its G-visitors graduated the same step, or the
    // node would keep states that break its B-avoidance certificate
    auto visit = [&](auto&& self, int parent) -> void {
      auto snapshot = t.kids(parent); // children present at loop entry
      IndexSet parent_cov = covered_here(t.hset(parent));
      for (int c : snapshot) {
        int j = t.j_value(c);
        if (j >= 1) {
          StateSet g_hit = t.label(c) & det.pairs_.g[j];
          if (g_hit) {
            t.add_child(parent, g_hit, g_child_h(t.hset(parent), j));
            t.remove_states_in_subtree(c, g_hit);
          }
        }
        StateSet watch = j >= 1 ? det.pairs_.b[j] : 0;
        // B sets of pairs newly covered at this edge
        for (int p : indices_of(covered_here(t.hset(c)) & ~parent_cov))
          watch |= det.pairs_.b[p];
        StateSet b_hit = t.label(c) & watch;
        if (b_hit) {
          t.add_child(parent, b_hit, t.hset(c));
          t.remove_states_in_subtree(c, b_hit);
        }
      }
      for (int c : snapshot)
        if (!t.kids(c).empty())
          self(self, c);
    };
    visit(visit, t.root());
  }

  void horizontal_merge()
  {
    // per sibling group, every duplicated state survives only in the
    // minimal-j sibling (ties to the older, i.e. leftmost, one)
    std::deque<int> queue{t.root()};
    while (!queue.empty()) {
      int parent = queue.front();
      queue.pop_front();
      const auto& ks = t.kids(parent);
      if (ks.size() >= 2) {
        StateSet seen = 0, dup = 0;
        for (int c : ks) {
          dup |= t.label(c) & seen;
          seen |= t.label(c);
        }
        for (int q : states_of(dup)) {
          int keeper = -1, best_j = kMaxPairs + 1;
          for (int c : ks)
            if (state_in(t.label(c), q) && t.j_value(c) < best_j) {
              best_j = t.j_value(c);
              keeper = c;
            }
          for (int c : ks)
            if (c != keeper && state_in(t.label(c), q))
              t.remove_states_in_subtree(c, state_bit(q));
        }
      }
      for (int c : ks)
        queue.push_back(c);
    }
    for (int id : t.preorder())
      if (t.alive(id) && t.label(id) == 0) {
        std::vector<int> gone;
        t.remove_subtree(id, gone);
        for (int r : gone) {
          assert(t.label(r) == 0);
          if (is_source(r))
            removed3.push_back(r);
        }
      }
  }

  void vertical_merge()
  {
    IndexSet all = full_index_set(det.k_eff());
    auto visit = [&](auto&& self, int id) -> void {
      const auto& ks = t.kids(id);
      if (ks.empty()) {
        // a leaf whose obligations are exhausted fires the breakpoint
        // vacuously: its path edges certify every dropped and covered pair
        IndexSet h = t.hset(id);
        if ((h == 0 || det.calc_.mini(all & ~h) == 0) && is_source(id))
          accepting.push_back(id);
        return;
      }
      bool all_equal = true;
      for (int c : ks)
        if (t.hset(c) != t.hset(id))
          all_equal = false;
      if (all_equal) {
        std::vector<int> gone;
        t.remove_children(id, gone);
        for (int r : gone)
          if (is_source(r))
            removed4.push_back(r);
        assert(is_source(id)); // merging nodes are non-leaves, hence pre-existing
        if (is_source(id))
          accepting.push_back(id);
        return;
      }
      auto snapshot = ks;
      for (int c : snapshot)
        self(self, c);
    };
    visit(visit, t.root());
  }

  void create_children()
  {
    IndexSet all = full_index_set(det.k_eff());
    for (int id : t.preorder()) {
      if (!t.kids(id).empty())
        continue;
      int cur = id;
      while (t.hset(cur) != 0) {
        IndexSet m = det.calc_.mini(all & ~t.hset(cur));
        if (m == 0)
          break;
        cur = t.add_child(cur, t.label(id), t.hset(cur) & ~index_bit(max_index(m)));
      }
    }
  }

  void finish_checked(const char* ctx)
  {
    SafraTree canonical = t.canonicalized(mode);
    auto bad = check_invariants(canonical, mode, det.calc_, det.n(),
                                det.n() * (det.mu_eff() + 1));
    if (!bad.empty())
      throw construction_error(std::string(ctx) + " produced an invalid tree: " + bad.front());
    t = std::move(canonical);
  }
};

HSuccessorResult Determinizer::h_safra_successor(const SafraTree& tree, int letter,
                                                 TraceSink* trace) const
{
  if (letter < 0 || letter >= nsa_.alphabet.size)
    throw domain_error("letter out of range");
  auto carried = assign_names_mn(tree);
  Engine eng(*this, tree, TreeMode::h_safra, trace);
  eng.run(letter);

  HSuccessorResult out;
  if (eng.dead) {
    // the move dies: sink successor, every carried name rejecting
    out.tree = SafraTree::sink_tree(k_eff());
    for (int id : tree.preorder())
      out.sig.rej.push_back(carried[id]);
    std::sort(out.sig.rej.begin(), out.sig.rej.end());
    return out;
  }

  std::set<Name> rej;
  for (int id : eng.removed3)
    rej.insert(carried[id]);
  for (int id : eng.accepting)
    out.sig.acc.push_back(carried[id]);
  std::sort(out.sig.acc.begin(), out.sig.acc.end());

  // step 5: renamed survivors reject under their carried name
  auto renamed_now = assign_names_mn(eng.t);
  for (int id : eng.t.preorder())
    if (eng.is_source(id) && !(renamed_now[id] == carried[id]))
      rej.insert(carried[id]);
  eng.emit(5, "rename");

  eng.create_children();
  eng.emit(6, "create children");
  eng.finish_checked("h-safra successor");

  out.tree = std::move(eng.t);
  out.sig.rej.assign(rej.begin(), rej.end());
  return out;
}

LirSuccessorResult Determinizer::lir_successor(const SafraTree& tree, int letter,
                                               TraceSink* trace) const
{
  if (letter < 0 || letter >= nsa_.alphabet.size)
    throw domain_error("letter out of range");
  std::vector<int> src_pos(tree.arena_size(), 0);
  {
    auto lir = tree.lir_order();
    for (size_t r = 0; r < lir.size(); ++r)
      src_pos[lir[r]] = static_cast<int>(r) + 1;
  }
  Engine eng(*this, tree, TreeMode::lir, trace);
  eng.run(letter);

  LirSuccessorResult out;
  if (eng.dead) {
    // short-circuited to the sink; the transition carries the top odd priority
    out.tree = SafraTree::sink_tree(k_eff());
    return out;
  }

  // a source node is rejecting iff its LIR position changed; the earliest
  // changed position is the earliest removal
  int first_removed = 0;
  for (int id : eng.removed3)
    if (first_removed == 0 || src_pos[id] < first_removed)
      first_removed = src_pos[id];
  for (int id : eng.removed4)
    if (first_removed == 0 || src_pos[id] < first_removed)
      first_removed = src_pos[id];
  int first_accepting = 0;
  for (int id : eng.accepting)
    if (first_accepting == 0 || src_pos[id] < first_accepting)
      first_accepting = src_pos[id];

  if (first_removed != 0 || first_accepting != 0) {
    out.sig.has_event = true;
    if (first_removed != 0 && (first_accepting == 0 || first_removed <= first_accepting)) {
      out.sig.rejecting = true;
      out.sig.position = first_removed;
    } else {
      out.sig.rejecting = false;
      out.sig.position = first_accepting;
    }
  }
  if (out.sig.has_event && out.sig.rejecting && out.sig.position == 1)
    throw construction_error("root reported rejecting on a live move");

  eng.emit(5, "rename");
  eng.create_children();
  eng.emit(6, "create children");
  eng.finish_checked("lir successor");
  out.tree = std::move(eng.t);
  return out;
}

MuSafraTree Determinizer::mu_safra_successor(const MuSafraTree& mu_tree, int letter,
                                             TraceSink* trace) const
{
  if (letter < 0 || letter >= nsa_.alphabet.size)
    throw domain_error("letter out of range");
  const SafraTree& tree = mu_tree.tree;
  std::vector<MuName> carried(tree.arena_size());
  for (int id : tree.preorder())
    carried[id] = tree.mu_name(id);

  Engine eng(*this, tree, TreeMode::mu, trace);
  eng.run(letter); // step 1 also resets E and F (collected fresh below)

  MuSafraTree out;
  if (eng.dead) {
    out.tree = SafraTree::sink_tree(k_eff());
    assign_names_mb(out.tree, {}, n());
    return out;
  }

  std::set<MuName> e, f;
  for (int id : eng.removed3)
    if (carried[id].defined())
      e.insert(carried[id]);

  // step 5: batch renaming per Rule 2; renamed survivors join E
  auto after = assign_names_mb(eng.t, carried, n());
  for (int id : eng.t.preorder())
    if (eng.is_source(id) && !(after[id] == carried[id]))
      e.insert(carried[id]);
  eng.emit(5, "rename");

  // a node both accepting and renamed keeps only its E entry (E and F stay
  // disjoint; the broken name must not be credited)
  for (int id : eng.accepting)
    if (!e.count(carried[id]))
      f.insert(carried[id]);

  eng.create_children();
  assign_names_mb(eng.t, after, n()); // extends spines; survivor names stable
  eng.emit(6, "create children");
  eng.finish_checked("mu-safra successor");

  out.tree = std::move(eng.t);
  out.e_names.assign(e.begin(), e.end());
  out.f_names.assign(f.begin(), f.end());
  auto bad = check_invariants(out.tree, TreeMode::mu, calc_, n(), n() * (mu_eff() + 1),
                              &out.e_names, &out.f_names);
  if (!bad.empty())
    throw construction_error("mu-safra successor produced invalid E/F sets: " + bad.front());
  return out;
}

namespace {

// single sink state rejecting everything; used when no run can satisfy the
// merged empty-G obligation
BuildResult sink_only(const Determinizer& det, DetKind kind, int top_priority)
{
  BuildResult res;
  DetAutomaton& aut = res.automaton;
  aut.kind = kind;
  aut.num_states = 1;
  aut.sigma = det.nsa().alphabet.size;
  aut.initial = 0;
  aut.sink = 0;
  aut.step.assign(aut.sigma, 0);
  aut.source_n = det.n();
  aut.source_k = det.k();
  switch (kind) {
  case DetKind::rabin_transitions:
    aut.t_acc.resize(aut.sigma);
    aut.t_rej.resize(aut.sigma);
    res.rabin_sigs.resize(aut.sigma);
    break;
  case DetKind::parity_transitions:
    aut.priority.assign(aut.sigma, top_priority);
    aut.max_priority = top_priority;
    break;
  case DetKind::rabin_states:
    break;
  }
  res.trees.push_back(SafraTree::sink_tree(det.k_eff()));
  if (kind == DetKind::rabin_states) {
    MuSafraTree sink;
    sink.tree = res.trees.back();
    res.mu_trees.push_back(std::move(sink));
  }
  aut.validate();
  return res;
}

struct Closure {
  std::unordered_map<std::string, int> index;
  std::deque<int> frontier;

  int intern(const std::string& key, int cap)
  {
    auto it = index.find(key);
    if (it != index.end())
      return it->second;
    int id = static_cast<int>(index.size());
    if (id >= cap)
      throw capacity_error("state cap of " + std::to_string(cap) + " reachable states exceeded");
    index.emplace(key, id);
    frontier.push_back(id);
    return id;
  }
};

template <typename Names>
std::vector<int> name_ids(const Names& names, const std::map<typename Names::value_type, int>& ids)
{
  std::vector<int> out;
  out.reserve(names.size());
  for (const auto& nm : names)
    out.push_back(ids.at(nm));
  return out;
}

} // namespace

BuildResult build_drta(const StreettNSA& nsa, const BuildOptions& opts)
{
  Determinizer det(nsa);
  int sigma = nsa.alphabet.size;
  if (det.always_empty())
    return sink_only(det, DetKind::rabin_transitions, 0);

  BuildResult res;
  Closure cl;
  std::vector<RabinSignature> sigs; // per transition
  std::vector<int> step;
  int sink = -1;

  SafraTree init = det.initial_tree(TreeMode::h_safra);
  cl.intern(canonical_encode(init, TreeMode::h_safra), opts.state_cap);
  res.trees.push_back(init);

  while (!cl.frontier.empty()) {
    int s = cl.frontier.front();
    cl.frontier.pop_front();
    SafraTree tree = res.trees[s]; // successor may grow res.trees
    for (int a = 0; a < sigma; ++a) {
      int target;
      RabinSignature sig;
      if (tree.is_sink()) {
        target = s; // sink self-loop; joins every reject set at assembly
      } else {
        auto suc = det.h_safra_successor(tree, a);
        sig = std::move(suc.sig);
        target = cl.intern(canonical_encode(suc.tree, TreeMode::h_safra), opts.state_cap);
        if (target == static_cast<int>(res.trees.size()))
          res.trees.push_back(suc.tree);
        if (suc.tree.is_sink())
          sink = target;
      }
      step.push_back(target);
      sigs.push_back(std::move(sig));
    }
  }

  int num_states = static_cast<int>(res.trees.size());
  std::set<Name> universe;
  for (const auto& sig : sigs) {
    universe.insert(sig.acc.begin(), sig.acc.end());
    universe.insert(sig.rej.begin(), sig.rej.end());
  }
  std::map<Name, int> pair_id;
  DetAutomaton& aut = res.automaton;
  for (const auto& nm : universe) {
    pair_id.emplace(nm, static_cast<int>(aut.pair_names.size()));
    aut.pair_names.push_back(nm.to_string());
  }

  aut.kind = DetKind::rabin_transitions;
  aut.num_states = num_states;
  aut.sigma = sigma;
  aut.initial = 0;
  aut.sink = sink;
  aut.step = std::move(step);
  aut.source_n = nsa.n;
  aut.source_k = nsa.k();
  aut.t_acc.resize(sigs.size());
  aut.t_rej.resize(sigs.size());
  std::vector<int> every(aut.pair_names.size());
  for (size_t i = 0; i < every.size(); ++i)
    every[i] = static_cast<int>(i);
  for (size_t tid = 0; tid < sigs.size(); ++tid) {
    int from = static_cast<int>(tid) / sigma;
    if (sink >= 0 && from == sink) {
      aut.t_rej[tid] = every; // sink moves reject every name
      continue;
    }
    aut.t_acc[tid] = name_ids(sigs[tid].acc, pair_id);
    aut.t_rej[tid] = name_ids(sigs[tid].rej, pair_id);
  }
  res.rabin_sigs = std::move(sigs);
  for (int s = 0; s < num_states; ++s)
    if (!res.trees[s].is_sink())
      res.max_tree_nodes = std::max(res.max_tree_nodes, res.trees[s].size());
  aut.validate();
  return res;
}

BuildResult build_dpta(const StreettNSA& nsa, const BuildOptions& opts)
{
  Determinizer det(nsa);
  int sigma = nsa.alphabet.size;
  int top = 2 * nsa.n * (det.mu_eff() + 1) + 1;
  if (det.always_empty()) // no tree positions exist; stay inside 2n(mu+1)+1
    return sink_only(det, DetKind::parity_transitions, 2 * nsa.n * (nsa.mu() + 1) + 1);

  BuildResult res;
  Closure cl;
  std::vector<int> step;
  std::vector<int> prio;
  int sink = -1;

  SafraTree init = det.initial_tree(TreeMode::lir);
  cl.intern(canonical_encode(init, TreeMode::lir), opts.state_cap);
  res.trees.push_back(init);

  while (!cl.frontier.empty()) {
    int s = cl.frontier.front();
    cl.frontier.pop_front();
    SafraTree tree = res.trees[s];
    for (int a = 0; a < sigma; ++a) {
      int target;
      int p;
      if (tree.is_sink()) {
        target = s;
        p = top;
      } else {
        auto suc = det.lir_successor(tree, a);
        p = priority_of(suc.sig, nsa.n, det.mu_eff());
        target = cl.intern(canonical_encode(suc.tree, TreeMode::lir), opts.state_cap);
        if (target == static_cast<int>(res.trees.size()))
          res.trees.push_back(suc.tree);
        if (suc.tree.is_sink())
          sink = target;
      }
      step.push_back(target);
      prio.push_back(p);
    }
  }

  DetAutomaton& aut = res.automaton;
  aut.kind = DetKind::parity_transitions;
  aut.num_states = static_cast<int>(res.trees.size());
  aut.sigma = sigma;
  aut.initial = 0;
  aut.sink = sink;
  aut.step = std::move(step);
  aut.priority = std::move(prio);
  aut.max_priority = top;
  aut.source_n = nsa.n;
  aut.source_k = nsa.k();
  for (int s = 0; s < aut.num_states; ++s)
    if (!res.trees[s].is_sink())
      res.max_tree_nodes = std::max(res.max_tree_nodes, res.trees[s].size());
  aut.validate();
  return res;
}

BuildResult build_dra(const StreettNSA& nsa, const BuildOptions& opts)
{
  Determinizer det(nsa);
  int sigma = nsa.alphabet.size;
  if (det.always_empty())
    return sink_only(det, DetKind::rabin_states, 0);

  BuildResult res;
  Closure cl;
  std::vector<int> step;
  int sink = -1;

  MuSafraTree init = det.initial_mu_tree();
  cl.intern(canonical_encode(init.tree, TreeMode::mu, &init.e_names, &init.f_names),
            opts.state_cap);
  res.mu_trees.push_back(init);

  while (!cl.frontier.empty()) {
    int s = cl.frontier.front();
    cl.frontier.pop_front();
    MuSafraTree tree = res.mu_trees[s];
    for (int a = 0; a < sigma; ++a) {
      int target;
      if (tree.tree.is_sink()) {
        target = s;
      } else {
        MuSafraTree suc = det.mu_safra_successor(tree, a);
        target = cl.intern(canonical_encode(suc.tree, TreeMode::mu, &suc.e_names, &suc.f_names),
                           opts.state_cap);
        if (target == static_cast<int>(res.mu_trees.size())) {
          bool is_sink = suc.tree.is_sink();
          res.mu_trees.push_back(std::move(suc));
          if (is_sink)
            sink = target;
        }
      }
      step.push_back(target);
    }
  }

  DetAutomaton& aut = res.automaton;
  aut.kind = DetKind::rabin_states;
  aut.num_states = static_cast<int>(res.mu_trees.size());
  aut.sigma = sigma;
  aut.initial = 0;
  aut.sink = sink;
  aut.step = std::move(step);
  aut.source_n = nsa.n;
  aut.source_k = nsa.k();

  std::set<MuName> universe;
  for (const auto& mt : res.mu_trees) {
    universe.insert(mt.e_names.begin(), mt.e_names.end());
    universe.insert(mt.f_names.begin(), mt.f_names.end());
  }
  for (const MuName& nm : universe) {
    RabinPair pair;
    for (int s = 0; s < aut.num_states; ++s) {
      const auto& mt = res.mu_trees[s];
      if (std::binary_search(mt.f_names.begin(), mt.f_names.end(), nm))
        pair.accept.push_back(s);
      if (std::binary_search(mt.e_names.begin(), mt.e_names.end(), nm))
        pair.reject.push_back(s);
    }
    aut.state_pairs.push_back(std::move(pair));
    aut.pair_names.push_back(nm.to_string());
  }
  for (int s = 0; s < aut.num_states; ++s) {
    res.trees.push_back(res.mu_trees[s].tree);
    if (!res.mu_trees[s].tree.is_sink())
      res.max_tree_nodes = std::max(res.max_tree_nodes, res.mu_trees[s].tree.size());
  }
  aut.validate();
  return res;
}

} // namespace streett
