#include "streett/lasso_oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "streett/acceptance.hpp"

namespace streett {

ProductGraph build_product(const StreettNSA& nsa, const Lasso& lasso)
{
  if (lasso.cycle.empty())
    throw domain_error("lasso cycle must be nonempty");
  for (const auto* part : {&lasso.prefix, &lasso.cycle})
    for (int a : *part)
      if (a < 0 || a >= nsa.alphabet.size)
        throw domain_error("lasso letter " + std::to_string(a) + " outside the alphabet");

  int pre = static_cast<int>(lasso.prefix.size());
  int period = pre + static_cast<int>(lasso.cycle.size());
  ProductGraph g;
  g.vertices = nsa.n * period;
  g.out.resize(g.vertices);
  g.state_of.resize(g.vertices);
  g.reachable.assign(g.vertices, 0);

  auto vertex = [&](int q, int phase) { return q * period + phase; };
  for (int q = 0; q < nsa.n; ++q)
    for (int p = 0; p < period; ++p)
      g.state_of[vertex(q, p)] = q;

  // adjacency of the NSA indexed by (src, letter)
  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<size_t>(nsa.n) * nsa.alphabet.size);
  for (size_t id = 0; id < nsa.transitions.size(); ++id) {
    const auto& t = nsa.transitions[id];
    adj[static_cast<size_t>(t.src) * nsa.alphabet.size + t.letter].emplace_back(
        t.dst, static_cast<int>(id));
  }

  for (int q = 0; q < nsa.n; ++q)
    for (int p = 0; p < period; ++p) {
      int letter = p < pre ? lasso.prefix[p] : lasso.cycle[p - pre];
      int next = p + 1 < period ? p + 1 : pre;
      for (auto [dst, id] : adj[static_cast<size_t>(q) * nsa.alphabet.size + letter])
        g.out[vertex(q, p)].push_back(ProductGraph::Edge{vertex(dst, next), id});
    }

  std::deque<int> queue;
  for (int q : states_of(nsa.initial)) {
    g.reachable[vertex(q, 0)] = 1;
    queue.push_back(vertex(q, 0));
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& e : g.out[v])
      if (!g.reachable[e.to]) {
        g.reachable[e.to] = 1;
        queue.push_back(e.to);
      }
  }
  return g;
}

namespace {

// Tarjan over the still-alive subgraph.
struct SccFinder {
  const ProductGraph& g;
  const std::vector<char>& vertex_alive;
  const std::vector<std::vector<char>>& edge_alive;

  std::vector<int> index, low, comp;
  std::vector<char> on_stack;
  std::vector<int> stack;
  int counter = 0, comps = 0;

  SccFinder(const ProductGraph& graph, const std::vector<char>& va,
            const std::vector<std::vector<char>>& ea)
    : g(graph), vertex_alive(va), edge_alive(ea),
      index(graph.vertices, -1), low(graph.vertices, 0), comp(graph.vertices, -1),
      on_stack(graph.vertices, 0)
  {}

  void strongconnect(int v)
  {
    // iterative to keep deep product graphs off the call stack
    struct Frame {
      int v;
      size_t edge = 0;
    };
    std::vector<Frame> frames{{v}};
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge == 0) {
        index[f.v] = low[f.v] = counter++;
        stack.push_back(f.v);
        on_stack[f.v] = 1;
      }
      bool descended = false;
      while (f.edge < g.out[f.v].size()) {
        size_t ei = f.edge++;
        if (!edge_alive[f.v][ei])
          continue;
        int w = g.out[f.v][ei].to;
        if (!vertex_alive[w])
          continue;
        if (index[w] < 0) {
          frames.push_back(Frame{w});
          descended = true;
          break;
        }
        if (on_stack[w])
          low[f.v] = std::min(low[f.v], index[w]);
      }
      if (descended)
        continue;
      if (low[f.v] == index[f.v]) {
        for (;;) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comps;
          if (w == f.v)
            break;
        }
        ++comps;
      }
      int done = f.v;
      frames.pop_back();
      if (!frames.empty())
        low[frames.back().v] = std::min(low[frames.back().v], low[done]);
    }
  }

  std::vector<std::vector<int>> run(const std::vector<int>& candidates)
  {
    for (int v : candidates)
      if (vertex_alive[v] && index[v] < 0)
        strongconnect(v);
    std::vector<std::vector<int>> out(comps);
    for (int v : candidates)
      if (vertex_alive[v])
        out[comp[v]].push_back(v);
    return out;
  }
};

} // namespace

bool streett_good_cycle_exists(const ProductGraph& g, const std::vector<StreettPair>& pairs,
                               PairBasis basis)
{
  std::vector<char> vertex_alive(g.reachable.begin(), g.reachable.end());
  std::vector<std::vector<char>> edge_alive(g.vertices);
  for (int v = 0; v < g.vertices; ++v)
    edge_alive[v].assign(g.out[v].size(), 1);

  std::function<bool(const std::vector<int>&)> solve = [&](const std::vector<int>& candidates) {
    SccFinder finder(g, vertex_alive, edge_alive);
    auto sccs = finder.run(candidates);
    for (auto& comp : sccs) {
      std::vector<char> in_comp(g.vertices, 0);
      for (int v : comp)
        in_comp[v] = 1;

      StateSet comp_states = 0;
      std::vector<int> comp_transitions;
      bool has_edge = false;
      for (int v : comp)
        for (size_t ei = 0; ei < g.out[v].size(); ++ei) {
          if (!edge_alive[v][ei])
            continue;
          const auto& e = g.out[v][ei];
          if (!vertex_alive[e.to] || !in_comp[e.to])
            continue;
          has_edge = true;
          comp_states |= state_bit(g.state_of[v]) | state_bit(g.state_of[e.to]);
          comp_transitions.push_back(e.transition);
        }
      if (!has_edge)
        continue; // trivial component, no cycle through it

      std::sort(comp_transitions.begin(), comp_transitions.end());
      comp_transitions.erase(std::unique(comp_transitions.begin(), comp_transitions.end()),
                             comp_transitions.end());

      StateSet bad_states = 0;
      std::vector<int> bad_transitions;
      for (const auto& p : pairs) {
        if (basis == PairBasis::states) {
          if ((comp_states & p.g_states) == 0 && (comp_states & p.b_states) != 0)
            bad_states |= p.b_states;
        } else {
          auto hits = [&](const std::vector<int>& side) {
            for (int id : comp_transitions)
              if (std::binary_search(side.begin(), side.end(), id))
                return true;
            return false;
          };
          if (!hits(p.g_transitions) && hits(p.b_transitions))
            bad_transitions.insert(bad_transitions.end(), p.b_transitions.begin(),
                                   p.b_transitions.end());
        }
      }

      if (basis == PairBasis::states ? bad_states == 0 : bad_transitions.empty())
        return true; // every pair satisfied by this component's cycle

      if (basis == PairBasis::states) {
        std::vector<int> survivors;
        for (int v : comp) {
          if (state_in(bad_states, g.state_of[v]))
            vertex_alive[v] = 0;
          else
            survivors.push_back(v);
        }
        if (!survivors.empty() && solve(survivors))
          return true;
      } else {
        std::sort(bad_transitions.begin(), bad_transitions.end());
        for (int v : comp)
          for (size_t ei = 0; ei < g.out[v].size(); ++ei)
            if (edge_alive[v][ei] &&
                std::binary_search(bad_transitions.begin(), bad_transitions.end(),
                                   g.out[v][ei].transition))
              edge_alive[v][ei] = 0;
        if (solve(comp))
          return true;
      }
    }
    return false;
  };

  std::vector<int> all;
  for (int v = 0; v < g.vertices; ++v)
    if (vertex_alive[v])
      all.push_back(v);
  return !all.empty() && solve(all);
}

bool nsa_accepts(const StreettNSA& nsa, const Lasso& lasso)
{
  ProductGraph g = build_product(nsa, lasso);
  return streett_good_cycle_exists(g, nsa.pairs, nsa.basis);
}

bool det_accepts(const DetAutomaton& aut, const Lasso& lasso)
{
  if (lasso.cycle.empty())
    throw domain_error("lasso cycle must be nonempty");
  for (const auto* part : {&lasso.prefix, &lasso.cycle})
    for (int a : *part)
      if (a < 0 || a >= aut.sigma)
        throw domain_error("lasso letter outside the alphabet");

  int cur = aut.initial;
  for (int a : lasso.prefix)
    cur = aut.step[aut.transition(cur, a)];

  std::unordered_map<int, int> seen_at; // state at cycle phase 0 -> pump index
  std::vector<std::vector<int>> pump_transitions;
  std::vector<std::vector<int>> pump_states;
  int first = -1;
  for (;;) {
    auto it = seen_at.find(cur);
    if (it != seen_at.end()) {
      first = it->second;
      break;
    }
    seen_at.emplace(cur, static_cast<int>(pump_transitions.size()));
    std::vector<int> ts, ss;
    for (int a : lasso.cycle) {
      ts.push_back(aut.transition(cur, a));
      ss.push_back(cur);
      cur = aut.step[ts.back()];
    }
    ss.push_back(cur);
    pump_transitions.push_back(std::move(ts));
    pump_states.push_back(std::move(ss));
  }

  CycleSummary cyc;
  for (size_t p = first; p < pump_transitions.size(); ++p) {
    cyc.transitions.insert(cyc.transitions.end(), pump_transitions[p].begin(),
                           pump_transitions[p].end());
    cyc.states.insert(cyc.states.end(), pump_states[p].begin(), pump_states[p].end());
  }
  auto dedupe = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(cyc.transitions);
  dedupe(cyc.states);
  cyc.has_transitions = true;
  cyc.has_states = true;

  switch (aut.kind) {
  case DetKind::rabin_transitions: {
    std::vector<char> acc_hit(aut.pair_names.size(), 0), rej_hit(aut.pair_names.size(), 0);
    for (int t : cyc.transitions) {
      for (int id : aut.t_acc[t])
        acc_hit[id] = 1;
      for (int id : aut.t_rej[t])
        rej_hit[id] = 1;
    }
    for (size_t i = 0; i < acc_hit.size(); ++i)
      if (acc_hit[i] && !rej_hit[i])
        return true;
    return false;
  }
  case DetKind::parity_transitions: {
    for (int t : cyc.transitions)
      cyc.priorities.push_back(aut.priority[t]);
    return evaluate_parity(cyc);
  }
  case DetKind::rabin_states:
    return evaluate_rabin(cyc.states, aut.state_pairs);
  }
  return false;
}

} // namespace streett
