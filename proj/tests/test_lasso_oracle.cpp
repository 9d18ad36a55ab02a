#include <doctest.h>

#include <deque>
#include <random>

#include "streett/acceptance.hpp"
#include "streett/determinize.hpp"
#include "streett/generators.hpp"
#include "streett/lasso_oracle.hpp"
#include "test_helpers.hpp"

using namespace streett;
using namespace streett::testing;

namespace {

// hand-rolled directed graph wrapped as a ProductGraph for the cycle search
ProductGraph make_graph(int vertices, const std::vector<std::tuple<int, int, int>>& edges,
                        const std::vector<int>& initial)
{
  ProductGraph g;
  g.vertices = vertices;
  g.out.resize(vertices);
  g.state_of.resize(vertices);
  for (int v = 0; v < vertices; ++v)
    g.state_of[v] = v;
  for (auto [from, to, id] : edges)
    g.out[from].push_back(ProductGraph::Edge{to, id});
  g.reachable.assign(vertices, 0);
  std::deque<int> queue(initial.begin(), initial.end());
  for (int v : initial)
    g.reachable[v] = 1;
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

// exponential reference: enumerate vertex subsets, check induced strong
// connectivity with at least one edge, then the Streett predicate
bool brute_good_cycle(const ProductGraph& g, const std::vector<StreettPair>& pairs)
{
  int n = g.vertices;
  for (int mask = 1; mask < (1 << n); ++mask) {
    bool all_reachable = true;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1)
        all_reachable = all_reachable && g.reachable[v];
    if (!all_reachable)
      continue;

    // strong connectivity of the induced subgraph
    auto reaches = [&](int from) {
      std::vector<char> seen(n, 0);
      std::deque<int> queue{from};
      seen[from] = 1;
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto& e : g.out[v])
          if (((mask >> e.to) & 1) && !seen[e.to]) {
            seen[e.to] = 1;
            queue.push_back(e.to);
          }
      }
      return seen;
    };
    int first = std::countr_zero(static_cast<unsigned>(mask));
    auto from_first = reaches(first);
    bool strongly_connected = true;
    bool has_edge = false;
    for (int v = 0; v < n; ++v) {
      if (!((mask >> v) & 1))
        continue;
      if (!from_first[v])
        strongly_connected = false;
      auto back = reaches(v);
      if (!back[first])
        strongly_connected = false;
      for (const auto& e : g.out[v])
        if ((mask >> e.to) & 1)
          has_edge = true;
    }
    if (!strongly_connected || !has_edge)
      continue;

    CycleSummary cyc;
    cyc.has_states = true;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1)
        cyc.states.push_back(g.state_of[v]);
    if (evaluate_streett(cyc, pairs, PairBasis::states))
      return true;
  }
  return false;
}

} // namespace

TEST_CASE("good-cycle search base cases")
{
  // single self-loop, vacuous pairs
  auto loop = make_graph(1, {{0, 0, 0}}, {0});
  CHECK(streett_good_cycle_exists(loop, {}, PairBasis::states));

  // two-vertex cycle through B with G unreachable
  auto two = make_graph(3, {{0, 1, 0}, {1, 0, 1}}, {0});
  std::vector<StreettPair> pairs{StreettPair{state_bit(2), state_bit(1), {}, {}}};
  CHECK_FALSE(streett_good_cycle_exists(two, pairs, PairBasis::states));
}

TEST_CASE("good-cycle search matches brute force on random graphs")
{
  std::mt19937_64 rng(37);
  for (int round = 0; round < 600; ++round) {
    int n = 2 + static_cast<int>(rng() % 7);
    std::vector<std::tuple<int, int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (rng() % 100 < 28)
          edges.emplace_back(a, b, a * n + b);
    auto g = make_graph(n, edges, {0});
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<StreettPair> pairs;
    for (int i = 0; i < k; ++i)
      pairs.push_back(StreettPair{rng() & full_state_set(n), rng() & full_state_set(n), {}, {}});
    CAPTURE(round);
    REQUIRE(streett_good_cycle_exists(g, pairs, PairBasis::states)
            == brute_good_cycle(g, pairs));
  }
}

TEST_CASE("nsa membership fixtures")
{
  // k = 0: membership is reachability of any cycle
  StreettNSA free;
  free.n = 2;
  free.alphabet.size = 1;
  free.initial = state_bit(0);
  free.transitions = {Transition{0, 0, 1}, Transition{1, 0, 1}};
  CHECK(nsa_accepts(free, Lasso{{}, {0}}));
  StreettNSA dead = free;
  dead.transitions = {Transition{0, 0, 1}}; // q1 has no moves
  CHECK_FALSE(nsa_accepts(dead, Lasso{{}, {0}}));

  // the run may settle in q1 and satisfy the pair
  StreettNSA nsa;
  nsa.n = 2;
  nsa.alphabet.size = 1;
  nsa.initial = state_bit(0);
  nsa.transitions = {Transition{0, 0, 0}, Transition{0, 0, 1}, Transition{1, 0, 1}};
  nsa.pairs = {StreettPair{state_bit(1), state_bit(0), {}, {}}};
  CHECK(nsa_accepts(nsa, Lasso{{}, {0}}));
  nsa.transitions = {Transition{0, 0, 0}, Transition{0, 0, 1}};
  CHECK_FALSE(nsa_accepts(nsa, Lasso{{}, {0}})); // only run loops on q0 against B

  CHECK_THROWS_AS(nsa_accepts(nsa, Lasso{{}, {7}}), domain_error);
  CHECK_THROWS_AS(nsa_accepts(nsa, Lasso{{}, {}}), domain_error);
}

TEST_CASE("membership is invariant under lasso unrolling")
{
  std::mt19937_64 rng(41);
  for (int round = 0; round < 60; ++round) {
    GenSpec spec{1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), 2, 0.5, 0.5,
                 rng()};
    StreettNSA nsa = random_nsa(spec);
    auto dpta = build_dpta(nsa);
    std::vector<int> u, v;
    for (int i = 0; i < static_cast<int>(rng() % 3); ++i)
      u.push_back(static_cast<int>(rng() % 2));
    for (int i = 0; i < 1 + static_cast<int>(rng() % 2); ++i)
      v.push_back(static_cast<int>(rng() % 2));
    Lasso base{u, v};
    Lasso shifted{u, v};
    shifted.prefix.insert(shifted.prefix.end(), v.begin(), v.end());
    Lasso doubled{u, v};
    doubled.cycle.insert(doubled.cycle.end(), v.begin(), v.end());
    bool b = nsa_accepts(nsa, base);
    REQUIRE(nsa_accepts(nsa, shifted) == b);
    REQUIRE(nsa_accepts(nsa, doubled) == b);
    bool d = det_accepts(dpta.automaton, base);
    REQUIRE(det_accepts(dpta.automaton, shifted) == d);
    REQUIRE(det_accepts(dpta.automaton, doubled) == d);
  }
}

TEST_CASE("removing a pair never shrinks the accepted set")
{
  std::mt19937_64 rng(43);
  for (int round = 0; round < 60; ++round) {
    GenSpec spec{1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3), 2, 0.5,
                 0.5, rng()};
    StreettNSA nsa = random_nsa(spec);
    StreettNSA fewer = nsa;
    fewer.pairs.erase(fewer.pairs.begin() + static_cast<long>(rng() % fewer.pairs.size()));
    for (const Lasso& l : enumerate_lassos(2, 1, 2))
      if (nsa_accepts(nsa, l))
        REQUIRE(nsa_accepts(fewer, l));
  }
}

TEST_CASE("deterministic membership through the worked fixture")
{
  StreettNSA nsa = one_state_fixture();
  auto drta = build_drta(nsa);
  auto dpta = build_dpta(nsa);
  CHECK(det_accepts(drta.automaton, Lasso{{}, {0}}));
  CHECK(det_accepts(dpta.automaton, Lasso{{}, {0}}));

  // a dead letter sends every lasso using it into the sink
  StreettNSA partial = one_state_fixture();
  partial.alphabet.size = 2;
  auto sink_dpta = build_dpta(partial);
  CHECK(det_accepts(sink_dpta.automaton, Lasso{{}, {0}}));
  CHECK_FALSE(det_accepts(sink_dpta.automaton, Lasso{{}, {1}}));
  CHECK_FALSE(det_accepts(sink_dpta.automaton, Lasso{{0}, {0, 1}}));
}

TEST_CASE("transition-based pairs are evaluated on the component's edges")
{
  // self-loop marked good for pair 1 via its transition only
  StreettNSA nsa;
  nsa.n = 1;
  nsa.alphabet.size = 2;
  nsa.initial = state_bit(0);
  nsa.transitions = {Transition{0, 0, 0}, Transition{0, 1, 0}};
  nsa.basis = PairBasis::transitions;
  nsa.pairs = {StreettPair{0, 0, {0}, {1}}}; // G = {letter 0 loop}, B = {letter 1 loop}
  CHECK(nsa_accepts(nsa, Lasso{{}, {0}}));
  CHECK(nsa_accepts(nsa, Lasso{{}, {0, 1}})); // G hit alongside B
  CHECK_FALSE(nsa_accepts(nsa, Lasso{{}, {1}}));
}
