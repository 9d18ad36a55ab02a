#include <doctest.h>

#include <random>
#include <set>

#include "streett/determinize.hpp"
#include "streett/generators.hpp"
#include "streett/lasso_oracle.hpp"
#include "test_helpers.hpp"

using namespace streett;
using namespace streett::testing;

TEST_CASE("initial tree of the one-state fixture")
{
  Determinizer det(one_state_fixture());
  SafraTree t = det.initial_tree(TreeMode::lir);
  REQUIRE(t.size() == 2);
  CHECK(t.hset(t.root()) == index_bit(1));
  int leaf = t.kids(t.root()).front();
  CHECK(t.hset(leaf) == 0);
  CHECK(t.label(leaf) == state_bit(0));
  auto lir = t.lir_order();
  CHECK(lir.front() == t.root());
  auto names = assign_names_mn(t);
  CHECK(names[lir[0]].to_string() == "eps");
  CHECK(names[lir[1]].to_string() == "1^1");
}

TEST_CASE("initial tree with every pair trivial is the root alone")
{
  StreettNSA nsa = one_state_fixture();
  nsa.pairs = {StreettPair{0, 0, {}, {}}}; // G and B empty: no obligations survive
  Determinizer det(nsa);
  SafraTree t = det.initial_tree(TreeMode::h_safra);
  CHECK(t.size() == 1);
}

TEST_CASE("initial tree drops max Mini of the complement at each level")
{
  // worked four-pair family with B sets chosen so no pair subsumes another
  StreettNSA nsa;
  nsa.n = 3;
  nsa.alphabet.size = 1;
  nsa.initial = full_state_set(3);
  for (int q = 0; q < 3; ++q)
    nsa.transitions.push_back(Transition{q, 0, q});
  GFamily fam = example1_family();
  std::vector<StateSet> bs = {state_bit(2), state_bit(1), state_bit(1), state_bit(0)};
  for (int i = 0; i < 4; ++i)
    nsa.pairs.push_back(StreettPair{fam.g[i], bs[i], {}, {}});
  Determinizer det(nsa);
  REQUIRE(det.k_eff() == 4);
  SafraTree t = det.initial_tree(TreeMode::h_safra);
  CHECK(t.hset(t.root()) == full_index_set(4));
  int child = t.kids(t.root()).front();
  // Mini of the empty set is {2,4}; the chain drops the maximum, index 4
  CHECK(t.hset(child) == (full_index_set(4) & ~index_bit(4)));
}

TEST_CASE("transition-based pairs are rejected by the determinizer")
{
  StreettNSA nsa = one_state_fixture();
  nsa.basis = PairBasis::transitions;
  nsa.pairs = {StreettPair{0, 0, {0}, {}}};
  CHECK_THROWS_AS(Determinizer{nsa}, basis_error);
}

TEST_CASE("six-step successor on the one-state fixture")
{
  StreettNSA nsa = one_state_fixture();
  Determinizer det(nsa);
  SafraTree init = det.initial_tree(TreeMode::h_safra);
  auto suc = det.h_safra_successor(init, 0);

  CHECK(suc.tree.equal_structure(init, TreeMode::h_safra));
  REQUIRE(suc.sig.acc.size() == 1);
  CHECK(suc.sig.acc.front().to_string() == "eps");
  REQUIRE(suc.sig.rej.size() == 1);
  CHECK(suc.sig.rej.front().to_string() == "1^1");

  // repeated calls are reproducible byte for byte
  auto again = det.h_safra_successor(init, 0);
  CHECK(canonical_encode(again.tree, TreeMode::h_safra)
        == canonical_encode(suc.tree, TreeMode::h_safra));
  CHECK(again.sig == suc.sig);
}

TEST_CASE("a letter with no moves leads to the sink and rejects every carried name")
{
  StreettNSA nsa = one_state_fixture();
  nsa.alphabet.size = 2; // letter 1 has no transitions
  Determinizer det(nsa);
  SafraTree init = det.initial_tree(TreeMode::h_safra);
  auto suc = det.h_safra_successor(init, 1);
  CHECK(suc.tree.is_sink());
  CHECK(suc.sig.acc.empty());
  REQUIRE(suc.sig.rej.size() == 2);
  CHECK(suc.sig.rej[0].to_string() == "eps");
  CHECK(suc.sig.rej[1].to_string() == "1^1");
}

TEST_CASE("lir successor events on the one-state fixture")
{
  Determinizer det(one_state_fixture());
  SafraTree init = det.initial_tree(TreeMode::lir);
  auto suc = det.lir_successor(init, 0);
  CHECK(suc.sig.has_event);
  CHECK_FALSE(suc.sig.rejecting);
  CHECK(suc.sig.position == 1);
  CHECK(priority_of(suc.sig, 1, 1) == 2);
}

TEST_CASE("lir successor reports the minimal source position")
{
  // two states; q1 feeds the B set, so the leaf at position 2 is emptied
  StreettNSA nsa;
  nsa.n = 2;
  nsa.alphabet.size = 1;
  nsa.initial = full_state_set(2);
  nsa.transitions = {Transition{0, 0, 0}, Transition{1, 0, 1}};
  nsa.pairs = {StreettPair{state_bit(0), state_bit(1), {}, {}}};
  Determinizer det(nsa);
  SafraTree init = det.initial_tree(TreeMode::lir);
  REQUIRE(init.size() == 2);
  auto suc = det.lir_successor(init, 0);
  // the leaf loses q0 to a graduation and q1 to the B-kick: removed at position 2
  CHECK(suc.sig.has_event);
  CHECK(suc.sig.rejecting);
  CHECK(suc.sig.position == 2);
  CHECK(priority_of(suc.sig, 2, 1) == 3);
}

TEST_CASE("a stable exhausted leaf fires the breakpoint")
{
  // q0 loops outside both G and B: the pair holds by B-avoidance
  StreettNSA nsa;
  nsa.n = 2;
  nsa.alphabet.size = 1;
  nsa.initial = state_bit(0);
  nsa.transitions = {Transition{0, 0, 0}};
  nsa.pairs = {StreettPair{state_bit(1), state_bit(1), {}, {}}};
  Determinizer det(nsa);
  SafraTree init = det.initial_tree(TreeMode::h_safra);
  auto suc = det.h_safra_successor(init, 0);
  REQUIRE(suc.sig.acc.size() == 1);
  CHECK(suc.sig.acc.front().to_string() == "1^1");
  CHECK(suc.sig.rej.empty());
  Lasso l{{}, {0}};
  CHECK(nsa_accepts(nsa, l));
  CHECK(det_accepts(build_drta(nsa).automaton, l));
}

TEST_CASE("priority assignment")
{
  ParitySignature acc3{true, false, 3};
  CHECK(priority_of(acc3, 4, 3) == 6);
  ParitySignature rej2{true, true, 2};
  CHECK(priority_of(rej2, 4, 3) == 3);
  ParitySignature none{};
  CHECK(priority_of(none, 2, 1) == 9);
  ParitySignature rej1{true, true, 1};
  CHECK(priority_of(rej1, 2, 1) == 9); // bottom set shares the top odd index
  ParitySignature big{true, false, 5};
  CHECK_THROWS_AS(priority_of(big, 1, 1), domain_error);
}

TEST_CASE("worked fixture automata")
{
  StreettNSA nsa = one_state_fixture();
  auto drta = build_drta(nsa);
  CHECK(drta.automaton.num_states == 1);
  CHECK(drta.automaton.non_sink_states() == 1);
  REQUIRE(drta.automaton.pair_names.size() == 2);
  CHECK(drta.automaton.pair_names[0] == "eps");
  CHECK(drta.automaton.pair_names[1] == "1^1");

  auto dpta = build_dpta(nsa);
  CHECK(dpta.automaton.num_states == 1);
  CHECK(dpta.automaton.priority[0] == 2);

  auto dra = build_dra(nsa);
  CHECK(dra.automaton.num_states >= 1);

  Lasso l{{}, {0}};
  CHECK(nsa_accepts(nsa, l));
  CHECK(det_accepts(drta.automaton, l));
  CHECK(det_accepts(dpta.automaton, l));
  CHECK(det_accepts(dra.automaton, l));
}

TEST_CASE("with every pair empty the constructions accept exactly the live lassos")
{
  std::mt19937_64 rng(47);
  for (int round = 0; round < 25; ++round) {
    GenSpec spec{1 + static_cast<int>(rng() % 3), 0, 2, 0.4, 0.0, rng()};
    StreettNSA nsa = random_nsa(spec);
    nsa.pairs = {StreettPair{}, StreettPair{}}; // vacuous constraints
    auto drta = build_drta(nsa);
    auto dpta = build_dpta(nsa);
    for (const Lasso& l : enumerate_lassos(2, 1, 2)) {
      bool live = nsa_accepts(nsa, l); // pure reachability of a cycle
      CAPTURE(l.to_string());
      REQUIRE(det_accepts(drta.automaton, l) == live);
      REQUIRE(det_accepts(dpta.automaton, l) == live);
    }
  }
}

TEST_CASE("state cap raises a capacity error naming the cap")
{
  StreettNSA nsa = one_state_fixture();
  nsa.alphabet.size = 2;
  BuildOptions opts;
  opts.state_cap = 1; // the sink forced by the dead letter exceeds it
  try {
    build_drta(nsa, opts);
    FAIL("expected capacity_error");
  } catch (const capacity_error& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
}

TEST_CASE("signature names always come from the source tree")
{
  std::mt19937_64 rng(23);
  for (int round = 0; round < 60; ++round) {
    GenSpec spec{1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3), 2, 0.5,
                 0.5, rng()};
    StreettNSA nsa = random_nsa(spec);
    Determinizer det(nsa);
    SafraTree tree = det.initial_tree(TreeMode::h_safra);
    for (int step = 0; step < 6 && !tree.is_sink(); ++step) {
      auto carried = assign_names_mn(tree);
      std::set<Name> source_names;
      for (int id : tree.preorder())
        source_names.insert(carried[id]);
      auto suc = det.h_safra_successor(tree, static_cast<int>(rng() % 2));
      for (const Name& nm : suc.sig.acc)
        REQUIRE(source_names.count(nm) == 1);
      for (const Name& nm : suc.sig.rej)
        REQUIRE(source_names.count(nm) == 1);
      tree = std::move(suc.tree);
    }
  }
}

TEST_CASE("parity priorities stay in range; the top odd one marks sink moves only")
{
  std::mt19937_64 rng(29);
  for (int round = 0; round < 40; ++round) {
    GenSpec spec{1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3), 2, 0.6,
                 0.5, rng()};
    StreettNSA nsa = random_nsa(spec);
    auto dpta = build_dpta(nsa);
    const DetAutomaton& aut = dpta.automaton;
    for (size_t t = 0; t < aut.priority.size(); ++t) {
      REQUIRE(aut.priority[t] >= 2);
      REQUIRE(aut.priority[t] <= aut.max_priority);
      // live moves always carry an event: some obligation-free leaf either
      // survives (accepting) or is removed (rejecting)
      bool to_sink = aut.sink >= 0 && aut.step[t] == aut.sink;
      REQUIRE((aut.priority[t] == aut.max_priority) == to_sink);
    }
  }
}

TEST_CASE("mu successor matches the fixture hand trace")
{
  StreettNSA nsa = one_state_fixture();
  Determinizer det(nsa);
  MuSafraTree init = det.initial_mu_tree();
  CHECK(init.e_names.empty());
  CHECK(init.f_names.empty());

  MuSafraTree next = det.mu_safra_successor(init, 0);
  REQUIRE(next.f_names.size() == 1);
  CHECK(next.f_names.front().to_string() == "1.1"); // the root merges
  REQUIRE(next.e_names.size() == 1);
  CHECK(next.e_names.front().to_string() == "1.2"); // the emptied old leaf

  // determinism and the recurrence of the same mu tree
  MuSafraTree again = det.mu_safra_successor(next, 0);
  CHECK(canonical_encode(again.tree, TreeMode::mu, &again.e_names, &again.f_names)
        == canonical_encode(next.tree, TreeMode::mu, &next.e_names, &next.f_names));
}

TEST_CASE("every reachable state of every backend passes the invariant suite")
{
  std::mt19937_64 rng(31);
  for (int round = 0; round < 25; ++round) {
    GenSpec spec{1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3), 2, 0.6,
                 0.5, rng()};
    StreettNSA nsa = random_nsa(spec);
    Determinizer det(nsa);
    int budget = nsa.n * (det.mu_eff() + 1);
    auto drta = build_drta(nsa);
    for (const auto& tree : drta.trees)
      if (!tree.is_sink())
        REQUIRE(check_invariants(tree, TreeMode::h_safra, det.calc(), nsa.n, budget).empty());
    auto dra = build_dra(nsa);
    for (const auto& mt : dra.mu_trees)
      if (!mt.tree.is_sink())
        REQUIRE(check_invariants(mt.tree, TreeMode::mu, det.calc(), nsa.n, budget,
                                 &mt.e_names, &mt.f_names)
                    .empty());
  }
}
