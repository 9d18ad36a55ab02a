// Acceptance suite: one pass/fail line per criterion, exit code = failures.

#include <chrono>
#include <deque>
#include <iostream>
#include <random>
#include <sstream>

#include "streett/bounds.hpp"
#include "streett/campaign.hpp"
#include "streett/format.hpp"
#include "streett/generators.hpp"
#include "streett/index_calculus.hpp"
#include "streett/lasso_oracle.hpp"

using namespace streett;

namespace {

int failures = 0;

void verdict(int number, const std::string& what, bool ok, const std::string& detail)
{
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << what;
  if (!detail.empty())
    std::cout << " (" << detail << ")";
  std::cout << std::endl;
  failures += ok ? 0 : 1;
}

StreettNSA fixture_nsa()
{
  StreettNSA nsa;
  nsa.n = 1;
  nsa.alphabet.size = 1;
  nsa.initial = state_bit(0);
  nsa.transitions = {Transition{0, 0, 0}};
  nsa.pairs = {StreettPair{state_bit(0), 0, {}, {}}};
  return nsa;
}

void criterion1_cover_mini()
{
  GFamily fam;
  fam.k = 4;
  fam.g = {state_bit(0) | state_bit(1), state_bit(0), state_bit(1) | state_bit(2),
           state_bit(2)};
  IndexCalculus calc(fam);
  bool ok = calc.cover(index_bit(3)) == (index_bit(3) | index_bit(4))
            && calc.mini(index_bit(3)) == index_bit(1);
  verdict(1, "Cover({3})={3,4} and Mini({3})={1} on the worked family", ok, "");
}

void criterion2_worked_fixture()
{
  StreettNSA nsa = fixture_nsa();
  Determinizer det(nsa);
  auto suc = det.h_safra_successor(det.initial_tree(TreeMode::h_safra), 0);
  auto drta = build_drta(nsa);
  auto dpta = build_dpta(nsa);
  auto dra = build_dra(nsa);
  Lasso lasso{{}, {0}};

  bool ok = drta.automaton.non_sink_states() == 1 && suc.sig.acc.size() == 1
            && suc.sig.acc[0].to_string() == "eps" && suc.sig.rej.size() == 1
            && suc.sig.rej[0].to_string() == "1^1" && dpta.automaton.priority.size() == 1
            && dpta.automaton.priority[0] == 2 && nsa_accepts(nsa, lasso)
            && det_accepts(drta.automaton, lasso) && det_accepts(dpta.automaton, lasso)
            && det_accepts(dra.automaton, lasso);
  verdict(2, "one-state fixture: sig_acc={eps}, sig_rej={1^1}, priority 2, all accept", ok,
          "");
}

void criteria345_campaign()
{
  auto start = std::chrono::steady_clock::now();

  CampaignConfig cfg; // defaults: n 1..4, k 1..3, sigma 2, d {0.3,0.6,1.0}, 216 instances
  cfg.parallelism = 2;
  auto specs = campaign_specs(cfg);
  auto lassos = enumerate_lassos(cfg.sigma, cfg.max_prefix, cfg.max_cycle);

  long comparisons = 0, agreements = 0;
  long invariant_violations = 0;
  long bound_violations = 0;
  int instances_with_dra = 0;
  std::string first_detail;

  for (size_t i = 0; i < specs.size(); ++i) {
    StreettNSA nsa = random_nsa(specs[i]);
    Determinizer det(nsa);
    int budget = nsa.n * (det.mu_eff() + 1);
    auto drta = build_drta(nsa);
    auto dpta = build_dpta(nsa);
    std::optional<BuildResult> dra;
    if (specs[i].n <= cfg.dra_max_n) {
      dra = build_dra(nsa);
      ++instances_with_dra;
    }

    std::vector<std::pair<std::string, const DetAutomaton*>> backends{
        {"drta", &drta.automaton}, {"dpta", &dpta.automaton}};
    if (dra)
      backends.emplace_back("dra", &dra->automaton);
    auto outcome = compare_backends(nsa, backends, lassos);
    comparisons += outcome.comparisons;
    agreements += outcome.agreements;
    if (outcome.first_mismatch && first_detail.empty()) {
      std::ostringstream os;
      os << "instance " << i << " backend " << outcome.mismatch_backend << " lasso "
         << outcome.first_mismatch->to_string();
      first_detail = os.str();
    }

    // criterion 4: every reachable tree passes the invariant suite, and the
    // spec's n(mu+1) size clause holds with the original parameters
    int spec_nodes = nsa.n * (nsa.mu() + 1);
    auto walk = [&](const BuildResult& built, TreeMode mode) {
      for (size_t s = 0; s < built.trees.size(); ++s) {
        const SafraTree& tree = built.trees[s];
        if (tree.is_sink())
          continue;
        if (mode == TreeMode::mu) {
          const auto& mt = built.mu_trees[s];
          invariant_violations += static_cast<long>(
              check_invariants(tree, mode, det.calc(), nsa.n, budget, &mt.e_names,
                               &mt.f_names)
                  .size());
        } else {
          invariant_violations +=
              static_cast<long>(check_invariants(tree, mode, det.calc(), nsa.n, budget).size());
        }
        if (tree.size() > spec_nodes)
          ++invariant_violations;
      }
    };
    walk(drta, TreeMode::h_safra);
    walk(dpta, TreeMode::lir);
    if (dra)
      walk(*dra, TreeMode::mu);

    // criterion 5: exact bound conformance on this instance
    BoundSet bounds = compute_bounds(nsa.n, nsa.k());
    BoundsObservation obs =
        observe_bounds(&drta, &dpta, dra ? &*dra : nullptr);
    if (!bounds_conform(bounds, obs))
      ++bound_violations;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  {
    std::ostringstream os;
    os << specs.size() << " instances, " << instances_with_dra << " with the baseline, "
       << agreements << "/" << comparisons << " agreements, " << elapsed << " ms";
    bool ok = comparisons > 0 && agreements == comparisons && specs.size() >= 200
              && elapsed < 600000;
    verdict(3, "differential campaign agrees on every lasso", ok,
            first_detail.empty() ? os.str() : os.str() + "; first mismatch: " + first_detail);
  }
  verdict(4, "every reachable tree passes the invariant suite", invariant_violations == 0,
          std::to_string(invariant_violations) + " violations");
  verdict(5, "state, name, priority and tree-size bounds hold exactly", bound_violations == 0,
          std::to_string(bound_violations) + " instances out of bound");
}

// exponential reference oracle over vertex subsets
bool brute_good_cycle(const ProductGraph& g, const std::vector<StreettPair>& pairs)
{
  int n = g.vertices;
  for (int mask = 1; mask < (1 << n); ++mask) {
    bool usable = true;
    for (int v = 0; v < n; ++v)
      if (((mask >> v) & 1) && !g.reachable[v])
        usable = false;
    if (!usable)
      continue;
    auto reach_from = [&](int from) {
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
    auto fwd = reach_from(first);
    bool strong = true, has_edge = false;
    for (int v = 0; v < n; ++v) {
      if (!((mask >> v) & 1))
        continue;
      if (!fwd[v] || !reach_from(v)[first])
        strong = false;
      for (const auto& e : g.out[v])
        if ((mask >> e.to) & 1)
          has_edge = true;
    }
    if (!strong || !has_edge)
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

void criterion6_oracle_self_validation()
{
  std::mt19937_64 rng(606);
  int agree = 0;
  const int rounds = 500;
  for (int round = 0; round < rounds; ++round) {
    int n = 2 + static_cast<int>(rng() % 7);
    ProductGraph g;
    g.vertices = n;
    g.out.resize(n);
    g.state_of.resize(n);
    for (int v = 0; v < n; ++v)
      g.state_of[v] = v;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (rng() % 100 < 25)
          g.out[a].push_back(ProductGraph::Edge{b, a * n + b});
    g.reachable.assign(n, 0);
    std::deque<int> queue{0};
    g.reachable[0] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const auto& e : g.out[v])
        if (!g.reachable[e.to]) {
          g.reachable[e.to] = 1;
          queue.push_back(e.to);
        }
    }
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<StreettPair> pairs;
    for (int i = 0; i < k; ++i)
      pairs.push_back(StreettPair{rng() & full_state_set(n), rng() & full_state_set(n), {}, {}});
    if (streett_good_cycle_exists(g, pairs, PairBasis::states) == brute_good_cycle(g, pairs))
      ++agree;
  }
  verdict(6, "recursive cycle search matches the exponential oracle", agree == rounds,
          std::to_string(agree) + "/" + std::to_string(rounds));
}

void criterion7_full_streett()
{
  long checked = 0, agreed = 0;

  StreettNSA full11 = full_streett(1, 1);
  StreettNSA split11 = to_state_based(full11);
  auto drta11 = build_drta(split11);
  auto dpta11 = build_dpta(split11);
  auto dra11 = build_dra(split11);
  LassoEnumerator small(full11.alphabet.size, 2, 3);
  while (auto lasso = small.next()) {
    bool expected = nsa_accepts(full11, *lasso);
    bool converted = nsa_accepts(split11, *lasso);
    bool all = det_accepts(drta11.automaton, *lasso) == expected
               && det_accepts(dpta11.automaton, *lasso) == expected
               && det_accepts(dra11.automaton, *lasso) == expected && converted == expected;
    ++checked;
    agreed += all ? 1 : 0;
  }

  // 50 sampled letters of the 4096-letter automaton; exhaustive |u|<=1, |v|<=2
  auto letters = sample_full_streett_letters(2, 1, 50, 7101);
  StreettNSA full21 = full_streett_restricted(2, 1, letters);
  StreettNSA split21 = to_state_based(full21);
  auto drta21 = build_drta(split21);
  auto dpta21 = build_dpta(split21);
  auto dra21 = build_dra(split21);
  LassoEnumerator wide(full21.alphabet.size, 1, 2);
  while (auto lasso = wide.next()) {
    bool expected = nsa_accepts(full21, *lasso);
    bool all = nsa_accepts(split21, *lasso) == expected
               && det_accepts(drta21.automaton, *lasso) == expected
               && det_accepts(dpta21.automaton, *lasso) == expected
               && det_accepts(dra21.automaton, *lasso) == expected;
    ++checked;
    agreed += all ? 1 : 0;
  }
  verdict(7, "full Streett family agrees through conversion and all backends",
          checked == agreed,
          std::to_string(agreed) + "/" + std::to_string(checked) + " lassos");
}

void criterion8_determinism()
{
  CampaignConfig cfg;
  cfg.ns = {1, 2};
  cfg.ks = {1, 2};
  cfg.instances = 12;
  cfg.seed = 808;
  std::string report_once = run_campaign(cfg).render();
  cfg.parallelism = 2;
  std::string report_again = run_campaign(cfg).render();

  StreettNSA nsa = random_nsa(GenSpec{3, 2, 2, 0.6, 0.5, 808});
  std::string emitted_once = emit_automaton(build_dpta(nsa).automaton);
  std::string emitted_again = emit_automaton(build_dpta(nsa).automaton);
  std::string reparsed = emit_automaton(parse_automaton(emitted_once));

  bool ok = report_once == report_again && emitted_once == emitted_again
            && reparsed == emitted_once
            && emit_automaton(random_nsa(GenSpec{3, 2, 2, 0.6, 0.5, 808}))
                   == emit_automaton(nsa);
  verdict(8, "identical inputs and seeds give byte-identical outputs", ok, "");
}

} // namespace

int main()
{
  criterion1_cover_mini();
  criterion2_worked_fixture();
  criteria345_campaign();
  criterion6_oracle_self_validation();
  criterion7_full_streett();
  criterion8_determinism();
  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << std::endl;
  return failures;
}
