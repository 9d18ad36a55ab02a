#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "streett/campaign.hpp"
#include "streett/format.hpp"

using namespace streett;

namespace {

// exit codes: 0 ok, 1 disagreement/failure, 2 usage, 3 parse, 4 capacity
constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitCapacity = 4;

std::string slurp(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw parse_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spill(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<int> parse_word(const std::string& text)
{
  std::vector<int> out;
  if (text.empty())
    return out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ','))
    out.push_back(std::stoi(item));
  return out;
}

StreettNSA load_nsa(const std::string& path)
{
  ParsedAutomaton parsed = parse_automaton(slurp(path));
  if (!std::holds_alternative<StreettNSA>(parsed))
    throw semantic_error(path + " does not hold a Streett NSA");
  return std::get<StreettNSA>(parsed);
}

class PrintingTrace : public TraceSink {
public:
  void on_step(int step_no, const std::string& what, const SafraTree& tree,
               TreeMode mode) override
  {
    std::cout << "  step " << step_no << " (" << what << "):\n";
    std::istringstream is(render_tree(tree, mode));
    std::string line;
    while (std::getline(is, line))
      std::cout << "    " << line << '\n';
  }
};

int cmd_determinize(const std::string& in, const std::string& target, const std::string& out,
                    const std::string& trace_word, int state_cap)
{
  StreettNSA nsa = load_nsa(in);
  if (nsa.basis == PairBasis::transitions)
    throw basis_error("input has transition-based pairs; run to-state-based first");

  if (!trace_word.empty()) {
    Determinizer det(nsa);
    TreeMode mode = target == "parity-t" ? TreeMode::lir
                    : target == "rabin-baseline" ? TreeMode::mu
                                                 : TreeMode::h_safra;
    PrintingTrace sink;
    std::vector<int> word = parse_word(trace_word);
    if (mode == TreeMode::mu) {
      MuSafraTree cur = det.initial_mu_tree();
      std::cout << "initial tree:\n" << render_tree(cur.tree, mode);
      for (int a : word) {
        std::cout << "letter " << a << ":\n";
        cur = det.mu_safra_successor(cur, a, &sink);
        std::cout << "  E={";
        for (size_t i = 0; i < cur.e_names.size(); ++i)
          std::cout << (i ? "," : "") << cur.e_names[i].to_string();
        std::cout << "} F={";
        for (size_t i = 0; i < cur.f_names.size(); ++i)
          std::cout << (i ? "," : "") << cur.f_names[i].to_string();
        std::cout << "}\n";
      }
    } else if (mode == TreeMode::lir) {
      SafraTree cur = det.initial_tree(mode);
      std::cout << "initial tree:\n" << render_tree(cur, mode);
      for (int a : word) {
        std::cout << "letter " << a << ":\n";
        auto res = det.lir_successor(cur, a, &sink);
        std::cout << "  signature " << res.sig.to_string() << " priority "
                  << priority_of(res.sig, det.n(), det.mu()) << '\n';
        cur = std::move(res.tree);
      }
    } else {
      SafraTree cur = det.initial_tree(mode);
      std::cout << "initial tree:\n" << render_tree(cur, mode);
      for (int a : word) {
        std::cout << "letter " << a << ":\n";
        auto res = det.h_safra_successor(cur, a, &sink);
        std::cout << "  signature " << res.sig.to_string() << '\n';
        cur = std::move(res.tree);
      }
    }
  }

  BuildOptions opts;
  opts.state_cap = state_cap;
  BuildResult built;
  if (target == "rabin-t")
    built = build_drta(nsa, opts);
  else if (target == "parity-t")
    built = build_dpta(nsa, opts);
  else if (target == "rabin-baseline")
    built = build_dra(nsa, opts);
  else
    throw domain_error("unknown target " + target);
  spill(out, emit_automaton(built.automaton));
  std::cerr << "wrote " << out << ": " << built.automaton.num_states << " states ("
            << built.automaton.non_sink_states() << " non-sink)\n";
  return kExitOk;
}

int cmd_membership(const std::string& path, const std::string& prefix, const std::string& cycle)
{
  Lasso lasso{parse_word(prefix), parse_word(cycle)};
  if (lasso.cycle.empty())
    throw domain_error("cycle must be nonempty");
  ParsedAutomaton parsed = parse_automaton(slurp(path));
  bool accepted = std::holds_alternative<StreettNSA>(parsed)
                      ? nsa_accepts(std::get<StreettNSA>(parsed), lasso)
                      : det_accepts(std::get<DetAutomaton>(parsed), lasso);
  std::cout << (accepted ? "ACCEPT" : "REJECT") << '\n';
  return kExitOk;
}

int cmd_generate(const std::string& kind, int n, int k, int sigma, double density,
                 double pair_density, std::uint64_t seed, const std::string& out)
{
  StreettNSA nsa;
  if (kind == "random") {
    nsa = random_nsa(GenSpec{n, k, sigma, density, pair_density, seed});
  } else if (kind == "full-streett") {
    nsa = full_streett(n, k);
  } else {
    throw domain_error("unknown generator kind " + kind);
  }
  spill(out, emit_automaton(nsa));
  std::cerr << "wrote " << out << ": n=" << nsa.n << " k=" << nsa.k()
            << " sigma=" << nsa.alphabet.size << '\n';
  return kExitOk;
}

int cmd_to_state_based(const std::string& in, const std::string& out)
{
  spill(out, emit_automaton(to_state_based(load_nsa(in))));
  return kExitOk;
}

int cmd_campaign(const std::string& config_path, const std::string& out)
{
  CampaignConfig cfg =
      config_path.empty() ? CampaignConfig{} : parse_campaign_config(slurp(config_path));
  CampaignReport report = run_campaign(cfg);
  std::string text = report.render();
  if (out.empty() || out == "-")
    std::cout << text;
  else
    spill(out, text);
  std::cerr << "campaign " << (report.passed() ? "PASSED" : "FAILED") << ": "
            << report.instances.size() << " instances, " << report.total_comparisons()
            << " comparisons, " << report.failed_instances() << " failed\n";
  return report.passed() ? kExitOk : kExitDisagreement;
}

int cmd_bounds(const std::string& in, int state_cap)
{
  StreettNSA nsa = load_nsa(in);
  if (nsa.basis == PairBasis::transitions)
    nsa = to_state_based(nsa);
  BuildOptions opts;
  opts.state_cap = state_cap;
  std::optional<BuildResult> drta, dpta, dra;
  auto attempt = [&](std::optional<BuildResult>& slot, auto builder) {
    try {
      slot = builder(nsa, opts);
    } catch (const capacity_error& e) {
      std::cerr << "skipped: " << e.what() << '\n';
    }
  };
  attempt(drta, [](const StreettNSA& s, const BuildOptions& o) { return build_drta(s, o); });
  attempt(dpta, [](const StreettNSA& s, const BuildOptions& o) { return build_dpta(s, o); });
  attempt(dra, [](const StreettNSA& s, const BuildOptions& o) { return build_dra(s, o); });

  BoundSet bounds = compute_bounds(nsa.n, nsa.k());
  BoundsObservation obs = observe_bounds(drta ? &*drta : nullptr, dpta ? &*dpta : nullptr,
                                         dra ? &*dra : nullptr);
  std::cout << render_bounds_table(bounds, obs);
  return bounds_conform(bounds, obs) ? kExitOk : kExitDisagreement;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Streett determinization toolkit: H-Safra / LIR-H-Safra / mu-Safra"};
  app.require_subcommand(1);

  auto* det = app.add_subcommand("determinize", "NSA file -> deterministic automaton file");
  std::string det_in, det_out, det_target = "rabin-t", det_trace;
  int det_cap = 300000;
  det->add_option("--in", det_in, "input NSA")->required();
  det->add_option("--target", det_target, "rabin-t | parity-t | rabin-baseline");
  det->add_option("--out", det_out, "output automaton")->required();
  det->add_option("--trace", det_trace, "comma-separated word; print steps 1-6 per letter");
  det->add_option("--state-cap", det_cap, "reachable-state safety cap");

  auto* mem = app.add_subcommand("membership", "lasso membership for any automaton file");
  std::string mem_aut, mem_prefix, mem_cycle;
  mem->add_option("--automaton", mem_aut, "automaton file")->required();
  mem->add_option("--prefix", mem_prefix, "comma-separated letters (may be empty)");
  mem->add_option("--cycle", mem_cycle, "comma-separated letters, nonempty")->required();

  auto* gen = app.add_subcommand("generate", "seeded instance generator");
  std::string gen_kind = "random", gen_out;
  int gen_n = 2, gen_k = 1, gen_sigma = 2;
  double gen_density = 0.5, gen_pair_density = 0.5;
  std::uint64_t gen_seed = 1;
  gen->add_option("--kind", gen_kind, "random | full-streett");
  gen->add_option("--n", gen_n, "states");
  gen->add_option("--k", gen_k, "Streett pairs");
  gen->add_option("--sigma", gen_sigma, "alphabet size (random kind)");
  gen->add_option("--density", gen_density, "transition density (random kind)");
  gen->add_option("--pair-density", gen_pair_density, "pair membership density");
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--out", gen_out, "output file")->required();

  auto* conv = app.add_subcommand("to-state-based", "mark-splitting basis conversion");
  std::string conv_in, conv_out;
  conv->add_option("--in", conv_in, "transition-based NSA")->required();
  conv->add_option("--out", conv_out, "state-based NSA")->required();

  auto* camp = app.add_subcommand("campaign", "differential-testing campaign");
  std::string camp_config, camp_out;
  camp->add_option("--config", camp_config, "config file (defaults cover n 1-4, k 1-3)");
  camp->add_option("--out", camp_out, "report file ('-' = stdout)");

  auto* bnd = app.add_subcommand("bounds", "observed-vs-bound report for one NSA");
  std::string bnd_in;
  int bnd_cap = 300000;
  bnd->add_option("--in", bnd_in, "input NSA")->required();
  bnd->add_option("--state-cap", bnd_cap, "reachable-state safety cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (det->parsed())
      return cmd_determinize(det_in, det_target, det_out, det_trace, det_cap);
    if (mem->parsed())
      return cmd_membership(mem_aut, mem_prefix, mem_cycle);
    if (gen->parsed())
      return cmd_generate(gen_kind, gen_n, gen_k, gen_sigma, gen_density, gen_pair_density,
                          gen_seed, gen_out);
    if (conv->parsed())
      return cmd_to_state_based(conv_in, conv_out);
    if (camp->parsed())
      return cmd_campaign(camp_config, camp_out);
    if (bnd->parsed())
      return cmd_bounds(bnd_in, bnd_cap);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const capacity_error& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const basis_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDisagreement;
  }
  return kExitUsage;
}
