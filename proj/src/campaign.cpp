#include "streett/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <sstream>
#include <type_traits>

namespace streett {

void CampaignConfig::validate() const
{
  if (ns.empty() || ks.empty() || densities.empty())
    throw domain_error("campaign needs nonempty n, k and density lists");
  if (!(run_drta || run_dpta || run_dra))
    throw domain_error("campaign needs at least one backend");
  if (instances < 1 || sigma < 1 || max_prefix < 0 || max_cycle < 1 || parallelism < 1)
    throw domain_error("campaign limits out of range");
}

CampaignConfig parse_campaign_config(const std::string& text)
{
  CampaignConfig cfg;
  cfg.run_drta = cfg.run_dpta = cfg.run_dra = false;
  bool saw_backends = false;

  std::istringstream is(text);
  std::string raw;
  int number = 0;
  while (std::getline(is, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    std::istringstream ls(raw);
    std::string key, eq, value;
    if (!(ls >> key))
      continue;
    if (!(ls >> eq) || eq != "=" || !(ls >> value))
      throw parse_error("expected key = value", number);
    std::string extra;
    if (ls >> extra)
      throw parse_error("trailing junk after value", number);

    auto ints = [&](const std::string& v) {
      std::vector<int> out;
      std::istringstream vs(v);
      std::string item;
      while (std::getline(vs, item, ','))
        out.push_back(std::stoi(item));
      return out;
    };
    auto doubles = [&](const std::string& v) {
      std::vector<double> out;
      std::istringstream vs(v);
      std::string item;
      while (std::getline(vs, item, ','))
        out.push_back(std::stod(item));
      return out;
    };

    try {
      if (key == "n")
        cfg.ns = ints(value);
      else if (key == "k")
        cfg.ks = ints(value);
      else if (key == "sigma")
        cfg.sigma = std::stoi(value);
      else if (key == "density")
        cfg.densities = doubles(value);
      else if (key == "pair_density")
        cfg.pair_density = std::stod(value);
      else if (key == "instances")
        cfg.instances = std::stoi(value);
      else if (key == "max_prefix")
        cfg.max_prefix = std::stoi(value);
      else if (key == "max_cycle")
        cfg.max_cycle = std::stoi(value);
      else if (key == "backends") {
        saw_backends = true;
        std::istringstream vs(value);
        std::string item;
        while (std::getline(vs, item, ',')) {
          if (item == "drta")
            cfg.run_drta = true;
          else if (item == "dpta")
            cfg.run_dpta = true;
          else if (item == "dra")
            cfg.run_dra = true;
          else
            throw parse_error("unknown backend '" + item + "'", number);
        }
      } else if (key == "dra_max_n")
        cfg.dra_max_n = std::stoi(value);
      else if (key == "seed")
        cfg.seed = std::stoull(value);
      else if (key == "parallelism")
        cfg.parallelism = std::stoi(value);
      else if (key == "state_cap")
        cfg.state_cap = std::stoi(value);
      else
        throw parse_error("unknown config key '" + key + "'", number);
    } catch (const std::invalid_argument&) {
      throw parse_error("malformed value for " + key, number);
    }
  }
  if (!saw_backends)
    cfg.run_drta = cfg.run_dpta = cfg.run_dra = true;
  cfg.validate();
  return cfg;
}

std::vector<GenSpec> campaign_specs(const CampaignConfig& cfg)
{
  std::vector<GenSpec> combos;
  for (int n : cfg.ns)
    for (int k : cfg.ks)
      for (double d : cfg.densities)
        combos.push_back(GenSpec{n, k, cfg.sigma, d, cfg.pair_density, 0});
  std::vector<GenSpec> out;
  out.reserve(cfg.instances);
  for (int i = 0; i < cfg.instances; ++i) {
    GenSpec spec = combos[i % combos.size()];
    spec.seed = cfg.seed + static_cast<std::uint64_t>(i);
    out.push_back(spec);
  }
  return out;
}

AgreementOutcome compare_backends(const StreettNSA& nsa,
                                  const std::vector<std::pair<std::string, const DetAutomaton*>>&
                                      backends,
                                  const std::vector<Lasso>& lassos)
{
  AgreementOutcome out;
  for (const Lasso& lasso : lassos) {
    bool expected = nsa_accepts(nsa, lasso);
    for (const auto& [name, aut] : backends) {
      ++out.comparisons;
      if (det_accepts(*aut, lasso) == expected) {
        ++out.agreements;
      } else if (!out.first_mismatch) {
        out.first_mismatch = lasso;
        out.mismatch_backend = name;
      }
    }
  }
  return out;
}

namespace {

int count_invariant_violations(const StreettNSA& nsa, const BuildResult& built, TreeMode mode)
{
  Determinizer det(nsa);
  int budget = nsa.n * (det.mu_eff() + 1);
  int violations = 0;
  for (size_t s = 0; s < built.trees.size(); ++s) {
    const SafraTree& tree = built.trees[s];
    if (tree.is_sink())
      continue; // the sink is not a tree state
    if (mode == TreeMode::mu) {
      const MuSafraTree& mt = built.mu_trees[s];
      violations += static_cast<int>(check_invariants(tree, mode, det.calc(), nsa.n, budget,
                                                      &mt.e_names, &mt.f_names)
                                         .size());
    } else {
      violations += static_cast<int>(
          check_invariants(tree, mode, det.calc(), nsa.n, budget).size());
    }
  }
  return violations;
}

} // namespace

InstanceReport run_instance(const CampaignConfig& cfg, int index, const GenSpec& spec)
{
  InstanceReport rep;
  rep.index = index;
  rep.spec = spec;

  StreettNSA nsa = random_nsa(spec);
  BuildOptions opts;
  opts.state_cap = cfg.state_cap;

  std::optional<BuildResult> drta, dpta, dra;
  auto build_one = [&](BackendReport& br, std::optional<BuildResult>& slot, auto builder,
                       TreeMode mode) {
    try {
      slot = builder(nsa, opts);
      br.ran = true;
      br.states = slot->automaton.num_states;
      br.non_sink = slot->automaton.non_sink_states();
      br.pairs = static_cast<int>(slot->automaton.pair_names.size());
      if (slot->automaton.kind == DetKind::parity_transitions)
        br.max_priority = *std::max_element(slot->automaton.priority.begin(),
                                            slot->automaton.priority.end());
      rep.max_tree_nodes = std::max(rep.max_tree_nodes, slot->max_tree_nodes);
      rep.invariant_violations += count_invariant_violations(nsa, *slot, mode);
    } catch (const capacity_error& e) {
      br.capacity_issue = e.what();
      slot.reset();
    }
  };

  if (cfg.run_drta)
    build_one(rep.drta, drta, [](const StreettNSA& s, const BuildOptions& o) {
      return build_drta(s, o);
    }, TreeMode::h_safra);
  if (cfg.run_dpta)
    build_one(rep.dpta, dpta, [](const StreettNSA& s, const BuildOptions& o) {
      return build_dpta(s, o);
    }, TreeMode::lir);
  if (cfg.run_dra && spec.n <= cfg.dra_max_n)
    build_one(rep.dra, dra, [](const StreettNSA& s, const BuildOptions& o) {
      return build_dra(s, o);
    }, TreeMode::mu);

  BoundSet bounds = compute_bounds(spec.n, spec.k);
  BoundsObservation obs = observe_bounds(drta ? &*drta : nullptr, dpta ? &*dpta : nullptr,
                                         dra ? &*dra : nullptr);
  rep.bounds_ok = bounds_conform(bounds, obs, &rep.bound_failures);

  std::vector<Lasso> lassos = enumerate_lassos(cfg.sigma, cfg.max_prefix, cfg.max_cycle);
  rep.lassos = static_cast<long>(lassos.size());
  std::vector<std::pair<std::string, const DetAutomaton*>> backends;
  if (drta)
    backends.emplace_back("drta", &drta->automaton);
  if (dpta)
    backends.emplace_back("dpta", &dpta->automaton);
  if (dra)
    backends.emplace_back("dra", &dra->automaton);
  AgreementOutcome agree = compare_backends(nsa, backends, lassos);
  rep.comparisons = agree.comparisons;
  rep.agreements = agree.agreements;
  rep.counterexample = agree.first_mismatch;
  rep.counterexample_backend = agree.mismatch_backend;
  return rep;
}

CampaignReport run_campaign(const CampaignConfig& cfg)
{
  cfg.validate();
  CampaignReport report;
  report.config = cfg;
  auto specs = campaign_specs(cfg);
  report.instances.resize(specs.size());

  if (cfg.parallelism <= 1) {
    for (size_t i = 0; i < specs.size(); ++i)
      report.instances[i] = run_instance(cfg, static_cast<int>(i), specs[i]);
    return report;
  }

  // instance-level parallelism; results land in instance order regardless
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= specs.size())
        return;
      report.instances[i] = run_instance(cfg, static_cast<int>(i), specs[i]);
    }
  };
  std::vector<std::future<void>> futures;
  for (int w = 0; w < cfg.parallelism; ++w)
    futures.push_back(std::async(std::launch::async, worker));
  for (auto& f : futures)
    f.get();
  return report;
}

long CampaignReport::total_lassos() const
{
  long t = 0;
  for (const auto& r : instances)
    t += r.lassos;
  return t;
}

long CampaignReport::total_comparisons() const
{
  long t = 0;
  for (const auto& r : instances)
    t += r.comparisons;
  return t;
}

long CampaignReport::total_agreements() const
{
  long t = 0;
  for (const auto& r : instances)
    t += r.agreements;
  return t;
}

int CampaignReport::failed_instances() const
{
  int t = 0;
  for (const auto& r : instances)
    t += r.failed() ? 1 : 0;
  return t;
}

int CampaignReport::capacity_issues() const
{
  int t = 0;
  for (const auto& r : instances)
    t += (!r.drta.capacity_issue.empty() || !r.dpta.capacity_issue.empty() ||
          !r.dra.capacity_issue.empty())
             ? 1
             : 0;
  return t;
}

bool CampaignReport::passed() const
{
  return failed_instances() == 0;
}

namespace {

std::string fmt_double(double d)
{
  std::ostringstream os;
  os << d;
  return os.str();
}

template <typename T>
std::string join_list(const std::vector<T>& v)
{
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i)
      os << ',';
    if constexpr (std::is_same_v<T, double>)
      os << fmt_double(v[i]);
    else
      os << v[i];
  }
  return os.str();
}

void render_backend(std::ostringstream& os, const std::string& name, const BackendReport& br)
{
  if (!br.ran && br.capacity_issue.empty())
    return;
  if (!br.capacity_issue.empty()) {
    os << ' ' << name << "=capacity";
    return;
  }
  os << ' ' << name << "_states=" << br.states << ' ' << name << "_nonsink=" << br.non_sink;
  if (br.max_priority > 0)
    os << ' ' << name << "_maxprio=" << br.max_priority;
  else
    os << ' ' << name << "_pairs=" << br.pairs;
}

} // namespace

std::string CampaignReport::render() const
{
  std::ostringstream os;
  os << "campaign-report v1\n";
  os << "config n=" << join_list(config.ns) << " k=" << join_list(config.ks)
     << " sigma=" << config.sigma << " density=" << join_list(config.densities)
     << " pair_density=" << fmt_double(config.pair_density)
     << " instances=" << config.instances << " max_prefix=" << config.max_prefix
     << " max_cycle=" << config.max_cycle << " backends=";
  {
    std::vector<std::string> bs;
    if (config.run_drta)
      bs.push_back("drta");
    if (config.run_dpta)
      bs.push_back("dpta");
    if (config.run_dra)
      bs.push_back("dra");
    os << join_list(bs);
  }
  os << " dra_max_n=" << config.dra_max_n << " seed=" << config.seed
     << " state_cap=" << config.state_cap << '\n';

  for (const auto& r : instances) {
    os << "instance " << r.index << " n=" << r.spec.n << " k=" << r.spec.k
       << " sigma=" << r.spec.sigma << " density=" << fmt_double(r.spec.transition_density)
       << " pair_density=" << fmt_double(r.spec.pair_density) << " seed=" << r.spec.seed;
    render_backend(os, "drta", r.drta);
    render_backend(os, "dpta", r.dpta);
    render_backend(os, "dra", r.dra);
    os << " tree_nodes=" << r.max_tree_nodes << " lassos=" << r.lassos
       << " comparisons=" << r.comparisons << " agreements=" << r.agreements
       << " violations=" << r.invariant_violations
       << " bounds=" << (r.bounds_ok ? "ok" : "FAIL");
    if (r.counterexample)
      os << " status=FAILED backend=" << r.counterexample_backend
         << " counterexample=" << r.counterexample->to_string();
    else if (r.failed())
      os << " status=FAILED";
    else
      os << " status=OK";
    os << '\n';
  }

  os << "summary instances=" << instances.size() << " failed=" << failed_instances()
     << " capacity=" << capacity_issues() << " lassos=" << total_lassos()
     << " comparisons=" << total_comparisons() << " agreements=" << total_agreements()
     << " status=" << (passed() ? "PASSED" : "FAILED") << '\n';
  return os.str();
}

} // namespace streett
