#pragma once

#include <optional>
#include <string>
#include <vector>

#include "streett/bounds.hpp"
#include "streett/determinize.hpp"
#include "streett/generators.hpp"
#include "streett/lasso_oracle.hpp"

namespace streett {

struct CampaignConfig {
  std::vector<int> ns{1, 2, 3, 4};
  std::vector<int> ks{1, 2, 3};
  int sigma = 2;
  std::vector<double> densities{0.3, 0.6, 1.0};
  double pair_density = 0.5;
  int instances = 216;
  int max_prefix = 2;
  int max_cycle = 3;
  bool run_drta = true;
  bool run_dpta = true;
  bool run_dra = true;
  int dra_max_n = 3; // baseline only built for n up to this
  std::uint64_t seed = 1;
  int parallelism = 1;
  int state_cap = 300000;

  void validate() const;
};

// key = value lines, lists comma-separated, '#' comments.
CampaignConfig parse_campaign_config(const std::string& text);

struct BackendReport {
  bool ran = false;
  std::string capacity_issue; // nonempty when the cap stopped the build
  int states = 0;
  int non_sink = 0;
  int pairs = 0;      // Rabin pair count; 0 for parity
  int max_priority = 0;
};

struct InstanceReport {
  int index = 0;
  GenSpec spec;
  BackendReport drta, dpta, dra;
  int max_tree_nodes = 0;
  long lassos = 0;
  long comparisons = 0;
  long agreements = 0;
  int invariant_violations = 0;
  bool bounds_ok = true;
  std::vector<std::string> bound_failures;
  std::optional<Lasso> counterexample;
  std::string counterexample_backend;

  bool failed() const
  {
    return counterexample.has_value() || invariant_violations > 0 || !bounds_ok;
  }
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<InstanceReport> instances;

  long total_lassos() const;
  long total_comparisons() const;
  long total_agreements() const;
  int failed_instances() const;
  int capacity_issues() const;
  bool passed() const;

  // stable field order, no timing; byte-identical for identical configs
  std::string render() const;
};

// Compares oracle membership against each backend on every lasso, in
// enumeration order, so the first mismatch is the minimal counterexample.
struct AgreementOutcome {
  long comparisons = 0;
  long agreements = 0;
  std::optional<Lasso> first_mismatch;
  std::string mismatch_backend;
};

AgreementOutcome compare_backends(const StreettNSA& nsa,
                                  const std::vector<std::pair<std::string, const DetAutomaton*>>&
                                      backends,
                                  const std::vector<Lasso>& lassos);

InstanceReport run_instance(const CampaignConfig& cfg, int index, const GenSpec& spec);

CampaignReport run_campaign(const CampaignConfig& cfg);

// Instance specs the config spans, in report order.
std::vector<GenSpec> campaign_specs(const CampaignConfig& cfg);

} // namespace streett
