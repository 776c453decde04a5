#pragma once

#include <cstdint>
#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "defect.hpp"
#include "monomial.hpp"
#include "theorems.hpp"

namespace regdef {

/// Configuration of the randomized conjecture campaign. The sample stream is
/// a pure function of seed and configuration: identical inputs produce
/// byte-identical reports regardless of the worker count.
struct ExplorerConfig {
  std::uint64_t seed = 1;
  int samples = 100;
  int n_min = 2;
  int n_max = 4;
  Exp pure_min = 2;
  Exp pure_max = 5;
  int extra_max = 6;        // number of extra generators sampled per ideal
  Exp extra_deg_min = 0;    // degree window for extras; 0/0 disables it
  Exp extra_deg_max = 0;
  int m_max = 4;            // window probed by the sequence checkers
  WorkBudget budget;        // per-sample budget for stabilization work
  std::vector<std::string> checkers;  // empty selects the default battery
  int threads = 1;
};

struct SampleOutcome {
  int index = 0;
  std::uint64_t sample_seed = 0;
  MonomialIdeal ideal;
  std::vector<Exp> defects;
  std::vector<CheckReport> reports;
  std::size_t violations = 0;               // failed conclusions
  std::size_t strict_upper_violations = 0;  // logged, never a violation
  bool inconclusive = false;                // stabilization out of budget
  bool eu10_flag = false;  // increasing-prefix first differences not weakly decreasing

  nlohmann::json to_json() const;
};

struct CampaignSummary {
  int samples = 0;
  std::size_t violations = 0;
  std::size_t strict_upper_violations = 0;
  int eu10_flags = 0;
  int inconclusive = 0;

  nlohmann::json to_json() const;
};

/// Names accepted in ExplorerConfig::checkers.
const std::vector<std::string>& default_checker_names();

/// Runs the campaign; on_sample fires in index order on the calling thread.
CampaignSummary explore(const ExplorerConfig& config,
                        const std::function<void(const SampleOutcome&)>& on_sample);

}  // namespace regdef
