#include "explorer.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <thread>

#include "regularity.hpp"

namespace regdef {

namespace {

// Self-contained splitmix64 so the sample stream does not depend on any
// standard-library distribution implementation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  Exp range(Exp lo, Exp hi) {
    return lo + static_cast<Exp>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

// pure powers in range, then extra generators in the open sub-box below
// them; candidates that would be non-minimal are rejected and resampled
MonomialIdeal sample_ideal(SplitMix64& rng, const ExplorerConfig& cfg, int n) {
  std::vector<Exp> pures;
  for (int i = 0; i < n; ++i) pures.push_back(rng.range(cfg.pure_min, cfg.pure_max));
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<Exp> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = pures[static_cast<std::size_t>(i)];
    gens.emplace_back(std::move(e));
  }
  const int extras = static_cast<int>(rng.range(0, cfg.extra_max));
  for (int t = 0; t < extras; ++t) {
    for (int attempt = 0; attempt < 30; ++attempt) {
      std::vector<Exp> e;
      Exp deg = 0;
      for (int i = 0; i < n; ++i) {
        e.push_back(rng.range(0, pures[static_cast<std::size_t>(i)] - 1));
        deg += e.back();
      }
      if (deg == 0) continue;
      if (cfg.extra_deg_max > 0 && (deg < cfg.extra_deg_min || deg > cfg.extra_deg_max)) {
        continue;
      }
      Monomial cand{std::move(e)};
      bool minimal = true;
      for (const Monomial& g : gens) {
        if (g.divides(cand) || cand.divides(g)) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      gens.push_back(std::move(cand));
      break;
    }
  }
  return minimalize(n, gens);
}

bool wants(const ExplorerConfig& cfg, const std::string& name) {
  if (cfg.checkers.empty()) return true;
  return std::find(cfg.checkers.begin(), cfg.checkers.end(), name) != cfg.checkers.end();
}

SampleOutcome run_sample(const ExplorerConfig& cfg, int index, std::uint64_t sample_seed) {
  SampleOutcome out;
  out.index = index;
  out.sample_seed = sample_seed;
  SplitMix64 rng(sample_seed);

  const int n = static_cast<int>(rng.range(cfg.n_min, cfg.n_max));
  out.ideal = sample_ideal(rng, cfg, n);
  const MonomialIdeal companion = sample_ideal(rng, cfg, n);

  PowerCache cache(out.ideal);
  const Exp d = asymptotic_degree(out.ideal);
  const int m_max = std::max(2, cfg.m_max);
  for (int m = 1; m <= m_max; ++m) {
    out.defects.push_back(regularity(cache.power(m)) - d * m);
  }

  // first differences of the increasing prefix should be weakly decreasing;
  // samples where they are not get flagged for inspection
  {
    std::vector<Exp> diffs;
    for (std::size_t i = 1; i < out.defects.size(); ++i) {
      const Exp diff = out.defects[i] - out.defects[i - 1];
      if (diff <= 0) break;
      diffs.push_back(diff);
    }
    for (std::size_t i = 1; i < diffs.size(); ++i) {
      if (diffs[i] > diffs[i - 1]) out.eu10_flag = true;
    }
  }

  auto push = [&](CheckReport&& report) {
    if (!report.passed()) ++out.violations;
    out.reports.push_back(std::move(report));
  };

  if (wants(cfg, "defect-nonnegative")) {
    push(check_defect_nonnegative(out.ideal, m_max, cache));
  }
  if (wants(cfg, "strict-increase")) {
    push(check_strict_increase(out.ideal, m_max, cache));
  }
  if (wants(cfg, "first-difference")) {
    const MonomialIdeal low = truncate_below(out.ideal, d);
    for (int m = 2; m <= m_max; ++m) {
      push(check_first_difference(out.ideal, low, m,
                                  FirstDifferenceMode::witness_hypothesis, cache));
      push(check_first_difference(out.ideal, low, m,
                                  FirstDifferenceMode::regularity_hypothesis, cache));
    }
  }
  if (wants(cfg, "defect-monotone")) {
    push(check_defect_monotone(out.ideal, m_max, cache));
  }
  if (wants(cfg, "socle-descent")) {
    for (int m = 2; m <= std::min(3, m_max); ++m) {
      push(check_socle_descent(out.ideal, m, cache));
    }
  }
  if (wants(cfg, "witness-comparison")) {
    push(check_witness_comparison(out.ideal, companion));
  }
  if (wants(cfg, "reduction-bounds")) {
    for (int m = 1; m <= std::min(3, m_max); ++m) {
      CheckReport r = check_reduction_bounds(out.ideal, m, false, cache);
      out.strict_upper_violations +=
          r.quantities["strict_upper_violations"].get<std::size_t>();
      push(std::move(r));
    }
  }
  if (wants(cfg, "increase-threshold")) {
    for (int m = 1; m < m_max; ++m) {
      push(check_increase_threshold(out.ideal, m, cache));
    }
  }
  if (wants(cfg, "stable-defect-zero")) {
    CheckReport r = check_stable_defect_zero(out.ideal, cfg.budget, cache);
    if (r.quantities.contains("status") && r.quantities["status"] == "inconclusive") {
      out.inconclusive = true;
    }
    push(std::move(r));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& default_checker_names() {
  static const std::vector<std::string> names = {
      "defect-nonnegative", "strict-increase",    "first-difference",
      "defect-monotone",    "socle-descent",      "witness-comparison",
      "reduction-bounds",   "increase-threshold", "stable-defect-zero",
  };
  return names;
}

nlohmann::json SampleOutcome::to_json() const {
  nlohmann::json j;
  j["type"] = "explore_sample";
  j["index"] = index;
  j["sample_seed"] = sample_seed;
  j["vars"] = ideal.vars();
  j["ideal"] = ideal.str();
  j["defects"] = defects;
  j["violations"] = violations;
  j["strict_upper_violations"] = strict_upper_violations;
  j["inconclusive"] = inconclusive;
  j["eu10_flag"] = eu10_flag;
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckReport& r : reports) {
    if (r.passed()) {
      checks.push_back({{"name", r.name},
                        {"passed", true},
                        {"hypothesis_holds", r.hypothesis_holds}});
    } else {
      checks.push_back(r.to_json());  // full payload for violations
    }
  }
  j["checks"] = checks;
  return j;
}

nlohmann::json CampaignSummary::to_json() const {
  nlohmann::json j;
  j["type"] = "explore_summary";
  j["samples"] = samples;
  j["violations"] = violations;
  j["strict_upper_violations"] = strict_upper_violations;
  j["eu10_flags"] = eu10_flags;
  j["inconclusive"] = inconclusive;
  return j;
}

CampaignSummary explore(const ExplorerConfig& config,
                        const std::function<void(const SampleOutcome&)>& on_sample) {
  if (config.samples < 0) fail(Errc::invalid_argument, "negative sample count");
  if (config.n_min < 1 || config.n_max < config.n_min) {
    fail(Errc::invalid_argument, "invalid variable range");
  }
  if (config.pure_min < 2 || config.pure_max < config.pure_min) {
    fail(Errc::invalid_argument, "invalid pure-power range");
  }

  // per-sample seeds derive from the campaign seed alone
  std::vector<std::uint64_t> seeds;
  {
    SplitMix64 seeder(config.seed);
    for (int i = 0; i < config.samples; ++i) seeds.push_back(seeder.next());
  }

  const int threads = std::max(1, config.threads);
  std::map<int, SampleOutcome> ready;
  std::mutex mutex;
  std::condition_variable cv;
  std::atomic<int> next_index{0};

  auto worker = [&] {
    for (;;) {
      const int index = next_index.fetch_add(1);
      if (index >= config.samples) return;
      SampleOutcome outcome = run_sample(config, index, seeds[static_cast<std::size_t>(index)]);
      {
        std::lock_guard lock(mutex);
        ready.emplace(index, std::move(outcome));
      }
      cv.notify_one();
    }
  };

  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

  CampaignSummary summary;
  summary.samples = config.samples;
  for (int emit = 0; emit < config.samples; ++emit) {
    SampleOutcome outcome;
    {
      std::unique_lock lock(mutex);
      cv.wait(lock, [&] { return ready.count(emit) > 0; });
      outcome = std::move(ready.at(emit));
      ready.erase(emit);
    }
    summary.violations += outcome.violations;
    summary.strict_upper_violations += outcome.strict_upper_violations;
    if (outcome.eu10_flag) ++summary.eu10_flags;
    if (outcome.inconclusive) ++summary.inconclusive;
    if (on_sample) on_sample(outcome);
  }
  for (auto& t : pool) t.join();
  return summary;
}

}  // namespace regdef
