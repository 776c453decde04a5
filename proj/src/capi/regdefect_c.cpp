#include "regdefect/regdefect.h"

#include <cstring>
#include <new>
#include <string>

#include "core/defect.hpp"
#include "core/explorer.hpp"
#include "core/families.hpp"
#include "core/monomial.hpp"
#include "core/parser.hpp"
#include "core/regularity.hpp"
#include "core/theorems.hpp"

using namespace regdef;

struct rd_ideal {
  MonomialIdeal value;
};

struct rd_report {
  nlohmann::json payload;
  bool ok = true;
};

namespace {

thread_local std::string g_last_error;

rd_status set_error(rd_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

rd_status map_errc(Errc code) {
  switch (code) {
    case Errc::parse: return RD_ERR_PARSE;
    case Errc::dimension_mismatch: return RD_ERR_DIMENSION;
    case Errc::not_m_primary: return RD_ERR_NOT_M_PRIMARY;
    case Errc::not_subideal: return RD_ERR_NOT_SUBIDEAL;
    case Errc::invalid_argument: return RD_ERR_INVALID_ARGUMENT;
    case Errc::overflow: return RD_ERR_OVERFLOW;
    case Errc::budget_exhausted: return RD_ERR_BUDGET;
    case Errc::undefined: return RD_ERR_UNDEFINED;
    case Errc::internal: return RD_ERR_INTERNAL;
  }
  return RD_ERR_INTERNAL;
}

// Runs fn, translating every exception into a status; nothing may cross the
// library boundary.
template <typename Fn>
rd_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return RD_OK;
  } catch (const Error& e) {
    return set_error(map_errc(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(RD_ERR_INVALID_ARGUMENT, std::string("malformed JSON parameter: ") + e.what());
  } catch (const std::bad_alloc&) {
    return set_error(RD_ERR_BUDGET, "out of memory");
  } catch (const std::exception& e) {
    return set_error(RD_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(RD_ERR_INTERNAL, "unknown error");
  }
}

rd_status require(bool condition, const char* message) {
  return condition ? RD_OK : set_error(RD_ERR_INVALID_ARGUMENT, message);
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Strategy parse_strategy(const char* strategy) {
  if (strategy == nullptr || std::strcmp(strategy, "corner") == 0) return Strategy::corner;
  if (std::strcmp(strategy, "box") == 0) return Strategy::box;
  fail(Errc::invalid_argument, "strategy must be \"box\" or \"corner\"");
}

nlohmann::json monomial_list(const std::vector<Monomial>& monomials) {
  nlohmann::json out = nlohmann::json::array();
  for (const Monomial& u : monomials) out.push_back(u.str());
  return out;
}

nlohmann::json defect_report_json(const DefectReport& report) {
  nlohmann::json j;
  j["type"] = "defect_report";
  j["vars"] = report.ideal.vars();
  j["ideal"] = report.ideal.str();
  j["d"] = report.d;
  nlohmann::json rows = nlohmann::json::array();
  for (const DefectRow& row : report.rows) {
    rows.push_back({{"m", row.m}, {"reg", row.reg}, {"e", row.e}});
  }
  j["rows"] = rows;
  j["certificate"] = to_string(report.certificate);
  j["budget_exhausted"] = report.budget_exhausted;
  if (report.certified_stable_from) j["stable_from"] = *report.certified_stable_from;
  if (report.e_infinity) j["e_infinity"] = *report.e_infinity;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

nlohmann::json example_report_json(const ExampleSpec& spec) {
  nlohmann::json j;
  j["type"] = "example_spec";
  j["name"] = spec.name;
  j["parameters"] = spec.parameters;
  j["description"] = spec.description;
  j["vars"] = spec.ideal.vars();
  j["ideal"] = spec.ideal.str();
  if (spec.companion) j["companion"] = spec.companion->str();
  j["predicted"] = spec.predicted;
  if (spec.predicted_tail) j["predicted_tail"] = *spec.predicted_tail;
  if (!spec.predicted_alt.empty()) {
    j["predicted_alt"] = spec.predicted_alt;
    if (spec.predicted_alt_tail) j["predicted_alt_tail"] = *spec.predicted_alt_tail;
  }
  j["stable_defect_must_vanish"] = spec.stable_defect_must_vanish;
  j["suggested_m_max"] = spec.suggested_m_max;
  return j;
}

WorkBudget budget_from(int max_power, int64_t max_generators) {
  WorkBudget budget;
  if (max_power > 0) budget.max_power = max_power;
  if (max_generators > 0) budget.max_generators = static_cast<std::size_t>(max_generators);
  return budget;
}

}  // namespace

extern "C" {

const char* rd_version(void) { return "0.1.0"; }

const char* rd_last_error(void) { return g_last_error.c_str(); }

rd_status rd_ideal_parse(int vars, const char* text, rd_ideal** out) {
  if (rd_status s = require(text && out, "null argument"); s != RD_OK) return s;
  return guarded([&] { *out = new rd_ideal{parse_ideal(text, vars)}; });
}

rd_status rd_ideal_clone(const rd_ideal* ideal, rd_ideal** out) {
  if (rd_status s = require(ideal && out, "null argument"); s != RD_OK) return s;
  return guarded([&] { *out = new rd_ideal{ideal->value}; });
}

void rd_ideal_free(rd_ideal* ideal) { delete ideal; }

int rd_ideal_vars(const rd_ideal* ideal) { return ideal ? ideal->value.vars() : 0; }

int64_t rd_ideal_generator_count(const rd_ideal* ideal) {
  return ideal ? static_cast<int64_t>(ideal->value.generator_count()) : 0;
}

rd_status rd_ideal_format(const rd_ideal* ideal, char** out) {
  if (rd_status s = require(ideal && out, "null argument"); s != RD_OK) return s;
  return guarded([&] { *out = dup_string(ideal->value.str()); });
}

rd_status rd_ideal_is_m_primary(const rd_ideal* ideal, int* out) {
  if (rd_status s = require(ideal && out, "null argument"); s != RD_OK) return s;
  return guarded([&] { *out = is_m_primary(ideal->value) ? 1 : 0; });
}

rd_status rd_ideal_sum(const rd_ideal* a, const rd_ideal* b, rd_ideal** out) {
  if (rd_status s = require(a && b && out, "null argument"); s != RD_OK) return s;
  return guarded([&] { *out = new rd_ideal{sum(a->value, b->value)}; });
}

rd_status rd_ideal_product(const rd_ideal* a, const rd_ideal* b, rd_ideal** out) {
  if (rd_status s = require(a && b && out, "null argument"); s != RD_OK) return s;
  return guarded([&] { *out = new rd_ideal{product(a->value, b->value)}; });
}

rd_status rd_ideal_power(const rd_ideal* ideal, int m, rd_ideal** out) {
  if (rd_status s = require(ideal && out, "null argument"); s != RD_OK) return s;
  return guarded([&] { *out = new rd_ideal{power(ideal->value, m)}; });
}

rd_status rd_ideal_contains(const rd_ideal* ideal, const rd_ideal* other, int* out) {
  if (rd_status s = require(ideal && other && out, "null argument"); s != RD_OK) return s;
  return guarded([&] { *out = ideal->value.contains_ideal(other->value) ? 1 : 0; });
}

rd_status rd_regularity(const rd_ideal* ideal, const char* strategy, int64_t* out) {
  if (rd_status s = require(ideal && out, "null argument"); s != RD_OK) return s;
  return guarded([&] { *out = regularity(ideal->value, parse_strategy(strategy)); });
}

rd_status rd_socle(const rd_ideal* ideal, const char* strategy, rd_report** out) {
  if (rd_status s = require(ideal && out, "null argument"); s != RD_OK) return s;
  return guarded([&] {
    const SocleBasis basis = socle_monomials(ideal->value, parse_strategy(strategy));
    nlohmann::json j;
    j["type"] = "socle";
    j["vars"] = basis.ideal.vars();
    j["ideal"] = basis.ideal.str();
    j["count"] = basis.monomials.size();
    j["top_degree"] = basis.top_degree;
    j["monomials"] = monomial_list(basis.monomials);
    *out = new rd_report{std::move(j), true};
  });
}

rd_status rd_witness(const rd_ideal* ideal, const char* strategy, rd_report** out) {
  if (rd_status s = require(ideal && out, "null argument"); s != RD_OK) return s;
  return guarded([&] {
    const WitnessSet w = witness_set(ideal->value, parse_strategy(strategy));
    nlohmann::json j;
    j["type"] = "witness";
    j["vars"] = w.ideal.vars();
    j["ideal"] = w.ideal.str();
    j["count"] = w.monomials.size();
    j["degree"] = w.degree;
    j["regularity"] = w.degree + 1;
    j["monomials"] = monomial_list(w.monomials);
    *out = new rd_report{std::move(j), true};
  });
}

rd_status rd_defect_sequence(const rd_ideal* ideal, int m_max, rd_report** out) {
  if (rd_status s = require(ideal && out, "null argument"); s != RD_OK) return s;
  return guarded([&] {
    *out = new rd_report{defect_report_json(defect_sequence(ideal->value, m_max)), true};
  });
}

rd_status rd_stable_defect(const rd_ideal* ideal, int max_power, int64_t max_generators,
                           rd_report** out) {
  if (rd_status s = require(ideal && out, "null argument"); s != RD_OK) return s;
  return guarded([&] {
    const DefectReport report =
        stable_defect(ideal->value, budget_from(max_power, max_generators));
    *out = new rd_report{defect_report_json(report),
                         report.certificate != StableCertificate::uncertified};
  });
}

rd_status rd_run_checker(const char* name, const rd_ideal* ideal, const rd_ideal* other,
                         const char* params_json, rd_report** out) {
  if (rd_status s = require(name && ideal && out, "null argument"); s != RD_OK) return s;
  return guarded([&] {
    const nlohmann::json params = params_json && *params_json
                                      ? nlohmann::json::parse(params_json)
                                      : nlohmann::json::object();
    const std::string checker = name;
    const int m = params.value("m", 2);
    const int m_max = params.value("m_max", 4);
    const WorkBudget budget =
        budget_from(params.value("max_power", 0), params.value("max_generators", 0));

    CheckReport report;
    if (checker == "first-difference") {
      if (!other) fail(Errc::invalid_argument, "first-difference needs a second ideal");
      const std::string mode = params.value("mode", "witness");
      const FirstDifferenceMode fd_mode = mode == "regularity"
                                              ? FirstDifferenceMode::regularity_hypothesis
                                              : FirstDifferenceMode::witness_hypothesis;
      if (mode != "witness" && mode != "regularity") {
        fail(Errc::invalid_argument, "mode must be \"witness\" or \"regularity\"");
      }
      report = check_first_difference(ideal->value, other->value, m, fd_mode);
    } else if (checker == "difference-bound") {
      if (!other) fail(Errc::invalid_argument, "difference-bound needs a second ideal");
      report = check_difference_bound(ideal->value, other->value, m, params.value("refined", false));
    } else if (checker == "defect-monotone") {
      report = check_defect_monotone(ideal->value, m_max);
    } else if (checker == "strict-increase") {
      report = check_strict_increase(ideal->value, m_max);
    } else if (checker == "defect-nonnegative") {
      report = check_defect_nonnegative(ideal->value, m_max);
    } else if (checker == "socle-descent") {
      report = check_socle_descent(ideal->value, m);
    } else if (checker == "witness-comparison") {
      if (!other) fail(Errc::invalid_argument, "witness-comparison needs a second ideal");
      report = check_witness_comparison(ideal->value, other->value);
    } else if (checker == "reduction-bounds") {
      report = check_reduction_bounds(ideal->value, m, params.value("strict", false));
    } else if (checker == "increase-threshold") {
      report = check_increase_threshold(ideal->value, m);
    } else if (checker == "stabilization-bound") {
      report = check_stabilization_bound(ideal->value, budget);
    } else if (checker == "stable-defect-zero") {
      report = check_stable_defect_zero(ideal->value, budget);
    } else {
      fail(Errc::invalid_argument, "unknown checker: " + checker);
    }
    *out = new rd_report{report.to_json(), report.passed()};
  });
}

rd_status rd_binomial_inequality(int64_t n, int64_t d, rd_report** out) {
  if (rd_status s = require(out != nullptr, "null argument"); s != RD_OK) return s;
  return guarded([&] {
    const CheckReport report = check_binomial_inequality(n, d);
    *out = new rd_report{report.to_json(), report.passed()};
  });
}

rd_status rd_example(const char* name, const char* params_json, rd_ideal** ideal_out,
                     rd_report** report_out) {
  if (rd_status s = require(name && ideal_out && report_out, "null argument"); s != RD_OK) {
    return s;
  }
  return guarded([&] {
    const nlohmann::json params = params_json && *params_json
                                      ? nlohmann::json::parse(params_json)
                                      : nlohmann::json::object();
    const ExampleSpec spec = example_by_name(name, params);
    *ideal_out = new rd_ideal{spec.ideal};
    *report_out = new rd_report{example_report_json(spec), true};
  });
}

rd_status rd_explore(const char* config_json, rd_explore_callback cb, void* user,
                     rd_report** summary_out) {
  return guarded([&] {
    const nlohmann::json cfg_json = config_json && *config_json
                                        ? nlohmann::json::parse(config_json)
                                        : nlohmann::json::object();
    ExplorerConfig cfg;
    cfg.seed = cfg_json.value("seed", cfg.seed);
    cfg.samples = cfg_json.value("samples", cfg.samples);
    cfg.n_min = cfg_json.value("n_min", cfg.n_min);
    cfg.n_max = cfg_json.value("n_max", cfg.n_max);
    cfg.pure_min = cfg_json.value("pure_min", cfg.pure_min);
    cfg.pure_max = cfg_json.value("pure_max", cfg.pure_max);
    cfg.extra_max = cfg_json.value("extra_max", cfg.extra_max);
    cfg.extra_deg_min = cfg_json.value("extra_deg_min", cfg.extra_deg_min);
    cfg.extra_deg_max = cfg_json.value("extra_deg_max", cfg.extra_deg_max);
    cfg.m_max = cfg_json.value("m_max", cfg.m_max);
    cfg.threads = cfg_json.value("threads", cfg.threads);
    cfg.budget = budget_from(cfg_json.value("max_power", 10),
                             cfg_json.value("max_generators", 0));
    if (cfg_json.contains("checkers")) {
      cfg.checkers = cfg_json.at("checkers").get<std::vector<std::string>>();
    }
    const CampaignSummary summary = explore(cfg, [&](const SampleOutcome& sample) {
      if (cb) {
        const std::string record = sample.to_json().dump();
        cb(record.c_str(), user);
      }
    });
    if (summary_out) {
      *summary_out = new rd_report{summary.to_json(), summary.violations == 0};
    }
  });
}

int rd_report_ok(const rd_report* report) { return report && report->ok ? 1 : 0; }

rd_status rd_report_json(const rd_report* report, char** out) {
  if (rd_status s = require(report && out, "null argument"); s != RD_OK) return s;
  return guarded([&] { *out = dup_string(report->payload.dump()); });
}

void rd_report_free(rd_report* report) { delete report; }

void rd_string_free(char* text) { delete[] text; }

}  // extern "C"
