// Command-line front end. Links only the public C API of libregdefect.

#include <CLI11.hpp>
#include <json.hpp>
#include <regdefect/regdefect.h>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct IdealDeleter {
  void operator()(rd_ideal* p) const { rd_ideal_free(p); }
};
struct ReportDeleter {
  void operator()(rd_report* p) const { rd_report_free(p); }
};
using IdealPtr = std::unique_ptr<rd_ideal, IdealDeleter>;
using ReportPtr = std::unique_ptr<rd_report, ReportDeleter>;

int exit_code_for(rd_status status) {
  return status == RD_ERR_BUDGET ? kExitBudget : kExitUsage;
}

[[noreturn]] void die(rd_status status) {
  std::cerr << "error: " << rd_last_error() << "\n";
  std::exit(exit_code_for(status));
}

IdealPtr parse_ideal_or_die(int vars, const std::string& text) {
  rd_ideal* raw = nullptr;
  if (rd_status s = rd_ideal_parse(vars, text.c_str(), &raw); s != RD_OK) die(s);
  return IdealPtr(raw);
}

std::string take_string(char* raw) {
  std::string out = raw ? raw : "";
  rd_string_free(raw);
  return out;
}

std::string ideal_text(const rd_ideal* ideal) {
  char* raw = nullptr;
  if (rd_status s = rd_ideal_format(ideal, &raw); s != RD_OK) die(s);
  return take_string(raw);
}

json report_payload(const rd_report* report) {
  char* raw = nullptr;
  if (rd_status s = rd_report_json(report, &raw); s != RD_OK) die(s);
  return json::parse(take_string(raw));
}

bool jsonl_mode(const std::string& format) {
  if (format == "jsonl") return true;
  if (format == "table") return false;
  std::cerr << "error: --format must be table or jsonl\n";
  std::exit(kExitUsage);
}

void emit(const json& record) { std::cout << record.dump() << "\n"; }

// "lo:hi" or a single value
std::pair<long long, long long> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const long long v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    std::cerr << "error: malformed range '" << text << "' (expected lo:hi)\n";
    std::exit(kExitUsage);
  }
}

void print_monomial_report(const json& j, const char* label) {
  std::printf("%s of %s (n = %d)\n", label, j["ideal"].get<std::string>().c_str(),
              j["vars"].get<int>());
  if (j.contains("top_degree")) {
    std::printf("  top degree %lld, %lld monomials\n", j["top_degree"].get<long long>(),
                static_cast<long long>(j["count"].get<std::size_t>()));
  } else {
    std::printf("  degree %lld, regularity %lld, %lld monomials\n",
                j["degree"].get<long long>(), j["regularity"].get<long long>(),
                static_cast<long long>(j["count"].get<std::size_t>()));
  }
  for (const auto& u : j["monomials"]) {
    std::printf("    %s\n", u.get<std::string>().c_str());
  }
}

void print_defect_rows(const json& report) {
  std::printf("  %4s  %8s  %6s\n", "m", "reg I^m", "e_m");
  for (const auto& row : report["rows"]) {
    std::printf("  %4d  %8lld  %6lld\n", row["m"].get<int>(), row["reg"].get<long long>(),
                row["e"].get<long long>());
  }
}

void emit_defect_rows_jsonl(const json& report) {
  emit({{"type", "defect_header"},
        {"vars", report["vars"]},
        {"ideal", report["ideal"]},
        {"d", report["d"]}});
  for (const auto& row : report["rows"]) {
    emit({{"type", "defect_row"}, {"m", row["m"]}, {"reg", row["reg"]}, {"e", row["e"]}});
  }
}

int render_check_reports(const std::vector<json>& reports, bool jsonl) {
  bool violated = false;
  for (const json& r : reports) {
    const bool passed = r["passed"].get<bool>();
    violated = violated || !passed;
    if (jsonl) {
      emit(r);
      continue;
    }
    const bool hypothesis = r["hypothesis_holds"].get<bool>();
    const char* verdict = !hypothesis ? "VACUOUS" : (passed ? "PASS" : "FAIL");
    std::printf("[%s] %s  (%s)\n", verdict, r["name"].get<std::string>().c_str(),
                r["inputs"].get<std::string>().c_str());
    if (!passed) {
      std::printf("        violation: %s\n", r["violation"].dump().c_str());
    }
  }
  return violated ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_reg(int vars, const std::string& ideal, const std::string& strategy, bool jsonl) {
  IdealPtr I = parse_ideal_or_die(vars, ideal);
  int64_t reg = 0;
  if (rd_status s = rd_regularity(I.get(), strategy.c_str(), &reg); s != RD_OK) die(s);
  if (jsonl) {
    emit({{"type", "regularity"},
          {"vars", vars},
          {"ideal", ideal_text(I.get())},
          {"strategy", strategy},
          {"reg", reg}});
  } else {
    std::printf("reg = %lld\n", static_cast<long long>(reg));
  }
  return kExitOk;
}

int cmd_socle(int vars, const std::string& ideal, const std::string& strategy, bool jsonl,
              bool witness_only) {
  IdealPtr I = parse_ideal_or_die(vars, ideal);
  rd_report* raw = nullptr;
  const rd_status s = witness_only ? rd_witness(I.get(), strategy.c_str(), &raw)
                                   : rd_socle(I.get(), strategy.c_str(), &raw);
  if (s != RD_OK) die(s);
  ReportPtr report(raw);
  const json j = report_payload(report.get());
  if (jsonl) {
    emit(j);
  } else {
    print_monomial_report(j, witness_only ? "witness set" : "socle");
  }
  return kExitOk;
}

int cmd_defect(int vars, const std::string& ideal, int m_max, bool jsonl) {
  IdealPtr I = parse_ideal_or_die(vars, ideal);
  rd_report* raw = nullptr;
  if (rd_status s = rd_defect_sequence(I.get(), m_max, &raw); s != RD_OK) die(s);
  ReportPtr report(raw);
  const json j = report_payload(report.get());
  if (jsonl) {
    emit_defect_rows_jsonl(j);
  } else {
    std::printf("defect sequence of %s (d = %lld)\n", j["ideal"].get<std::string>().c_str(),
                j["d"].get<long long>());
    print_defect_rows(j);
  }
  return kExitOk;
}

int cmd_stable(int vars, const std::string& ideal, int budget, long long max_generators,
               bool jsonl) {
  IdealPtr I = parse_ideal_or_die(vars, ideal);
  rd_report* raw = nullptr;
  if (rd_status s = rd_stable_defect(I.get(), budget, max_generators, &raw); s != RD_OK) {
    die(s);
  }
  ReportPtr report(raw);
  const json j = report_payload(report.get());
  const bool budget_exhausted = j["budget_exhausted"].get<bool>();
  if (jsonl) {
    emit_defect_rows_jsonl(j);
    json summary = {{"type", "stable_summary"},
                    {"certificate", j["certificate"]},
                    {"budget_exhausted", budget_exhausted}};
    if (j.contains("stable_from")) summary["stable_from"] = j["stable_from"];
    if (j.contains("e_infinity")) summary["e_infinity"] = j["e_infinity"];
    emit(summary);
  } else {
    std::printf("stable defect of %s (d = %lld)\n", j["ideal"].get<std::string>().c_str(),
                j["d"].get<long long>());
    print_defect_rows(j);
    std::printf("  certificate: %s\n", j["certificate"].get<std::string>().c_str());
    if (j.contains("stable_from")) {
      std::printf("  stable from m = %d with e_infinity = %lld\n", j["stable_from"].get<int>(),
                  j["e_infinity"].get<long long>());
    }
    if (j.contains("note")) {
      std::printf("  note: %s\n", j["note"].get<std::string>().c_str());
    }
  }
  return budget_exhausted ? kExitBudget : kExitOk;
}

int cmd_verify(int vars, const std::string& ideal, const std::string& ideal2,
               const std::string& checker, const json& params, bool jsonl) {
  IdealPtr I = parse_ideal_or_die(vars, ideal);
  IdealPtr J;
  if (!ideal2.empty()) J = parse_ideal_or_die(vars, ideal2);

  std::vector<std::string> names;
  if (checker == "all") {
    names = {"defect-nonnegative", "strict-increase",    "defect-monotone",
             "socle-descent",      "reduction-bounds",   "increase-threshold",
             "stabilization-bound", "stable-defect-zero"};
    if (J) {
      names.insert(names.end(), {"first-difference", "difference-bound", "witness-comparison"});
    }
  } else {
    names.push_back(checker);
  }

  const std::string params_text = params.dump();
  std::vector<json> reports;
  for (const std::string& name : names) {
    rd_report* raw = nullptr;
    const rd_status s =
        rd_run_checker(name.c_str(), I.get(), J.get(), params_text.c_str(), &raw);
    if (s != RD_OK) die(s);
    ReportPtr report(raw);
    reports.push_back(report_payload(report.get()));
  }
  return render_check_reports(reports, jsonl);
}

int cmd_example(const std::string& name, const json& params, int m_max_override, bool jsonl) {
  rd_ideal* ideal_raw = nullptr;
  rd_report* report_raw = nullptr;
  if (rd_status s = rd_example(name.c_str(), params.dump().c_str(), &ideal_raw, &report_raw);
      s != RD_OK) {
    die(s);
  }
  IdealPtr I(ideal_raw);
  ReportPtr spec_report(report_raw);
  const json spec = report_payload(spec_report.get());

  const int m_max = m_max_override > 0 ? m_max_override : spec["suggested_m_max"].get<int>();
  rd_report* rows_raw = nullptr;
  if (rd_status s = rd_defect_sequence(I.get(), m_max, &rows_raw); s != RD_OK) die(s);
  ReportPtr rows_report(rows_raw);
  const json computed = report_payload(rows_report.get());

  std::vector<long long> e;
  for (const auto& row : computed["rows"]) e.push_back(row["e"].get<long long>());

  // verdict: the computed sequence must match the predicted prefix extended
  // by its constant tail; when an alternative reading exists, matching
  // either reading counts, and the realized reading is reported
  auto matches = [&](const json& prefix, const json& tail) {
    if (!prefix.is_array() || prefix.empty()) return true;  // nothing predicted
    for (std::size_t i = 0; i < e.size(); ++i) {
      long long expected;
      if (i < prefix.size()) {
        expected = prefix[i].get<long long>();
      } else if (!tail.is_null()) {
        expected = tail.get<long long>();
      } else {
        break;  // prediction covers only a prefix
      }
      if (e[i] != expected) return false;
    }
    return true;
  };

  const bool match_primary = matches(spec.value("predicted", json::array()),
                                     spec.value("predicted_tail", json()));
  const bool match_alt = spec.contains("predicted_alt") &&
                         matches(spec["predicted_alt"], spec.value("predicted_alt_tail", json()));
  const bool has_alt = spec.contains("predicted_alt");
  // with two readings, agreeing with either is a pass; the shape constraints
  // (no negative entries) always apply
  bool ok = match_primary || (has_alt && match_alt);
  for (long long v : e) ok = ok && v >= 0;

  std::string realized = match_primary ? "displayed" : (match_alt ? "alternative" : "neither");

  if (jsonl) {
    emit(spec);
    emit_defect_rows_jsonl(computed);
    emit({{"type", "example_verdict"},
          {"name", name},
          {"match", ok},
          {"match_displayed", match_primary},
          {"match_alternative", has_alt ? json(match_alt) : json(nullptr)},
          {"realized_reading", realized},
          {"computed", e}});
  } else {
    std::printf("example %s: %s\n", name.c_str(), spec["description"].get<std::string>().c_str());
    std::printf("  parameters: %s\n", spec["parameters"].dump().c_str());
    if (spec.contains("companion")) {
      std::printf("  companion ideal: %s\n", spec["companion"].get<std::string>().c_str());
    }
    print_defect_rows(computed);
    std::printf("  predicted: %s", spec["predicted"].dump().c_str());
    if (has_alt) std::printf("  (alternative: %s)", spec["predicted_alt"].dump().c_str());
    std::printf("\n  verdict: %s (reading realized: %s)\n", ok ? "match" : "MISMATCH",
                realized.c_str());
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_inequality(const std::string& n_range, const std::string& d_range, bool jsonl) {
  const auto [n_lo, n_hi] = parse_range(n_range);
  const auto [d_lo, d_hi] = parse_range(d_range);
  bool pattern_ok = true;
  if (!jsonl) {
    std::printf("  %3s  %3s  %14s  %14s  %6s\n", "n", "d", "lhs", "rhs", "holds");
  }
  for (long long n = n_lo; n <= n_hi; ++n) {
    for (long long d = d_lo; d <= d_hi; ++d) {
      rd_report* raw = nullptr;
      if (rd_status s = rd_binomial_inequality(n, d, &raw); s != RD_OK) die(s);
      ReportPtr report(raw);
      const json j = report_payload(report.get());
      const json& q = j["quantities"];
      pattern_ok = pattern_ok && j["passed"].get<bool>();
      if (jsonl) {
        emit({{"type", "binomial_cell"},
              {"n", n},
              {"d", d},
              {"lhs", q["lhs"]},
              {"rhs", q["rhs"]},
              {"holds", q["holds"]},
              {"expected", q["expected"]}});
      } else {
        std::printf("  %3lld  %3lld  %14s  %14s  %6s\n", n, d, q["lhs"].dump().c_str(),
                    q["rhs"].dump().c_str(), q["holds"].get<bool>() ? "yes" : "no");
      }
    }
  }
  if (jsonl) {
    emit({{"type", "binomial_summary"}, {"pattern_ok", pattern_ok}});
  } else {
    std::printf("pattern %s\n", pattern_ok ? "confirmed: holds exactly for n >= 4"
                                           : "BROKEN: see rows above");
  }
  return pattern_ok ? kExitOk : kExitViolation;
}

struct ExploreSink {
  bool jsonl;
  int samples_printed = 0;
};

int cmd_explore(const json& config, bool jsonl) {
  ExploreSink sink{jsonl};
  rd_report* summary_raw = nullptr;
  const rd_status s = rd_explore(
      config.dump().c_str(),
      [](const char* record, void* user) {
        auto* sink = static_cast<ExploreSink*>(user);
        if (sink->jsonl) {
          std::cout << record << "\n";
        } else {
          const json j = json::parse(record);
          std::printf("sample %4d: n=%d, %s | defects %s | violations %lld%s%s\n",
                      j["index"].get<int>(), j["vars"].get<int>(),
                      j["ideal"].get<std::string>().c_str(), j["defects"].dump().c_str(),
                      j["violations"].get<long long>(),
                      j["eu10_flag"].get<bool>() ? " [eu10]" : "",
                      j["inconclusive"].get<bool>() ? " [inconclusive]" : "");
        }
        ++sink->samples_printed;
      },
      &sink, &summary_raw);
  if (s != RD_OK) die(s);
  ReportPtr summary(summary_raw);
  const json j = report_payload(summary.get());
  if (jsonl) {
    emit(j);
  } else {
    std::printf(
        "campaign: %d samples, %lld violations, %lld strict-upper violations logged, "
        "%d eu10 flags, %d inconclusive\n",
        j["samples"].get<int>(), j["violations"].get<long long>(),
        j["strict_upper_violations"].get<long long>(), j["eu10_flags"].get<int>(),
        j["inconclusive"].get<int>());
  }
  return j["violations"].get<long long>() == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regdefect: regularity defect sequences of m-primary monomial ideals"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "output format: table or jsonl")
      ->capture_default_str();

  int vars = 0;
  std::string ideal_text_arg, ideal2_text, strategy = "corner";
  int m = 2, m_max = 4, budget = 0;
  long long max_generators = 0;

  auto add_ideal_opts = [&](CLI::App* cmd, bool need_ideal = true) {
    cmd->add_option("--vars", vars, "number of ring variables")->required();
    auto* opt = cmd->add_option("--ideal", ideal_text_arg, "ideal expression");
    if (need_ideal) opt->required();
  };

  auto* reg_cmd = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  add_ideal_opts(reg_cmd);
  reg_cmd->add_option("--strategy", strategy, "box or corner")->capture_default_str();

  auto* socle_cmd = app.add_subcommand("socle", "monomial basis of the socle");
  add_ideal_opts(socle_cmd);
  socle_cmd->add_option("--strategy", strategy, "box or corner")->capture_default_str();

  auto* witness_cmd = app.add_subcommand("witness", "maximal-degree socle monomials");
  add_ideal_opts(witness_cmd);
  witness_cmd->add_option("--strategy", strategy, "box or corner")->capture_default_str();

  auto* defect_cmd = app.add_subcommand("defect", "defect sequence e_m = reg I^m - d m");
  add_ideal_opts(defect_cmd);
  defect_cmd->add_option("--m-max", m_max, "highest power")->capture_default_str();

  auto* stable_cmd = app.add_subcommand("stable", "certified stable defect");
  add_ideal_opts(stable_cmd);
  stable_cmd->add_option("--budget", budget, "power cap (0 = theorem bound)")
      ->capture_default_str();
  stable_cmd->add_option("--max-generators", max_generators, "per-power generator ceiling");

  auto* verify_cmd = app.add_subcommand("verify", "run result checkers");
  add_ideal_opts(verify_cmd);
  std::string checker = "all";
  std::string mode = "witness";
  bool refined = false, strict = false;
  verify_cmd->add_option("--checker", checker, "checker name or 'all'")->capture_default_str();
  verify_cmd->add_option("--ideal2", ideal2_text, "second ideal (J) for two-ideal checkers");
  verify_cmd->add_option("--m", m, "power parameter")->capture_default_str();
  verify_cmd->add_option("--m-max", m_max, "sequence window")->capture_default_str();
  verify_cmd->add_option("--mode", mode, "first-difference mode: witness or regularity")
      ->capture_default_str();
  verify_cmd->add_flag("--refined", refined, "difference-bound refined hypothesis");
  verify_cmd->add_flag("--strict", strict, "include the strict upper bound");
  verify_cmd->add_option("--budget", budget, "power cap for stabilization checkers");
  verify_cmd->add_option("--max-generators", max_generators, "per-power generator ceiling");

  auto* example_cmd = app.add_subcommand("example", "built-in example families");
  std::string example_name;
  int ex_n = 0;
  long long ex_d = 0, ex_b = 0;
  bool ex_zd = false;
  int ex_m_max = 0;
  example_cmd
      ->add_option("name", example_name, "fat-socle | increasing | slow-decreasing | mixed")
      ->required();
  example_cmd->add_option("--n", ex_n, "number of variables");
  example_cmd->add_option("--d", ex_d, "asymptotic generating degree");
  example_cmd->add_option("--b", ex_b, "degree excess");
  example_cmd->add_flag("--z-power-d", ex_zd, "slow-decreasing variant with z powers at d");
  example_cmd->add_option("--m-max", ex_m_max, "override the computed window");

  auto* ineq_cmd = app.add_subcommand("inequality", "binomial inequality table");
  std::string n_range = "2:8", d_range = "2:10";
  ineq_cmd->add_option("--n", n_range, "n range lo:hi")->capture_default_str();
  ineq_cmd->add_option("--d", d_range, "d range lo:hi")->capture_default_str();

  auto* explore_cmd = app.add_subcommand("explore", "randomized conjecture campaign");
  std::uint64_t seed = 1;
  int samples = 100, threads = 1, ex_extra = 6, ex_mmax = 4;
  std::string nr = "2:4", pr = "2:5", edr = "0:0", checkers_csv;
  int ex_budget = 10;
  long long ex_maxgen = 0;
  explore_cmd->add_option("--seed", seed, "campaign seed")->capture_default_str();
  explore_cmd->add_option("--samples", samples, "number of samples")->capture_default_str();
  explore_cmd->add_option("--n-range", nr, "variable range lo:hi")->capture_default_str();
  explore_cmd->add_option("--pure-range", pr, "pure-power range lo:hi")->capture_default_str();
  explore_cmd->add_option("--extras", ex_extra, "max extra generators")->capture_default_str();
  explore_cmd->add_option("--extra-degree", edr, "degree window lo:hi for extras (0:0 = off)")
      ->capture_default_str();
  explore_cmd->add_option("--m-max", ex_mmax, "sequence window per sample")
      ->capture_default_str();
  explore_cmd->add_option("--budget", ex_budget, "power cap per sample")->capture_default_str();
  explore_cmd->add_option("--max-generators", ex_maxgen, "per-power generator ceiling");
  explore_cmd->add_option("--checkers", checkers_csv, "comma-separated checker subset");
  explore_cmd->add_option("--threads", threads, "worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const bool jsonl = jsonl_mode(format);

  try {
    if (reg_cmd->parsed()) return cmd_reg(vars, ideal_text_arg, strategy, jsonl);
    if (socle_cmd->parsed()) return cmd_socle(vars, ideal_text_arg, strategy, jsonl, false);
    if (witness_cmd->parsed()) return cmd_socle(vars, ideal_text_arg, strategy, jsonl, true);
    if (defect_cmd->parsed()) return cmd_defect(vars, ideal_text_arg, m_max, jsonl);
    if (stable_cmd->parsed()) {
      return cmd_stable(vars, ideal_text_arg, budget, max_generators, jsonl);
    }
    if (verify_cmd->parsed()) {
      json params = {{"m", m},         {"m_max", m_max},   {"mode", mode},
                     {"refined", refined}, {"strict", strict}, {"max_power", budget},
                     {"max_generators", max_generators}};
      return cmd_verify(vars, ideal_text_arg, ideal2_text, checker, params, jsonl);
    }
    if (example_cmd->parsed()) {
      json params = json::object();
      if (ex_n > 0) params["n"] = ex_n;
      if (ex_d > 0) params["d"] = ex_d;
      if (ex_b > 0) params["b"] = ex_b;
      if (ex_zd) params["z_power_d"] = true;
      return cmd_example(example_name, params, ex_m_max, jsonl);
    }
    if (ineq_cmd->parsed()) return cmd_inequality(n_range, d_range, jsonl);
    if (explore_cmd->parsed()) {
      const auto [n_lo, n_hi] = parse_range(nr);
      const auto [p_lo, p_hi] = parse_range(pr);
      const auto [e_lo, e_hi] = parse_range(edr);
      json config = {{"seed", seed},       {"samples", samples},
                     {"n_min", n_lo},      {"n_max", n_hi},
                     {"pure_min", p_lo},   {"pure_max", p_hi},
                     {"extra_max", ex_extra}, {"extra_deg_min", e_lo},
                     {"extra_deg_max", e_hi}, {"m_max", ex_mmax},
                     {"max_power", ex_budget}, {"max_generators", ex_maxgen},
                     {"threads", threads}};
      if (!checkers_csv.empty()) {
        std::vector<std::string> names;
        std::size_t start = 0;
        while (start <= checkers_csv.size()) {
          const auto comma = checkers_csv.find(',', start);
          names.push_back(checkers_csv.substr(
              start, comma == std::string::npos ? std::string::npos : comma - start));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
        config["checkers"] = names;
      }
      return cmd_explore(config, jsonl);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
