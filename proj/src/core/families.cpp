#include "families.hpp"

#include <algorithm>

namespace regdef {

namespace {

void validate(const ExampleSpec& spec) {
  for (Exp e : spec.predicted) {
    if (e < 0) fail(Errc::internal, "predicted defect entry below zero");
  }
  if (!spec.predicted.empty() && spec.predicted_tail &&
      spec.predicted.back() < 0) {
    fail(Errc::internal, "inconsistent predicted tail");
  }
  if (spec.predicted_tail && *spec.predicted_tail < 0) {
    fail(Errc::internal, "predicted tail below zero");
  }
}

Monomial pure(int n, int var, Exp e) {
  std::vector<Exp> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(var)] = e;
  return Monomial(std::move(v));
}

}  // namespace

ExampleSpec example_fat_socle() {
  ExampleSpec spec;
  spec.name = "fat-socle";
  spec.parameters = nlohmann::json::object();
  spec.description =
      "three variables; J spanned by x_i^8, x_i^7 x_j^2 and x_i^7 x_j x_k, I = J + m^10";

  std::vector<Monomial> j_gens;
  for (int i = 0; i < 3; ++i) {
    j_gens.push_back(pure(3, i, 8));
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<Exp> e(3, 0);
      e[static_cast<std::size_t>(i)] = 7;
      e[static_cast<std::size_t>(j)] = 2;
      j_gens.emplace_back(std::move(e));
    }
    std::vector<Exp> e(3, 1);
    e[static_cast<std::size_t>(i)] = 7;
    j_gens.emplace_back(std::move(e));
  }
  const MonomialIdeal j = minimalize(3, j_gens);
  spec.companion = j;
  spec.ideal = sum(j, max_ideal_power(3, 10));
  spec.predicted = {2, 3, 3};
  spec.predicted_tail = 3;
  spec.suggested_m_max = 3;
  validate(spec);
  return spec;
}

ExampleSpec example_increasing(int n, Exp d, Exp b) {
  if (n < 2 || d < 2 || b < 1 || b > static_cast<Exp>(n) * (d - 1) - d) {
    fail(Errc::invalid_argument,
         "increasing family requires n >= 2, d >= 2, 1 <= b <= n(d-1) - d");
  }
  ExampleSpec spec;
  spec.name = "increasing";
  spec.parameters = {{"n", n}, {"d", d}, {"b", b}};
  spec.description = "pure powers of degree d plus the full power m^{d+b}";
  spec.ideal = sum(boxed_ideal(std::vector<Exp>(static_cast<std::size_t>(n), d)),
                   max_ideal_power(n, d + b));

  const Exp m0 = (static_cast<Exp>(n) * (d - 1) + 1) / (d + b);
  const Exp delta = std::max<Exp>(static_cast<Exp>(n) * (d - 1) + 1 - m0 * (d + b) - d, 0);
  spec.parameters["m0"] = m0;
  spec.parameters["delta"] = delta;
  for (Exp m = 1; m <= m0; ++m) spec.predicted.push_back(m * b);
  spec.predicted.push_back(m0 * b + delta);
  spec.predicted_tail = m0 * b + delta;
  spec.suggested_m_max = static_cast<int>(m0) + 3;
  validate(spec);
  return spec;
}

ExampleSpec example_slow_decreasing(int n, Exp d, bool z_power_d) {
  if (n < 2 || d < 3) {
    fail(Errc::invalid_argument, "slow-decreasing family requires n >= 2, d >= 3");
  }
  ExampleSpec spec;
  spec.name = "slow-decreasing";
  spec.parameters = {{"n", n}, {"d", d}, {"z_power_d", z_power_d}};
  spec.description = z_power_d
                         ? "x^{d-1} m plus degree-d pure powers of the remaining variables"
                         : "x^{d-1} m plus degree-(d-1) pure powers of the remaining variables";

  std::vector<Monomial> gens;
  for (int j = 0; j < n; ++j) {
    std::vector<Exp> e(static_cast<std::size_t>(n), 0);
    e[0] = d - 1;
    e[static_cast<std::size_t>(j)] += 1;
    gens.emplace_back(std::move(e));
  }
  for (int i = 1; i < n; ++i) gens.push_back(pure(n, i, z_power_d ? d : d - 1));
  spec.ideal = minimalize(n, gens);

  if (z_power_d) {
    // published claim: constant from the start at n(d-1) - 1
    spec.predicted = {static_cast<Exp>(n) * (d - 1) - 1};
    spec.predicted_tail = spec.predicted.front();
    spec.suggested_m_max = 4;
  } else {
    // as displayed: from (n-1)(d-2) with unit decrements down to 0
    const Exp start = static_cast<Exp>(n - 1) * (d - 2);
    for (Exp e = start; e >= 0; --e) spec.predicted.push_back(e);
    spec.predicted_tail = 0;
    // alternative reading: the decrements stop one step earlier, at 1
    for (Exp e = start; e >= 1; --e) spec.predicted_alt.push_back(e);
    spec.predicted_alt_tail = 1;
    spec.suggested_m_max = static_cast<int>(start) + 2;
  }
  validate(spec);
  return spec;
}

ExampleSpec example_mixed(int n, Exp d, Exp b) {
  if (n <= 2 || d < 3 || b < 1) {
    fail(Errc::invalid_argument, "mixed family requires n > 2, d >= 3, b >= 1");
  }
  ExampleSpec spec;
  spec.name = "mixed";
  spec.parameters = {{"n", n}, {"d", d}, {"b", b}};
  spec.description = "sum of x_i^{d-1} m over all variables plus m^{d+b}";

  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<Exp> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = d - 1;
      e[static_cast<std::size_t>(j)] += 1;
      gens.emplace_back(std::move(e));
    }
  }
  spec.ideal = sum(minimalize(n, gens), max_ideal_power(n, d + b));
  spec.stable_defect_must_vanish = true;

  if (n == 4 && d == 5 && b == 1) {
    spec.predicted = {1, 2, 2, 1, 1, 1, 1, 1, 0, 0};
    spec.predicted_tail = 0;
    spec.suggested_m_max = 10;
  } else if (n == 4 && d == 5 && b == 2) {
    spec.predicted = {2, 3, 2, 2, 2, 2, 2, 1, 0, 0};
    spec.predicted_tail = 0;
    spec.suggested_m_max = 10;
  } else if (n == 4 && d == 6 && b == 2) {
    spec.predicted = {2, 4, 4, 3};  // published prefix; e_12 = 0
    spec.suggested_m_max = 12;
  } else {
    spec.suggested_m_max = 8;
  }
  validate(spec);
  return spec;
}

ExampleSpec example_by_name(const std::string& name, const nlohmann::json& params) {
  auto get_int = [&](const char* key, std::optional<Exp> fallback) -> Exp {
    if (params.contains(key)) return params.at(key).get<Exp>();
    if (fallback) return *fallback;
    fail(Errc::invalid_argument, std::string("missing parameter ") + key);
  };
  if (name == "fat-socle") return example_fat_socle();
  if (name == "increasing") {
    return example_increasing(static_cast<int>(get_int("n", 3)), get_int("d", 3),
                              get_int("b", 1));
  }
  if (name == "slow-decreasing") {
    const bool zd = params.contains("z_power_d") && params.at("z_power_d").get<bool>();
    return example_slow_decreasing(static_cast<int>(get_int("n", 3)), get_int("d", 4), zd);
  }
  if (name == "mixed") {
    return example_mixed(static_cast<int>(get_int("n", 4)), get_int("d", 5), get_int("b", 1));
  }
  fail(Errc::invalid_argument, "unknown example family: " + name);
}

}  // namespace regdef
