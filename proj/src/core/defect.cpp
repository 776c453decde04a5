#include "defect.hpp"

#include <algorithm>
#include <limits>

namespace regdef {

namespace {

void require_primary(const MonomialIdeal& ideal, const char* what) {
  if (!is_m_primary(ideal)) {
    fail(Errc::not_m_primary, std::string(what) + " requires an m-primary ideal");
  }
}

std::vector<Exp> pure_vector(const MonomialIdeal& ideal) {
  auto pures = pure_power_exponents(ideal);
  std::vector<Exp> out;
  out.reserve(pures.size());
  for (const auto& p : pures) out.push_back(*p);
  return out;
}

}  // namespace

std::string to_string(StableCertificate c) {
  switch (c) {
    case StableCertificate::reached_zero_after_monotone_threshold:
      return "reached-zero-after-monotone-threshold";
    case StableCertificate::reached_theorem_bound:
      return "reached-theorem-bound";
    case StableCertificate::uncertified:
      return "uncertified";
  }
  return "uncertified";
}

Exp PurePowerProfile::pure_of(int var) const {
  if (var == x_var) return d;
  for (int y : y_vars) {
    if (y == var) return d;
  }
  for (const auto& [z, dz] : z_vars) {
    if (z == var) return dz;
  }
  fail(Errc::invalid_argument, "variable outside the profile");
}

MonomialIdeal PurePowerProfile::y_block() const {
  std::vector<Monomial> gens;
  for (int y : y_vars) {
    std::vector<Exp> e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(y)] = d;
    gens.emplace_back(std::move(e));
  }
  return minimalize(vars, gens);
}

MonomialIdeal PurePowerProfile::z_block() const {
  std::vector<Monomial> gens;
  for (const auto& [z, dz] : z_vars) {
    std::vector<Exp> e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(z)] = dz;
    gens.emplace_back(std::move(e));
  }
  return minimalize(vars, gens);
}

Exp asymptotic_degree(const MonomialIdeal& ideal) {
  require_primary(ideal, "asymptotic generating degree");
  Exp d = 0;
  for (Exp p : pure_vector(ideal)) d = std::max(d, p);
  return d;
}

PurePowerProfile pure_power_profile(const MonomialIdeal& ideal, std::optional<int> x_choice) {
  require_primary(ideal, "pure-power profile");
  const auto pures = pure_vector(ideal);
  PurePowerProfile profile;
  profile.vars = ideal.vars();
  profile.d = *std::max_element(pures.begin(), pures.end());

  if (x_choice) {
    const int x = *x_choice;
    if (x < 0 || x >= ideal.vars() || pures[static_cast<std::size_t>(x)] != profile.d) {
      fail(Errc::invalid_argument,
           "chosen variable does not carry the maximal pure power");
    }
    profile.x_var = x;
  } else {
    profile.x_var = static_cast<int>(
        std::find(pures.begin(), pures.end(), profile.d) - pures.begin());
  }
  for (int i = 0; i < ideal.vars(); ++i) {
    if (i == profile.x_var) continue;
    if (pures[static_cast<std::size_t>(i)] == profile.d) {
      profile.y_vars.push_back(i);
    } else {
      profile.z_vars.emplace_back(i, pures[static_cast<std::size_t>(i)]);
    }
  }
  std::stable_sort(profile.z_vars.begin(), profile.z_vars.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return profile;
}

ReductionData reduce_monomial(const Monomial& a, const PurePowerProfile& profile, Exp m) {
  if (a.vars() != profile.vars) {
    fail(Errc::dimension_mismatch, "monomial dimension does not match profile");
  }
  ReductionData r;
  const std::size_t n = static_cast<std::size_t>(profile.vars);
  r.quotients.resize(n);
  r.remainders.resize(n);
  for (int i = 0; i < profile.vars; ++i) {
    const Exp pure = profile.pure_of(i);
    const Exp e = a.exponent(i);
    r.quotients[static_cast<std::size_t>(i)] = e / pure;
    r.remainders[static_cast<std::size_t>(i)] = e % pure;
  }
  r.m_x = r.quotients[static_cast<std::size_t>(profile.x_var)];
  for (int y : profile.y_vars) r.ord_y += r.quotients[static_cast<std::size_t>(y)];
  for (const auto& [z, dz] : profile.z_vars) {
    (void)dz;
    r.ord_z += r.quotients[static_cast<std::size_t>(z)];
  }
  r.abar = Monomial(std::vector<Exp>(r.remainders));
  std::vector<Exp> ax(r.remainders);
  ax[static_cast<std::size_t>(profile.x_var)] =
      checked_add(ax[static_cast<std::size_t>(profile.x_var)], checked_mul(r.m_x, profile.d));
  r.a_x = Monomial(std::move(ax));
  r.mbar = m - r.m_x - r.ord_y - r.ord_z;

  // reconstruction check: quotients * pure + remainders must give a back
  for (int i = 0; i < profile.vars; ++i) {
    const Exp back = checked_add(
        checked_mul(r.quotients[static_cast<std::size_t>(i)], profile.pure_of(i)),
        r.remainders[static_cast<std::size_t>(i)]);
    if (back != a.exponent(i)) fail(Errc::internal, "reduction does not reconstruct input");
  }
  return r;
}

GeneratorDegreeStats generator_degree_stats(const MonomialIdeal& ideal) {
  require_primary(ideal, "generator degree statistics");
  GeneratorDegreeStats s;
  s.d = asymptotic_degree(ideal);
  s.b = ideal.max_generator_degree() - s.d;
  Exp best = std::numeric_limits<Exp>::max();
  for (std::size_t i = 0; i < ideal.generator_count(); ++i) {
    const Exp deg = ideal.generator_degree(i);
    if (deg > s.d) best = std::min(best, deg);
  }
  if (best != std::numeric_limits<Exp>::max()) s.b_prime = best - s.d;
  return s;
}

GeneratorDegreeStats generator_degree_stats(const MonomialIdeal& ideal,
                                            const MonomialIdeal& subideal) {
  GeneratorDegreeStats s = generator_degree_stats(ideal);
  if (!ideal.contains_ideal(subideal)) {
    fail(Errc::not_subideal, "J must be contained in I");
  }
  if (subideal.is_zero()) fail(Errc::invalid_argument, "subideal must be nonzero");
  s.has_subideal = true;
  s.c = subideal.max_generator_degree();
  s.c_prime = subideal.min_generator_degree();
  Exp best = std::numeric_limits<Exp>::max();
  for (std::size_t i = 0; i < ideal.generator_count(); ++i) {
    if (!subideal.contains(ideal.generator_span(i))) {
      best = std::min(best, ideal.generator_degree(i));
    }
  }
  if (best == std::numeric_limits<Exp>::max()) {
    s.d_prime_infinite = true;
  } else {
    s.d_prime = best;
  }
  return s;
}

Exp mu(const MonomialIdeal& ideal, int m, PowerCache& cache) {
  require_primary(ideal, "mu");
  if (m < 1) fail(Errc::invalid_argument, "mu requires m >= 1");
  const MonomialIdeal& pm = cache.power(m);
  const WitnessSet w = witness_set(pm, Strategy::corner);
  const auto base_profile = pure_power_profile(ideal);

  Exp best = std::numeric_limits<Exp>::max();
  for (const Monomial& a : w.monomials) {
    best = std::min(best, reduce_monomial(a, base_profile, m).mbar);
  }
  // mbar is m minus the sum of all quotients, so it cannot depend on which
  // maximal-degree variable is distinguished; verify on every admissible
  // choice anyway.
  for (int v = 0; v < ideal.vars(); ++v) {
    if (base_profile.pure_of(v) != base_profile.d) continue;
    const auto alt = pure_power_profile(ideal, v);
    Exp alt_best = std::numeric_limits<Exp>::max();
    for (const Monomial& a : w.monomials) {
      alt_best = std::min(alt_best, reduce_monomial(a, alt, m).mbar);
    }
    if (alt_best != best) fail(Errc::internal, "mu depends on the distinguished variable");
  }
  return best;
}

Exp mu(const MonomialIdeal& ideal, int m) {
  PowerCache cache(ideal);
  return mu(ideal, m, cache);
}

namespace {

DefectRow make_row(const MonomialIdeal& base_power, Exp d, int m) {
  DefectRow row;
  row.m = m;
  row.reg = regularity(base_power, Strategy::corner);
  row.e = row.reg - checked_mul(d, m);
  return row;
}

void check_row_invariants(const DefectReport& report) {
  Exp prev_reg = 0;
  for (const DefectRow& row : report.rows) {
    if (row.e < 0) fail(Errc::internal, "negative regularity defect");
    if (row.m > 1 && row.reg <= prev_reg) {
      fail(Errc::internal, "regularity failed to increase strictly");
    }
    prev_reg = row.reg;
  }
}

}  // namespace

DefectReport defect_sequence(const MonomialIdeal& ideal, int m_max, PowerCache& cache) {
  require_primary(ideal, "defect sequence");
  if (m_max < 1) fail(Errc::invalid_argument, "m_max must be at least 1");
  DefectReport report;
  report.ideal = ideal;
  report.d = asymptotic_degree(ideal);
  for (int m = 1; m <= m_max; ++m) {
    report.rows.push_back(make_row(cache.power(m), report.d, m));
  }
  check_row_invariants(report);
  return report;
}

DefectReport defect_sequence(const MonomialIdeal& ideal, int m_max) {
  PowerCache cache(ideal);
  return defect_sequence(ideal, m_max, cache);
}

Rat monotone_threshold(const MonomialIdeal& ideal) {
  const auto stats = generator_degree_stats(ideal);
  if (!stats.b_prime) return Rat(0, 1);
  const MonomialIdeal low = truncate_below(ideal, stats.d);
  return Rat(regularity(low, Strategy::corner), checked_add(stats.d, *stats.b_prime));
}

int monotone_from(const MonomialIdeal& ideal) {
  const Rat tau = monotone_threshold(ideal);
  const Exp from_threshold = tau.first_integer_above();
  return static_cast<int>(std::min<Exp>(from_threshold, ideal.vars()));
}

Exp stabilization_bound(const MonomialIdeal& ideal) {
  const auto profile = pure_power_profile(ideal);
  const Exp n = profile.vars;
  const Exp l = profile.l();
  return std::max<Exp>(n - 1, (n - 1) * (l * (profile.d - 1) - 1));
}

DefectReport stable_defect(const MonomialIdeal& ideal, const WorkBudget& budget,
                           PowerCache& cache) {
  require_primary(ideal, "stable defect");
  DefectReport report;
  report.ideal = ideal;
  report.d = asymptotic_degree(ideal);

  const int m_dec = monotone_from(ideal);
  const Exp bound = stabilization_bound(ideal);
  Exp cap = bound + 1;
  if (budget.max_power) cap = std::min<Exp>(cap, *budget.max_power);

  for (int m = 1;; ++m) {
    if (m > cap) {
      report.certificate = StableCertificate::uncertified;
      report.budget_exhausted = (cap < bound + 1);
      report.note = report.budget_exhausted ? "power budget exhausted before certification"
                                            : "stabilization bound exceeded the power cap";
      break;
    }
    // preflight the generator ceiling before multiplying out the next power
    if (m > 1) {
      const std::size_t prev = cache.power(m - 1).generator_count();
      if (prev > budget.max_generators ||
          prev * ideal.generator_count() > 64 * budget.max_generators) {
        report.certificate = StableCertificate::uncertified;
        report.budget_exhausted = true;
        report.note = "generator ceiling reached at power " + std::to_string(m);
        break;
      }
    }
    const MonomialIdeal& pm = cache.power(m);
    if (pm.generator_count() > budget.max_generators) {
      report.rows.push_back(make_row(pm, report.d, m));
      report.certificate = StableCertificate::uncertified;
      report.budget_exhausted = true;
      report.note = "generator ceiling reached at power " + std::to_string(m);
      break;
    }
    report.rows.push_back(make_row(pm, report.d, m));
    const DefectRow& row = report.rows.back();

    // past the monotone threshold the defect cannot increase; verify on the
    // computed window
    if (m > m_dec) {
      const Exp prev_e = report.rows[static_cast<std::size_t>(m - 2)].e;
      if (row.e > prev_e) fail(Errc::internal, "defect increased past the monotone threshold");
    }

    if (m >= m_dec && row.e == 0) {
      report.certificate = StableCertificate::reached_zero_after_monotone_threshold;
      report.certified_stable_from = m;
      report.e_infinity = 0;
      break;
    }
    if (static_cast<Exp>(m) == bound + 1) {
      report.certificate = StableCertificate::reached_theorem_bound;
      report.certified_stable_from = m;
      report.e_infinity = row.e;
      break;
    }
  }

  check_row_invariants(report);

  if (report.certificate != StableCertificate::uncertified) {
    // pull the stabilization point back over the observed constant tail
    int from = *report.certified_stable_from;
    const Exp e_inf = *report.e_infinity;
    while (from > 1 && report.rows[static_cast<std::size_t>(from - 2)].e == e_inf) {
      --from;
    }
    report.certified_stable_from = from;
    // certified tail must climb by exactly d per power
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
      if (report.rows[i].m <= from) continue;
      if (report.rows[i].reg - report.rows[i - 1].reg != report.d) {
        fail(Errc::internal, "certified tail does not grow by the asymptotic degree");
      }
    }
  }
  return report;
}

DefectReport stable_defect(const MonomialIdeal& ideal, const WorkBudget& budget) {
  PowerCache cache(ideal);
  return stable_defect(ideal, budget, cache);
}

}  // namespace regdef
