#include "theorems.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "rational.hpp"
#include "regularity.hpp"

namespace regdef {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::string summarize(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "n=" << ideal.vars() << ", " << ideal.generator_count() << " gens";
  if (!ideal.is_zero()) {
    out << ", deg " << ideal.min_generator_degree() << ".." << ideal.max_generator_degree();
  }
  return out.str();
}

void require_primary(const MonomialIdeal& ideal, const char* what) {
  if (!is_m_primary(ideal)) {
    fail(Errc::not_m_primary, std::string(what) + " requires an m-primary ideal");
  }
}

void require_subideal(const MonomialIdeal& ideal, const MonomialIdeal& subideal) {
  if (!ideal.contains_ideal(subideal)) fail(Errc::not_subideal, "J must be contained in I");
}

std::set<std::vector<Exp>> row_set(const std::vector<Monomial>& monomials) {
  std::set<std::vector<Exp>> out;
  for (const auto& u : monomials) {
    out.insert({u.exponents().begin(), u.exponents().end()});
  }
  return out;
}

nlohmann::json json_int_or_string(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt binomial(Exp top, Exp bottom) {
  if (bottom < 0 || top < bottom) return 0;
  BigInt result = 1;
  for (Exp i = 1; i <= bottom; ++i) {
    result *= top - bottom + i;
    result /= i;  // exact at every step
  }
  return result;
}

}  // namespace

void CheckReport::conclude(bool ok, nlohmann::json violation_payload) {
  conclusion_holds = ok;
  if (hypothesis_holds && !ok) {
    violation = violation_payload.is_null() ? nlohmann::json::object()
                                            : std::move(violation_payload);
  }
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["type"] = "check_report";
  j["name"] = name;
  j["inputs"] = inputs;
  j["hypothesis_holds"] = hypothesis_holds;
  j["conclusion_holds"] = conclusion_holds.has_value() ? nlohmann::json(*conclusion_holds)
                                                       : nlohmann::json(nullptr);
  j["quantities"] = quantities;
  j["passed"] = passed();
  if (violation) j["violation"] = *violation;
  return j;
}

// ---------------------------------------------------------------------------
// first difference: e_m - e_{m-1} <= c - d
// ---------------------------------------------------------------------------

CheckReport check_first_difference(const MonomialIdeal& ideal, const MonomialIdeal& subideal,
                                   int m, FirstDifferenceMode mode, PowerCache& cache) {
  require_primary(ideal, "first-difference check");
  require_primary(subideal, "first-difference check");
  require_subideal(ideal, subideal);
  if (m < 2) fail(Errc::invalid_argument, "first-difference check requires m >= 2");

  CheckReport report;
  report.name = "first-difference";
  report.inputs = "I: " + summarize(ideal) + "; J: " + summarize(subideal) +
                  "; m=" + std::to_string(m) +
                  (mode == FirstDifferenceMode::witness_hypothesis ? "; mode=witness"
                                                                   : "; mode=regularity");

  const Exp d = asymptotic_degree(ideal);
  const Exp c = subideal.max_generator_degree();
  const Exp reg_m = regularity(cache.power(m));
  const Exp reg_prev = regularity(cache.power(m - 1));
  const Exp e_m = reg_m - d * m;
  const Exp e_prev = reg_prev - d * (m - 1);

  report.quantities["d"] = d;
  report.quantities["c"] = c;
  report.quantities["reg_power_m"] = reg_m;
  report.quantities["reg_power_m_minus_1"] = reg_prev;
  report.quantities["e_m"] = e_m;
  report.quantities["e_m_minus_1"] = e_prev;
  report.quantities["difference"] = e_m - e_prev;
  report.quantities["bound"] = c - d;

  if (mode == FirstDifferenceMode::witness_hypothesis) {
    const WitnessSet w = witness_set(cache.power(m));
    std::size_t inside = 0;
    for (const Monomial& u : w.monomials) {
      if (subideal.contains(u)) ++inside;
    }
    report.quantities["witness_count"] = w.monomials.size();
    report.quantities["witnesses_in_subideal"] = inside;
    report.hypothesis_holds = inside > 0;
  } else {
    const Exp reg_j = regularity(subideal);
    report.quantities["reg_subideal"] = reg_j;
    report.hypothesis_holds = reg_m > reg_j;
  }

  if (report.hypothesis_holds) {
    report.conclude(e_m - e_prev <= c - d,
                    {{"m", m}, {"difference", e_m - e_prev}, {"bound", c - d}});
  }
  return report;
}

CheckReport check_first_difference(const MonomialIdeal& ideal, const MonomialIdeal& subideal,
                                   int m, FirstDifferenceMode mode) {
  PowerCache cache(ideal);
  return check_first_difference(ideal, subideal, m, mode, cache);
}

// ---------------------------------------------------------------------------
// difference bound past the rational threshold, optionally refined
// ---------------------------------------------------------------------------

CheckReport check_difference_bound(const MonomialIdeal& ideal, const MonomialIdeal& subideal,
                                   int m, bool refined, PowerCache& cache) {
  require_primary(ideal, "difference-bound check");
  require_primary(subideal, "difference-bound check");
  require_subideal(ideal, subideal);
  if (m < 2) fail(Errc::invalid_argument, "difference-bound check requires m >= 2");

  CheckReport report;
  report.name = "difference-bound";
  report.inputs = "I: " + summarize(ideal) + "; J: " + summarize(subideal) +
                  "; m=" + std::to_string(m) + (refined ? "; refined" : "");

  const auto stats = generator_degree_stats(ideal, subideal);
  const Exp d = stats.d;
  const Exp c = *stats.c;
  const Exp c_prime = *stats.c_prime;
  const Exp reg_j = regularity(subideal);

  const Rat t1(reg_j, d);
  Rat t2(0, 1);
  if (stats.d_prime_infinite) {
    // limits: reg J / d' -> 0 and c'/d' -> 0, so the second threshold is 1
    t2 = Rat(1, 1);
  } else {
    const Exp d_prime = *stats.d_prime;
    const Rat first(reg_j, d_prime);
    const Rat one(1, 1);
    const Rat ratio(c_prime, d_prime);
    const Rat second = ratio < one ? Rat(d_prime - c_prime, d_prime) : Rat(0, 1);
    t2 = first + second;
  }
  const Rat threshold = Rat::min(t1, t2);

  report.quantities["d"] = d;
  report.quantities["c"] = c;
  report.quantities["c_prime"] = c_prime;
  report.quantities["d_prime"] =
      stats.d_prime_infinite ? nlohmann::json("inf") : nlohmann::json(*stats.d_prime);
  report.quantities["reg_subideal"] = reg_j;
  report.quantities["threshold_primary"] = t1.str();
  report.quantities["threshold_secondary"] = t2.str();
  report.quantities["threshold"] = threshold.str();

  const bool threshold_holds = threshold.exceeded_by(m);
  report.quantities["threshold_hypothesis"] = threshold_holds;

  bool refined_holds = false;
  if (refined) {
    if (stats.d_prime_infinite) {
      report.quantities["refined_status"] = "inapplicable";
    } else {
      // the complement ideal I' generated by the minimal generators of I
      // outside J
      std::vector<Monomial> outside;
      for (std::size_t i = 0; i < ideal.generator_count(); ++i) {
        if (!subideal.contains(ideal.generator_span(i))) {
          outside.push_back(ideal.generator(i));
        }
      }
      const MonomialIdeal complement = minimalize(ideal.vars(), outside);
      PowerCache comp_cache(complement);
      const MonomialIdeal comp_m = comp_cache.power(m);
      const MonomialIdeal mixed = product(comp_cache.power(m - 1), subideal);

      // Membership in the vector-space sum is decided monomial by monomial,
      // through the pointwise socle test at the witness degree; neither set
      // is enumerated. This keeps the hypothesis conservative: it fires only
      // when a witness of J escapes both socles outright.
      const WitnessSet wj = witness_set(subideal);
      std::size_t escaped = 0;
      for (const Monomial& u : wj.monomials) {
        const bool in_power_socle = is_socle_member(comp_m, u);
        const bool in_mixed_socle = is_socle_member(mixed, u);
        if (!in_power_socle && !in_mixed_socle) ++escaped;
      }
      refined_holds = escaped > 0;
      report.quantities["refined_status"] = refined_holds ? "escaped" : "contained";
      report.quantities["subideal_witnesses"] = wj.monomials.size();
      report.quantities["subideal_witnesses_escaping"] = escaped;
    }
    report.quantities["refined_hypothesis"] = refined_holds;
  }

  report.hypothesis_holds = threshold_holds || refined_holds;

  if (report.hypothesis_holds) {
    const Exp reg_m = regularity(cache.power(m));
    const Exp reg_prev = regularity(cache.power(m - 1));
    const Exp diff = (reg_m - reg_prev) - d;
    report.quantities["e_difference"] = diff;
    report.conclude(diff <= c - d, {{"m", m}, {"difference", diff}, {"bound", c - d}});
  }
  return report;
}

CheckReport check_difference_bound(const MonomialIdeal& ideal, const MonomialIdeal& subideal,
                                   int m, bool refined) {
  PowerCache cache(ideal);
  return check_difference_bound(ideal, subideal, m, refined, cache);
}

// ---------------------------------------------------------------------------
// defect monotonicity
// ---------------------------------------------------------------------------

CheckReport check_defect_monotone(const MonomialIdeal& ideal, int m_max, PowerCache& cache) {
  require_primary(ideal, "defect-monotone check");
  if (m_max < 2) fail(Errc::invalid_argument, "defect-monotone check requires m_max >= 2");

  CheckReport report;
  report.name = "defect-monotone";
  report.inputs = "I: " + summarize(ideal) + "; m_max=" + std::to_string(m_max);

  const auto stats = generator_degree_stats(ideal);
  const Rat tau = monotone_threshold(ideal);
  const int n = ideal.vars();

  report.quantities["d"] = stats.d;
  report.quantities["b"] = stats.b;
  report.quantities["b_prime"] =
      stats.b_prime ? nlohmann::json(*stats.b_prime) : nlohmann::json("inf");
  report.quantities["threshold"] = tau.str();
  report.quantities["n"] = n;

  std::vector<Exp> e;
  for (int m = 1; m <= m_max; ++m) {
    e.push_back(regularity(cache.power(m)) - stats.d * m);
  }

  report.hypothesis_holds = true;
  nlohmann::json failures = nlohmann::json::array();
  for (int m = 1; m < m_max; ++m) {
    const Exp cur = e[static_cast<std::size_t>(m - 1)];
    const Exp next = e[static_cast<std::size_t>(m)];
    if (next > cur + stats.b) {
      failures.push_back({{"m", m}, {"rule", "bounded-growth"}, {"e_m", cur}, {"e_next", next}});
    }
    const bool monotone_region = tau.exceeded_by(m) || m >= n;
    if (monotone_region && next > cur) {
      failures.push_back({{"m", m}, {"rule", "nonincreasing"}, {"e_m", cur}, {"e_next", next}});
    }
  }
  report.quantities["rows_checked"] = m_max;
  report.conclude(failures.empty(), {{"failures", failures}});
  return report;
}

CheckReport check_defect_monotone(const MonomialIdeal& ideal, int m_max) {
  PowerCache cache(ideal);
  return check_defect_monotone(ideal, m_max, cache);
}

// ---------------------------------------------------------------------------
// strict increase of regularity in powers
// ---------------------------------------------------------------------------

CheckReport check_strict_increase(const MonomialIdeal& ideal, int m_max, PowerCache& cache) {
  require_primary(ideal, "strict-increase check");
  if (m_max < 2) fail(Errc::invalid_argument, "strict-increase check requires m_max >= 2");

  CheckReport report;
  report.name = "strict-increase";
  report.inputs = "I: " + summarize(ideal) + "; m_max=" + std::to_string(m_max);
  report.hypothesis_holds = true;

  nlohmann::json regs = nlohmann::json::array();
  Exp prev = 0;
  bool ok = true;
  nlohmann::json viol;
  for (int m = 1; m <= m_max; ++m) {
    const Exp r = regularity(cache.power(m));
    regs.push_back(r);
    if (m > 1 && r <= prev) {
      ok = false;
      viol = {{"m", m}, {"reg", r}, {"previous", prev}};
      break;
    }
    prev = r;
  }
  report.quantities["regularities"] = regs;
  report.conclude(ok, viol);
  return report;
}

CheckReport check_strict_increase(const MonomialIdeal& ideal, int m_max) {
  PowerCache cache(ideal);
  return check_strict_increase(ideal, m_max, cache);
}

CheckReport check_defect_nonnegative(const MonomialIdeal& ideal, int m_max, PowerCache& cache) {
  require_primary(ideal, "defect-nonnegative check");
  if (m_max < 1) fail(Errc::invalid_argument, "defect-nonnegative check requires m_max >= 1");

  CheckReport report;
  report.name = "defect-nonnegative";
  report.inputs = "I: " + summarize(ideal) + "; m_max=" + std::to_string(m_max);
  report.hypothesis_holds = true;

  const Exp d = asymptotic_degree(ideal);
  nlohmann::json defects = nlohmann::json::array();
  bool ok = true;
  nlohmann::json viol;
  for (int m = 1; m <= m_max; ++m) {
    const Exp e = regularity(cache.power(m)) - d * m;
    defects.push_back(e);
    if (e < 0 && ok) {
      ok = false;
      viol = {{"m", m}, {"e", e}};
    }
  }
  report.quantities["defects"] = defects;
  report.conclude(ok, viol);
  return report;
}

CheckReport check_defect_nonnegative(const MonomialIdeal& ideal, int m_max) {
  PowerCache cache(ideal);
  return check_defect_nonnegative(ideal, m_max, cache);
}

// ---------------------------------------------------------------------------
// socle descent: s(I^m) inside I^{m-1}, socles of distinct powers disjoint
// ---------------------------------------------------------------------------

CheckReport check_socle_descent(const MonomialIdeal& ideal, int m, PowerCache& cache) {
  require_primary(ideal, "socle-descent check");
  if (m < 2) fail(Errc::invalid_argument, "socle-descent check requires m >= 2");

  CheckReport report;
  report.name = "socle-descent";
  report.inputs = "I: " + summarize(ideal) + "; m=" + std::to_string(m);
  report.hypothesis_holds = true;

  const auto socle_m = socle_members(cache.power(m));
  const MonomialIdeal& prev = cache.power(m - 1);
  std::size_t outside = 0;
  nlohmann::json first_out;
  for (const Monomial& u : socle_m) {
    if (!prev.contains(u)) {
      if (outside == 0) first_out = u.str();
      ++outside;
    }
  }

  const auto socle_prev = row_set(socle_members(prev));
  std::size_t shared = 0;
  for (const Monomial& u : socle_m) {
    if (socle_prev.count({u.exponents().begin(), u.exponents().end()}) > 0) ++shared;
  }

  report.quantities["socle_size"] = socle_m.size();
  report.quantities["outside_previous_power"] = outside;
  report.quantities["shared_with_previous_socle"] = shared;
  report.conclude(outside == 0 && shared == 0,
                  {{"outside", outside}, {"shared", shared}, {"first_outside", first_out}});
  return report;
}

CheckReport check_socle_descent(const MonomialIdeal& ideal, int m) {
  PowerCache cache(ideal);
  return check_socle_descent(ideal, m, cache);
}

// ---------------------------------------------------------------------------
// witness comparison: escaped witness forces strictly smaller regularity
// ---------------------------------------------------------------------------

CheckReport check_witness_comparison(const MonomialIdeal& ideal, const MonomialIdeal& other) {
  require_primary(ideal, "witness-comparison check");
  require_primary(other, "witness-comparison check");
  if (ideal.vars() != other.vars()) {
    fail(Errc::dimension_mismatch, "ideals live in different rings");
  }

  CheckReport report;
  report.name = "witness-comparison";
  report.inputs = "I: " + summarize(ideal) + "; J: " + summarize(other);

  const WitnessSet wi = witness_set(ideal);
  const WitnessSet wj = witness_set(other);
  const auto wj_rows = row_set(wj.monomials);

  std::optional<Monomial> escaped;
  for (const Monomial& f : wi.monomials) {
    if (other.contains(f)) continue;
    if (wj_rows.count({f.exponents().begin(), f.exponents().end()}) > 0) continue;
    escaped = f;
    break;
  }

  report.quantities["witness_degree_I"] = wi.degree;
  report.quantities["witness_degree_J"] = wj.degree;
  report.quantities["reg_I"] = wi.degree + 1;
  report.quantities["reg_J"] = wj.degree + 1;
  report.hypothesis_holds = escaped.has_value();
  if (escaped) report.quantities["escaped_witness"] = escaped->str();

  if (report.hypothesis_holds) {
    report.conclude(wi.degree + 1 < wj.degree + 1,
                    {{"witness", escaped->str()}, {"reg_I", wi.degree + 1}, {"reg_J", wj.degree + 1}});
  }
  return report;
}

// ---------------------------------------------------------------------------
// reduction bounds for witnesses
// ---------------------------------------------------------------------------

CheckReport check_reduction_bounds(const MonomialIdeal& ideal, int m, bool strict,
                                   PowerCache& cache) {
  require_primary(ideal, "reduction-bounds check");
  if (m < 1) fail(Errc::invalid_argument, "reduction-bounds check requires m >= 1");

  CheckReport report;
  report.name = "reduction-bounds";
  report.inputs = "I: " + summarize(ideal) + "; m=" + std::to_string(m) +
                  (strict ? "; strict" : "");
  report.hypothesis_holds = true;

  const auto profile = pure_power_profile(ideal);
  const Exp n = profile.vars;
  const Exp d = profile.d;
  const Exp l = profile.l();
  const Exp k = profile.k();
  Exp z_sum = 0;
  for (const auto& [idx, dz] : profile.z_vars) {
    (void)idx;
    z_sum += dz - 1;
  }
  const Exp upper = l * (d - 1) + z_sum;  // bound for deg(abar)

  const WitnessSet w = witness_set(cache.power(m));

  bool ok_range = true, ok_lower = true, ok_upper = true, ok_upper_strict = true, ok_z = true;
  std::size_t strict_violations = 0;
  nlohmann::json first_violation;
  auto record = [&](const Monomial& a, const char* which, const ReductionData& r) {
    if (!first_violation.is_null()) return;
    first_violation = {{"witness", a.str()},
                       {"bound", which},
                       {"mbar", r.mbar},
                       {"deg_abar", r.abar.degree()},
                       {"ord_z", r.ord_z}};
  };

  for (const Monomial& a : w.monomials) {
    const ReductionData r = reduce_monomial(a, profile, m);
    const Exp deg_abar = r.abar.degree();
    if (!(1 <= r.mbar && r.mbar <= n - 1)) {
      ok_range = false;
      record(a, "residual-range", r);
    }
    if (!(r.mbar * d - 1 <= deg_abar)) {
      ok_lower = false;
      record(a, "degree-lower", r);
    }
    if (!(deg_abar <= upper)) {
      ok_upper = false;
      record(a, "degree-upper", r);
    }
    if (!(deg_abar < upper)) {
      ok_upper_strict = false;
      ++strict_violations;
      if (strict) record(a, "degree-upper-strict", r);
    }
    if (!(r.ord_z <= deg_abar - r.mbar * d + 1)) {
      ok_z = false;
      record(a, "z-order", r);
    }
  }

  report.quantities["witness_count"] = w.monomials.size();
  report.quantities["upper_bound"] = upper;
  report.quantities["chain_bound"] = n * (d - 1) - k;
  report.quantities["residual_range_ok"] = ok_range;
  report.quantities["degree_lower_ok"] = ok_lower;
  report.quantities["degree_upper_ok"] = ok_upper;
  report.quantities["degree_upper_strict_ok"] = ok_upper_strict;
  report.quantities["strict_upper_violations"] = strict_violations;
  report.quantities["z_order_ok"] = ok_z;

  bool ok = ok_range && ok_lower && ok_upper && ok_z;
  if (strict) ok = ok && ok_upper_strict;
  report.conclude(ok, first_violation);
  return report;
}

CheckReport check_reduction_bounds(const MonomialIdeal& ideal, int m, bool strict) {
  PowerCache cache(ideal);
  return check_reduction_bounds(ideal, m, strict, cache);
}

// ---------------------------------------------------------------------------
// increase threshold
// ---------------------------------------------------------------------------

CheckReport check_increase_threshold(const MonomialIdeal& ideal, int m, PowerCache& cache) {
  require_primary(ideal, "increase-threshold check");
  if (m < 1) fail(Errc::invalid_argument, "increase-threshold check requires m >= 1");

  CheckReport report;
  report.name = "increase-threshold";
  report.inputs = "I: " + summarize(ideal) + "; m=" + std::to_string(m);

  const auto profile = pure_power_profile(ideal);
  const Exp n = profile.vars;
  const Exp d = profile.d;
  const Exp l = profile.l();
  const Exp mu_m = mu(ideal, m, cache);
  const Exp threshold = (n - 1) * (d - 2) + (mu_m - 1) * (l - 1) * (d - 1);

  report.quantities["d"] = d;
  report.quantities["l"] = l;
  report.quantities["mu"] = mu_m;
  report.quantities["threshold"] = threshold;
  report.hypothesis_holds = m > threshold;

  // diagnostics from the two supporting lemmas, evaluated on every witness
  const WitnessSet w = witness_set(cache.power(m));
  std::size_t large_order_witnesses = 0;
  std::size_t shift_escapes = 0;
  for (const Monomial& a : w.monomials) {
    bool large = false;
    for (int v = 0; v < profile.vars && !large; ++v) {
      if (profile.pure_of(v) != d) continue;
      const auto alt = pure_power_profile(ideal, v);
      const ReductionData r = reduce_monomial(a, alt, m);
      const Exp ord_v = r.remainders[static_cast<std::size_t>(v)];
      large = ord_v > r.mbar * d - (r.quotients[static_cast<std::size_t>(v)] + r.mbar + 1);
    }
    if (large) ++large_order_witnesses;

    const ReductionData r = reduce_monomial(a, profile, m);
    bool escapes = true;
    for (Exp q = 0; q <= 2 && escapes; ++q) {
      std::vector<Exp> shifted(r.a_x.exponents().begin(), r.a_x.exponents().end());
      shifted[static_cast<std::size_t>(profile.x_var)] += d * q;
      const int target = static_cast<int>(r.m_x + r.mbar + q);
      escapes = !cache.power(target).contains(Monomial(std::move(shifted)));
    }
    if (escapes) ++shift_escapes;
  }
  report.quantities["witness_count"] = w.monomials.size();
  report.quantities["large_order_witnesses"] = large_order_witnesses;
  report.quantities["shift_escaping_witnesses"] = shift_escapes;

  if (report.hypothesis_holds) {
    const Exp e_m = regularity(cache.power(m)) - d * m;
    const Exp e_next = regularity(cache.power(m + 1)) - d * (m + 1);
    report.quantities["e_m"] = e_m;
    report.quantities["e_next"] = e_next;
    report.conclude(e_next >= e_m, {{"m", m}, {"e_m", e_m}, {"e_next", e_next}});
  }
  return report;
}

CheckReport check_increase_threshold(const MonomialIdeal& ideal, int m) {
  PowerCache cache(ideal);
  return check_increase_threshold(ideal, m, cache);
}

// ---------------------------------------------------------------------------
// stabilization bound
// ---------------------------------------------------------------------------

CheckReport check_stabilization_bound(const MonomialIdeal& ideal, const WorkBudget& budget,
                                      PowerCache& cache) {
  require_primary(ideal, "stabilization-bound check");

  CheckReport report;
  report.name = "stabilization-bound";
  report.inputs = "I: " + summarize(ideal);

  const Exp bound = stabilization_bound(ideal);
  report.quantities["bound"] = bound;

  Exp horizon = bound + 3;
  if (budget.max_power) horizon = std::min<Exp>(horizon, *budget.max_power);
  report.quantities["horizon"] = horizon;
  if (horizon < bound + 2) {
    report.quantities["status"] = "skipped-budget";
    report.hypothesis_holds = false;
    return report;
  }

  const Exp d = asymptotic_degree(ideal);
  std::vector<Exp> e;
  for (int m = 1; m <= horizon; ++m) {
    if (cache.power(m).generator_count() > budget.max_generators) {
      report.quantities["status"] = "skipped-budget";
      report.hypothesis_holds = false;
      return report;
    }
    e.push_back(regularity(cache.power(m)) - d * m);
  }

  report.hypothesis_holds = true;
  report.quantities["status"] = "evaluated";
  nlohmann::json viol;
  bool ok = true;
  for (Exp m = bound + 1; m < horizon; ++m) {
    if (e[static_cast<std::size_t>(m)] != e[static_cast<std::size_t>(m - 1)]) {
      ok = false;
      viol = {{"m", m},
              {"e_m", e[static_cast<std::size_t>(m - 1)]},
              {"e_next", e[static_cast<std::size_t>(m)]}};
      break;
    }
  }
  report.conclude(ok, viol);
  return report;
}

CheckReport check_stabilization_bound(const MonomialIdeal& ideal, const WorkBudget& budget) {
  PowerCache cache(ideal);
  return check_stabilization_bound(ideal, budget, cache);
}

// ---------------------------------------------------------------------------
// stable defect zero characterization
// ---------------------------------------------------------------------------

CheckReport check_stable_defect_zero(const MonomialIdeal& ideal, const WorkBudget& budget,
                                     PowerCache& cache) {
  require_primary(ideal, "stable-defect-zero check");

  CheckReport report;
  report.name = "stable-defect-zero";
  report.inputs = "I: " + summarize(ideal);

  const DefectReport stable = stable_defect(ideal, budget, cache);
  report.quantities["certificate"] = to_string(stable.certificate);
  if (stable.certificate == StableCertificate::uncertified) {
    report.quantities["status"] = "inconclusive";
    report.hypothesis_holds = false;
    return report;
  }

  const Exp d = stable.d;
  bool predicate = true;
  nlohmann::json failing;
  const auto pures = pure_power_exponents(ideal);
  for (int v = 0; v < ideal.vars() && predicate; ++v) {
    if (*pures[static_cast<std::size_t>(v)] != d) continue;
    for (int j = 0; j < ideal.vars(); ++j) {
      std::vector<Exp> e(static_cast<std::size_t>(ideal.vars()), 0);
      e[static_cast<std::size_t>(v)] = d - 1;
      e[static_cast<std::size_t>(j)] += 1;
      if (!ideal.contains(Monomial(std::move(e)))) {
        predicate = false;
        failing = {{"variable", v + 1}, {"times", j + 1}};
        break;
      }
    }
  }

  report.hypothesis_holds = true;
  report.quantities["status"] = "evaluated";
  report.quantities["predicate"] = predicate;
  report.quantities["e_infinity"] = *stable.e_infinity;
  report.quantities["stable_from"] = *stable.certified_stable_from;
  if (!predicate) report.quantities["failing_product"] = failing;

  const bool zero = *stable.e_infinity == 0;
  report.conclude(predicate == zero,
                  {{"predicate", predicate}, {"e_infinity", *stable.e_infinity}});
  return report;
}

CheckReport check_stable_defect_zero(const MonomialIdeal& ideal, const WorkBudget& budget) {
  PowerCache cache(ideal);
  return check_stable_defect_zero(ideal, budget, cache);
}

// ---------------------------------------------------------------------------
// binomial inequality
// ---------------------------------------------------------------------------

CheckReport check_binomial_inequality(Exp n, Exp d) {
  if (n < 2 || d < 2) fail(Errc::invalid_argument, "binomial inequality requires n, d >= 2");

  CheckReport report;
  report.name = "binomial-inequality";
  report.inputs = "n=" + std::to_string(n) + ", d=" + std::to_string(d);
  report.hypothesis_holds = true;

  const BigInt lhs = binomial(n * d, n - 1);
  const BigInt rhs =
      BigInt(n) * (binomial((n - 1) * d, n - 1) - binomial(d + n - 2, n - 1));
  const bool holds = lhs <= rhs;
  const bool expected = n >= 4;

  report.quantities["lhs"] = json_int_or_string(lhs);
  report.quantities["rhs"] = json_int_or_string(rhs);
  report.quantities["holds"] = holds;
  report.quantities["expected"] = expected;

  report.conclude(holds == expected,
                  {{"n", n}, {"d", d}, {"holds", holds}, {"expected", expected}});
  return report;
}

}  // namespace regdef
