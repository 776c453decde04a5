#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "defect.hpp"
#include "monomial.hpp"

namespace regdef {

/// Outcome of running one result checker on concrete input. When the
/// hypothesis fails the conclusion is never evaluated (vacuous truth), and a
/// violation payload is attached exactly when the hypothesis holds but the
/// conclusion fails.
struct CheckReport {
  std::string name;
  std::string inputs;
  bool hypothesis_holds = false;
  std::optional<bool> conclusion_holds;
  nlohmann::json quantities = nlohmann::json::object();
  std::optional<nlohmann::json> violation;

  bool passed() const {
    return !(hypothesis_holds && conclusion_holds.has_value() && !*conclusion_holds);
  }

  void conclude(bool ok, nlohmann::json violation_payload = nullptr);
  nlohmann::json to_json() const;
};

enum class FirstDifferenceMode { witness_hypothesis, regularity_hypothesis };

/// e_m - e_{m-1} <= c - d whenever a witness of I^m lies in J (witness mode)
/// or reg I^m exceeds reg J (regularity mode); J inside I, both m-primary.
CheckReport check_first_difference(const MonomialIdeal& ideal, const MonomialIdeal& subideal,
                                   int m, FirstDifferenceMode mode, PowerCache& cache);
CheckReport check_first_difference(const MonomialIdeal& ideal, const MonomialIdeal& subideal,
                                   int m, FirstDifferenceMode mode);

/// Same conclusion under the exact rational threshold
/// m > min(reg J / d, reg J / d' + max(1 - c'/d', 0)); with refined set, the
/// alternative witness-containment hypothesis is evaluated as well.
CheckReport check_difference_bound(const MonomialIdeal& ideal, const MonomialIdeal& subideal,
                                   int m, bool refined, PowerCache& cache);
CheckReport check_difference_bound(const MonomialIdeal& ideal, const MonomialIdeal& subideal,
                                   int m, bool refined);

/// (1) e_{m+1} <= e_m + b for all m; (2) e_{m+1} <= e_m past the monotone
/// threshold, and in particular for all m >= n.
CheckReport check_defect_monotone(const MonomialIdeal& ideal, int m_max, PowerCache& cache);
CheckReport check_defect_monotone(const MonomialIdeal& ideal, int m_max);

/// reg I^{m+1} > reg I^m across the computed range.
CheckReport check_strict_increase(const MonomialIdeal& ideal, int m_max, PowerCache& cache);
CheckReport check_strict_increase(const MonomialIdeal& ideal, int m_max);

/// e_m >= 0 across the computed range.
CheckReport check_defect_nonnegative(const MonomialIdeal& ideal, int m_max, PowerCache& cache);
CheckReport check_defect_nonnegative(const MonomialIdeal& ideal, int m_max);

/// Socle members of I^m lie in I^{m-1}, and socles of distinct powers are
/// disjoint.
CheckReport check_socle_descent(const MonomialIdeal& ideal, int m, PowerCache& cache);
CheckReport check_socle_descent(const MonomialIdeal& ideal, int m);

/// A witness of I outside J and outside w(J) forces reg I < reg J.
CheckReport check_witness_comparison(const MonomialIdeal& ideal, const MonomialIdeal& other);

/// Bounds on the reduction of every witness of I^m: the residual power
/// count, the degree of the reduction, and the z-order. The strict variant
/// of the upper degree bound is reported separately and participates in the
/// conclusion only when strict is set.
CheckReport check_reduction_bounds(const MonomialIdeal& ideal, int m, bool strict,
                                   PowerCache& cache);
CheckReport check_reduction_bounds(const MonomialIdeal& ideal, int m, bool strict);

/// e_{m+1} >= e_m once m > (n-1)(d-2) + (mu_m - 1)(l-1)(d-1).
CheckReport check_increase_threshold(const MonomialIdeal& ideal, int m, PowerCache& cache);
CheckReport check_increase_threshold(const MonomialIdeal& ideal, int m);

/// e is constant beyond max(n-1, (n-1)(l(d-1)-1)); verified on a window
/// beyond the bound, skipped with explicit status when out of budget.
CheckReport check_stabilization_bound(const MonomialIdeal& ideal, const WorkBudget& budget,
                                      PowerCache& cache);
CheckReport check_stabilization_bound(const MonomialIdeal& ideal,
                                      const WorkBudget& budget = {});

/// e_infinity = 0 iff x^{d-1} m lies in I for every degree-d pure generator
/// x^d; inconclusive when stabilization cannot be certified in budget.
CheckReport check_stable_defect_zero(const MonomialIdeal& ideal, const WorkBudget& budget,
                                     PowerCache& cache);
CheckReport check_stable_defect_zero(const MonomialIdeal& ideal,
                                     const WorkBudget& budget = {});

/// Exact integer evaluation of C(nd, n-1) <= n [ C((n-1)d, n-1) - C(d+n-2, n-1) ],
/// checked against the expected truth pattern (holds exactly when n >= 4).
CheckReport check_binomial_inequality(Exp n, Exp d);

}  // namespace regdef
