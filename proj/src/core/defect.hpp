#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"
#include "regularity.hpp"

namespace regdef {

/// Normal form of an m-primary monomial ideal: the variables carrying the
/// maximal pure power d (one distinguished as x, the others the y block) and
/// the variables with smaller pure powers d_i (the z block, d_i descending).
struct PurePowerProfile {
  int vars = 0;
  Exp d = 0;                                // asymptotic generating degree
  int x_var = 0;                            // distinguished degree-d variable
  std::vector<int> y_vars;                  // remaining degree-d variables
  std::vector<std::pair<int, Exp>> z_vars;  // (index, d_i), d_i descending

  int l() const { return 1 + static_cast<int>(y_vars.size()); }
  int k() const { return static_cast<int>(z_vars.size()); }

  /// Pure-power exponent of a variable under this profile.
  Exp pure_of(int var) const;

  /// The subideals (y_1^d, ..., y_{l-1}^d) and (z_1^{d_1}, ..., z_k^{d_k});
  /// zero ideals when the block is empty.
  MonomialIdeal y_block() const;
  MonomialIdeal z_block() const;
};

/// Greedy factorization of a monomial by the pure-power lattice: for every
/// variable the largest quotient and the remainder of its exponent by the
/// variable's pure power.
struct ReductionData {
  std::vector<Exp> quotients;   // per variable
  std::vector<Exp> remainders;  // per variable
  Monomial abar;                // the remainders as a monomial
  Monomial a_x;                 // x^{quotient_x * d} * abar
  Exp m_x = 0;                  // quotient of the distinguished variable
  Exp ord_y = 0;                // sum of quotients over the y block
  Exp ord_z = 0;                // sum of quotients over the z block
  Exp mbar = 0;                 // m - m_x - ord_y - ord_z
};

enum class StableCertificate {
  reached_zero_after_monotone_threshold,  // past the monotone threshold with e_m = 0
  reached_theorem_bound,                  // computed through the stabilization bound
  uncertified,
};

std::string to_string(StableCertificate c);

struct DefectRow {
  int m = 0;
  Exp reg = 0;
  Exp e = 0;
};

/// The sequence (m, reg I^m, e_m) with e_m = reg I^m - d m, plus the
/// certification state produced by stable_defect().
struct DefectReport {
  MonomialIdeal ideal;
  Exp d = 0;
  std::vector<DefectRow> rows;
  StableCertificate certificate = StableCertificate::uncertified;
  std::optional<int> certified_stable_from;
  std::optional<Exp> e_infinity;
  bool budget_exhausted = false;
  std::string note;
};

/// Degree data of the generators: d + b is the maximal generator degree and
/// d + b' the minimal generator degree strictly above d (b' absent when the
/// ideal is generated in degrees <= d). With a subideal J: c, c' are the
/// extreme generator degrees of J and d' the minimal degree of a minimal
/// generator of I outside J (absent when all of them lie in J).
struct GeneratorDegreeStats {
  Exp d = 0;
  Exp b = 0;
  std::optional<Exp> b_prime;
  std::optional<Exp> c;
  std::optional<Exp> c_prime;
  std::optional<Exp> d_prime;
  bool has_subideal = false;
  bool d_prime_infinite = false;
};

struct WorkBudget {
  /// Highest power to compute; defaults to the stabilization bound + 1.
  std::optional<int> max_power;
  /// Abort when a power would exceed this many minimal generators.
  std::size_t max_generators = 2'000'000;
};

Exp asymptotic_degree(const MonomialIdeal& ideal);

PurePowerProfile pure_power_profile(const MonomialIdeal& ideal,
                                    std::optional<int> x_choice = std::nullopt);

ReductionData reduce_monomial(const Monomial& a, const PurePowerProfile& profile, Exp m);

GeneratorDegreeStats generator_degree_stats(const MonomialIdeal& ideal);
GeneratorDegreeStats generator_degree_stats(const MonomialIdeal& ideal,
                                            const MonomialIdeal& subideal);

/// min over the witnesses of I^m of the residual power count mbar.
Exp mu(const MonomialIdeal& ideal, int m, PowerCache& cache);
Exp mu(const MonomialIdeal& ideal, int m);

/// Rows for m = 1..m_max; no certification.
DefectReport defect_sequence(const MonomialIdeal& ideal, int m_max);
DefectReport defect_sequence(const MonomialIdeal& ideal, int m_max, PowerCache& cache);

/// Monotone threshold: e is nonincreasing for every m with m > tau or
/// m >= vars; tau = reg(I_{<=d}) / (d + b'), zero when b' is absent.
Rat monotone_threshold(const MonomialIdeal& ideal);

/// First power from which nonincreasing behavior is guaranteed.
int monotone_from(const MonomialIdeal& ideal);

/// Stabilization bound: e is constant for all m strictly above
/// max(n-1, (n-1)(l(d-1) - 1)).
Exp stabilization_bound(const MonomialIdeal& ideal);

/// Extends the defect sequence until a certificate fires or the budget runs
/// out. Budget exhaustion is reported in the result, never thrown.
DefectReport stable_defect(const MonomialIdeal& ideal, const WorkBudget& budget = {});
DefectReport stable_defect(const MonomialIdeal& ideal, const WorkBudget& budget,
                           PowerCache& cache);

}  // namespace regdef
