#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace regdef {

/// A built-in example family instance: the ideal together with its predicted
/// defect behavior, used by the golden tests and the `example` subcommand.
///
/// predicted holds the expected prefix e_1, e_2, ...; the sequence is
/// expected to stay at predicted_tail afterwards. Families whose source
/// admits two readings carry the second one in predicted_alt; the computed
/// sequence arbitrates.
struct ExampleSpec {
  std::string name;
  nlohmann::json parameters;
  std::string description;
  MonomialIdeal ideal;
  std::optional<MonomialIdeal> companion;  // the base ideal J of fat-socle

  std::vector<Exp> predicted;
  std::optional<Exp> predicted_tail;
  std::vector<Exp> predicted_alt;
  std::optional<Exp> predicted_alt_tail;
  bool stable_defect_must_vanish = false;
  int suggested_m_max = 4;
};

/// Three variables: J spanned by eighth powers and the adjacent mixed
/// monomials, I = J + m^10. Defect starts (2, 3) and stays at 3.
ExampleSpec example_fat_socle();

/// I = m^{(d,...,d)} + m^{d+b}: defect climbs by b up to m0 = floor of
/// (n(d-1)+1)/(d+b), then stays at m0 b + delta.
ExampleSpec example_increasing(int n, Exp d, Exp b);

/// I = x^{d-1} m + (z_1^{d-1}, ..., z_k^{d-1}): unit decrements down to the
/// stable value. Two readings of the published sequence are provided; with
/// z_power_d the z block is raised to degree d instead, which makes the
/// sequence constant from the start.
ExampleSpec example_slow_decreasing(int n, Exp d, bool z_power_d = false);

/// I = sum_i x_i^{d-1} m + m^{d+b}: increases first, then decays to a stable
/// defect of zero. Explicit sequences are known for a few parameter triples.
ExampleSpec example_mixed(int n, Exp d, Exp b);

/// Lookup by CLI name: fat-socle, increasing, slow-decreasing, mixed.
ExampleSpec example_by_name(const std::string& name, const nlohmann::json& params);

}  // namespace regdef
