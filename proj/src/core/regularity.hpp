#pragma once

#include <vector>

#include "monomial.hpp"

namespace regdef {

/// Monomial basis of the socle of S/I: the standard monomials u with
/// x_i * u in I for every variable.
struct SocleBasis {
  MonomialIdeal ideal;
  std::vector<Monomial> monomials;  // canonical order
  Exp top_degree = 0;
};

/// The maximal-degree socle monomials; their common degree is reg(I) - 1.
struct WitnessSet {
  MonomialIdeal ideal;
  std::vector<Monomial> monomials;  // canonical order
  Exp degree = 0;
};

/// Two independent computation strategies, cross-validated in the tests:
///  - box: enumerate the full box bounded by the pure-power generators and
///    test every cell (the oracle).
///  - corner: walk the candidate grid u_i + 1 in {g_i : g_i > 0}, organised
///    as a recursion over coordinate slices, never touching the full box.
enum class Strategy { box, corner };

/// All monomials outside I. Enumerates the pure-power box, which provably
/// contains every standard monomial. Requires an m-primary ideal.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal);

SocleBasis socle_monomials(const MonomialIdeal& ideal, Strategy strategy = Strategy::corner);

WitnessSet witness_set(const MonomialIdeal& ideal, Strategy strategy = Strategy::corner);

/// reg I = 1 + max degree of a standard monomial of S/I.
Exp regularity(const MonomialIdeal& ideal, Strategy strategy = Strategy::corner);

/// Socle membership of a single monomial, valid for any monomial ideal
/// (m-primary or not): u outside K with every x_i * u inside K.
bool is_socle_member(const MonomialIdeal& ideal, const Monomial& u);

/// Full socle of an arbitrary proper nonzero monomial ideal. Always a finite
/// set (possibly empty); coincides with socle_monomials().monomials on
/// m-primary input.
std::vector<Monomial> socle_members(const MonomialIdeal& ideal);

/// Maximal-degree socle monomials of an arbitrary proper nonzero monomial
/// ideal; empty when the socle is empty.
std::vector<Monomial> witness_members(const MonomialIdeal& ideal);

}  // namespace regdef
