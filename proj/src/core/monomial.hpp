#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace regdef {

/// Exponents are 64-bit integers with checked arithmetic: any operation that
/// would leave the representable range reports Errc::overflow instead of
/// wrapping. The parser additionally caps literal exponents (see parser.hpp)
/// so that no in-scope computation can reach the limit.
using Exp = std::int64_t;

Exp checked_add(Exp a, Exp b);
Exp checked_mul(Exp a, Exp b);

/// A monomial in a fixed polynomial ring: one exponent per variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exp> exponents);
  static Monomial unit(int vars);

  int vars() const { return static_cast<int>(exps_.size()); }
  Exp exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  std::span<const Exp> exponents() const { return exps_; }

  /// Total degree, always recomputed from the exponents.
  Exp degree() const;

  bool is_unit() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial times_variable(int i) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Renders in the grammar accepted by the parser, e.g. "x1^2*x3".
  std::string str() const;

 private:
  std::vector<Exp> exps_;
};

/// Canonical order everywhere: total degree first, then lexicographic on the
/// exponent vector. Equal ideals therefore have identical generator lists.
bool canonical_less(std::span<const Exp> a, std::span<const Exp> b);
bool canonical_less(const Monomial& a, const Monomial& b);

/// A monomial ideal given by its unique minimal generating set, stored in
/// canonical order. The zero ideal has no generators; the unit ideal has the
/// single generator 1. Instances are immutable and cheap to copy.
class MonomialIdeal {
 public:
  MonomialIdeal() : MonomialIdeal(zero(0)) {}

  static MonomialIdeal zero(int vars);
  static MonomialIdeal unit(int vars);

  int vars() const;
  bool is_zero() const { return generator_count() == 0; }
  bool is_unit() const;

  std::size_t generator_count() const;
  std::span<const Exp> generator_span(std::size_t i) const;
  Exp generator_degree(std::size_t i) const;
  Monomial generator(std::size_t i) const;
  std::vector<Monomial> generators() const;

  Exp min_generator_degree() const;  // error on zero ideal
  Exp max_generator_degree() const;  // error on zero ideal

  /// Monomial membership: some generator divides u.
  bool contains(const Monomial& u) const;
  bool contains(std::span<const Exp> u) const;

  /// Ideal inclusion: every generator of other lies in this ideal.
  bool contains_ideal(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

  std::string str() const;

  /// Opaque storage; defined in the implementation file only.
  struct Impl;

 private:
  explicit MonomialIdeal(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;

  friend MonomialIdeal minimalize_flat(int vars, std::vector<Exp>&& pool);
};

/// Reduces an arbitrary generating set to the minimal one (the inclusion-
/// minimal antichain under divisibility), in canonical order.
MonomialIdeal minimalize(int vars, const std::vector<Monomial>& gens);

/// Internal fast path: pool is a row-major (count x vars) exponent matrix
/// that may contain duplicates and redundant rows; consumed destructively.
MonomialIdeal minimalize_flat(int vars, std::vector<Exp>&& pool);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// The pure-power ideal (x1^a1, ..., xn^an); all entries must be positive.
MonomialIdeal boxed_ideal(const std::vector<Exp>& a);

/// All monomials of degree q in n variables (the q-th power of the maximal
/// ideal); q >= 1.
MonomialIdeal max_ideal_power(int n, Exp q);

/// Subideal generated by the minimal generators of degree <= d.
MonomialIdeal truncate_below(const MonomialIdeal& ideal, Exp d);

/// For each variable, the exponent of its pure-power minimal generator, if
/// one exists. A minimal generating set has at most one pure power per
/// variable.
std::vector<std::optional<Exp>> pure_power_exponents(const MonomialIdeal& ideal);

/// True iff every variable carries a pure-power minimal generator, i.e. the
/// quotient is Artinian. The zero and unit ideals are not m-primary.
bool is_m_primary(const MonomialIdeal& ideal);

/// Caches consecutive powers of a base ideal. Readers may share an instance
/// across threads; extensions are serialized and the first computed value of
/// each power wins.
class PowerCache {
 public:
  explicit PowerCache(MonomialIdeal base);

  const MonomialIdeal& base() const { return base_; }

  /// base^m with every intermediate power minimalized and retained.
  /// power(0) is the unit ideal. References stay valid for the cache's
  /// lifetime.
  const MonomialIdeal& power(int m);

  /// Number of powers currently cached (highest cached exponent).
  int cached_up_to() const;

 private:
  MonomialIdeal base_;
  MonomialIdeal unit_;
  mutable std::shared_mutex mutex_;
  std::deque<MonomialIdeal> powers_;  // powers_[t-1] = base^t
};

MonomialIdeal power(const MonomialIdeal& ideal, int m, PowerCache& cache);
MonomialIdeal power(const MonomialIdeal& ideal, int m);

/// The ideal order ord_J(u): the unique t with u in J^t \ J^{t+1}, or 0 when
/// u lies outside J. Undefined (error) for the zero and unit ideal.
Exp order(const MonomialIdeal& ideal_j, const Monomial& u, PowerCache& cache);

}  // namespace regdef
