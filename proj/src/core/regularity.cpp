#include "regularity.hpp"

#include <algorithm>
#include <limits>

namespace regdef {

namespace {

constexpr long double kMaxBoxCells = 50'000'000.0L;

void require_artinian(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_unit()) {
    fail(Errc::not_m_primary, std::string(what) + " is undefined for the unit ideal");
  }
  if (!is_m_primary(ideal)) {
    fail(Errc::not_m_primary, std::string(what) + " requires an m-primary ideal");
  }
}

std::vector<Exp> pure_bounds(const MonomialIdeal& ideal) {
  auto pures = pure_power_exponents(ideal);
  std::vector<Exp> out;
  out.reserve(pures.size());
  for (const auto& p : pures) out.push_back(*p);
  return out;
}

// ---------------------------------------------------------------------------
// Box strategy
// ---------------------------------------------------------------------------

void check_box_budget(const std::vector<Exp>& bounds) {
  long double cells = 1.0L;
  for (Exp b : bounds) cells *= static_cast<long double>(b);
  if (cells > kMaxBoxCells) {
    fail(Errc::budget_exhausted, "pure-power box too large for full enumeration");
  }
}

template <typename Visit>
void walk_box(const std::vector<Exp>& bounds, Visit&& visit) {
  const int n = static_cast<int>(bounds.size());
  std::vector<Exp> cell(static_cast<std::size_t>(n), 0);
  // descending per coordinate so high degrees are reached first
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      visit(cell);
      return;
    }
    for (Exp e = bounds[static_cast<std::size_t>(i)] - 1; e >= 0; --e) {
      cell[static_cast<std::size_t>(i)] = e;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

std::vector<Monomial> box_standard(const MonomialIdeal& ideal) {
  const auto bounds = pure_bounds(ideal);
  check_box_budget(bounds);
  std::vector<Monomial> out;
  walk_box(bounds, [&](const std::vector<Exp>& cell) {
    if (!ideal.contains(cell)) out.emplace_back(cell);
  });
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return canonical_less(a, b);
  });
  return out;
}

Exp box_regularity(const MonomialIdeal& ideal) {
  const auto bounds = pure_bounds(ideal);
  check_box_budget(bounds);
  Exp best = -1;
  walk_box(bounds, [&](const std::vector<Exp>& cell) {
    Exp deg = 0;
    for (Exp e : cell) deg += e;
    // cells at or below the current best cannot improve the maximum
    if (deg <= best) return;
    if (!ideal.contains(cell)) best = deg;
  });
  if (best < 0) fail(Errc::internal, "m-primary proper ideal without standard monomials");
  return best + 1;
}

// ---------------------------------------------------------------------------
// Corner strategy: coordinate slices.
//
// For a socle monomial u and every coordinate i there must be a generator g
// with g_i = u_i + 1 and g_j <= u_j elsewhere, so u_i + 1 ranges over the
// positive generator exponents of coordinate i. Slicing on the leading
// coordinate value t reduces the ideal to the (k-1)-variable ideal K_t
// generated by the projections of the generators with g_0 <= t; monomials
// (t, v) outside the ideal correspond exactly to v outside K_t.
// ---------------------------------------------------------------------------

struct Slice {
  Exp t;                        // leading exponent, a corner candidate
  std::vector<Exp> projected;   // row-major pool of projections, g_0 <= t
  std::vector<Exp> entering;    // projections of rows with g_0 == t + 1
};

// Distinct positive leading exponents, ascending, together with projections.
std::vector<Slice> make_slices(const std::vector<Exp>& flat, int k) {
  const std::size_t n = static_cast<std::size_t>(k);
  const std::size_t count = flat.size() / n;
  std::vector<Exp> values;
  for (std::size_t i = 0; i < count; ++i) {
    if (flat[i * n] > 0) values.push_back(flat[i * n]);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<Slice> out;
  out.reserve(values.size());
  for (Exp v : values) {
    Slice s;
    s.t = v - 1;
    for (std::size_t i = 0; i < count; ++i) {
      const Exp lead = flat[i * n];
      if (lead <= s.t) {
        s.projected.insert(s.projected.end(), flat.begin() + static_cast<std::ptrdiff_t>(i * n + 1),
                           flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
      } else if (lead == v) {
        s.entering.insert(s.entering.end(), flat.begin() + static_cast<std::ptrdiff_t>(i * n + 1),
                          flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Sum over the non-leading coordinates of (pure power - 1): an upper bound
// for the maximal standard-monomial degree of every slice subideal, since
// pure powers only shrink under slicing.
Exp rest_pure_bound(const std::vector<Exp>& flat, int k) {
  const std::size_t n = static_cast<std::size_t>(k);
  const std::size_t count = flat.size() / n;
  std::vector<Exp> pure(n, std::numeric_limits<Exp>::max());
  for (std::size_t i = 0; i < count; ++i) {
    int support = -1;
    bool is_pure = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (flat[i * n + j] > 0) {
        if (support >= 0) {
          is_pure = false;
          break;
        }
        support = static_cast<int>(j);
      }
    }
    if (is_pure && support >= 0) {
      auto& slot = pure[static_cast<std::size_t>(support)];
      slot = std::min(slot, flat[i * n + static_cast<std::size_t>(support)]);
    }
  }
  Exp bound = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (pure[j] == std::numeric_limits<Exp>::max()) {
      fail(Errc::internal, "slice subproblem lost a pure power");
    }
    bound += pure[j] - 1;
  }
  return bound;
}

struct WitnessRec {
  Exp max_degree = -1;
  std::vector<std::vector<Exp>> monomials;  // only filled when collect is set
};

// Maximal standard-monomial degree (and optionally every maximizer) of the
// m-primary ideal given by flat generators in k variables.
//
// floor is a pruning hint: slices that provably cannot reach it are skipped.
// The returned max_degree is an achieved degree and is exact whenever it is
// at least the floor passed in; with collect set the maximizer list is
// complete at that exact value.
WitnessRec witness_rec(const std::vector<Exp>& flat, int k, bool collect, Exp floor) {
  WitnessRec result;
  if (k == 1) {
    Exp p = std::numeric_limits<Exp>::max();
    for (Exp e : flat) p = std::min(p, e);
    result.max_degree = p - 1;
    if (collect) result.monomials.push_back({p - 1});
    return result;
  }
  auto slices = make_slices(flat, k);
  const Exp rest = rest_pure_bound(flat, k);
  // Highest slices first; s.t + rest only shrinks, so pruning terminates
  // the whole loop.
  for (auto it = slices.rbegin(); it != slices.rend(); ++it) {
    Slice& s = *it;
    const Exp reach = s.t + rest;
    if (collect ? (reach < floor) : (reach <= floor)) break;
    MonomialIdeal sub = minimalize_flat(k - 1, std::move(s.projected));
    std::vector<Exp> sub_flat;
    sub_flat.reserve(sub.generator_count() * static_cast<std::size_t>(k - 1));
    for (std::size_t i = 0; i < sub.generator_count(); ++i) {
      auto g = sub.generator_span(i);
      sub_flat.insert(sub_flat.end(), g.begin(), g.end());
    }
    WitnessRec child = witness_rec(sub_flat, k - 1, collect, floor - s.t);
    const Exp total = s.t + child.max_degree;
    if (total > result.max_degree) {
      result.max_degree = total;
      if (collect) {
        result.monomials.clear();
        for (auto& m : child.monomials) {
          std::vector<Exp> full;
          full.reserve(m.size() + 1);
          full.push_back(s.t);
          full.insert(full.end(), m.begin(), m.end());
          result.monomials.push_back(std::move(full));
        }
      }
      floor = std::max(floor, total);
    } else if (collect && total == result.max_degree && !child.monomials.empty()) {
      for (auto& m : child.monomials) {
        std::vector<Exp> full;
        full.reserve(m.size() + 1);
        full.push_back(s.t);
        full.insert(full.end(), m.begin(), m.end());
        result.monomials.push_back(std::move(full));
      }
    }
  }
  return result;
}

std::vector<Exp> flat_of(const MonomialIdeal& ideal) {
  std::vector<Exp> flat;
  flat.reserve(ideal.generator_count() * static_cast<std::size_t>(ideal.vars()));
  for (std::size_t i = 0; i < ideal.generator_count(); ++i) {
    auto g = ideal.generator_span(i);
    flat.insert(flat.end(), g.begin(), g.end());
  }
  return flat;
}

// A safe starting floor: x_i^{p_i - 1} is standard for the pure power p_i.
Exp initial_floor(const MonomialIdeal& ideal) {
  Exp best = 0;
  for (Exp p : pure_bounds(ideal)) best = std::max(best, p - 1);
  return best;
}

// Full socle of the ideal given by flat generators in k variables; the ideal
// need not be m-primary. Rows of the result have k entries.
std::vector<std::vector<Exp>> socle_rec(const std::vector<Exp>& flat, int k) {
  std::vector<std::vector<Exp>> out;
  if (k == 1) {
    Exp p = std::numeric_limits<Exp>::max();
    for (Exp e : flat) p = std::min(p, e);
    if (p != std::numeric_limits<Exp>::max() && p > 0) out.push_back({p - 1});
    return out;
  }
  for (Slice& s : make_slices(flat, k)) {
    MonomialIdeal sub = minimalize_flat(k - 1, std::move(s.projected));
    std::vector<Exp> sub_flat = flat_of(sub);
    const std::size_t m = static_cast<std::size_t>(k - 1);
    const std::size_t entering_count = s.entering.size() / m;
    for (auto& v : socle_rec(sub_flat, k - 1)) {
      // leading-coordinate socle condition: (t + 1, v) must lie inside,
      // i.e. some generator entering at level t + 1 divides v.
      bool covered = false;
      for (std::size_t i = 0; i < entering_count && !covered; ++i) {
        covered = true;
        for (std::size_t j = 0; j < m; ++j) {
          if (s.entering[i * m + j] > v[j]) {
            covered = false;
            break;
          }
        }
      }
      if (covered) {
        std::vector<Exp> full;
        full.reserve(v.size() + 1);
        full.push_back(s.t);
        full.insert(full.end(), v.begin(), v.end());
        out.push_back(std::move(full));
      }
    }
  }
  return out;
}

std::vector<Monomial> to_monomials(std::vector<std::vector<Exp>>&& rows) {
  std::vector<Monomial> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return canonical_less(a, b);
  });
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal) {
  require_artinian(ideal, "standard monomial enumeration");
  return box_standard(ideal);
}

bool is_socle_member(const MonomialIdeal& ideal, const Monomial& u) {
  if (u.vars() != ideal.vars()) {
    fail(Errc::dimension_mismatch, "monomial dimension does not match ideal");
  }
  if (ideal.contains(u)) return false;
  for (int i = 0; i < ideal.vars(); ++i) {
    if (!ideal.contains(u.times_variable(i))) return false;
  }
  return true;
}

std::vector<Monomial> socle_members(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) {
    fail(Errc::invalid_argument, "socle is undefined for the unit ideal");
  }
  if (ideal.is_zero()) return {};
  return to_monomials(socle_rec(flat_of(ideal), ideal.vars()));
}

std::vector<Monomial> witness_members(const MonomialIdeal& ideal) {
  auto soc = socle_members(ideal);
  if (soc.empty()) return {};
  Exp top = 0;
  for (const Monomial& u : soc) top = std::max(top, u.degree());
  std::vector<Monomial> out;
  for (Monomial& u : soc) {
    if (u.degree() == top) out.push_back(std::move(u));
  }
  return out;
}

SocleBasis socle_monomials(const MonomialIdeal& ideal, Strategy strategy) {
  require_artinian(ideal, "socle");
  SocleBasis basis;
  basis.ideal = ideal;
  if (strategy == Strategy::box) {
    for (const Monomial& u : box_standard(ideal)) {
      bool in_socle = true;
      for (int i = 0; i < ideal.vars() && in_socle; ++i) {
        in_socle = ideal.contains(u.times_variable(i));
      }
      if (in_socle) basis.monomials.push_back(u);
    }
  } else {
    basis.monomials = to_monomials(socle_rec(flat_of(ideal), ideal.vars()));
  }
  if (basis.monomials.empty()) {
    fail(Errc::internal, "m-primary proper ideal with empty socle");
  }
  basis.top_degree = basis.monomials.back().degree();  // canonical order: degree last
  return basis;
}

WitnessSet witness_set(const MonomialIdeal& ideal, Strategy strategy) {
  require_artinian(ideal, "witness set");
  WitnessSet w;
  w.ideal = ideal;
  if (strategy == Strategy::box) {
    auto std_monos = box_standard(ideal);
    Exp top = 0;
    for (const Monomial& u : std_monos) top = std::max(top, u.degree());
    for (Monomial& u : std_monos) {
      if (u.degree() == top) w.monomials.push_back(std::move(u));
    }
    w.degree = top;
  } else {
    WitnessRec rec = witness_rec(flat_of(ideal), ideal.vars(), true, initial_floor(ideal));
    std::vector<std::vector<Exp>> rows = std::move(rec.monomials);
    w.monomials = to_monomials(std::move(rows));
    w.degree = rec.max_degree;
  }
  // Every maximal-degree standard monomial is annihilated by all variables.
  for (const Monomial& u : w.monomials) {
    if (!is_socle_member(ideal, u)) {
      fail(Errc::internal, "witness monomial fails the socle test");
    }
  }
  return w;
}

Exp regularity(const MonomialIdeal& ideal, Strategy strategy) {
  require_artinian(ideal, "regularity");
  if (strategy == Strategy::box) return box_regularity(ideal);
  const Exp floor = initial_floor(ideal);  // x_i^{p_i - 1} is always standard
  WitnessRec rec = witness_rec(flat_of(ideal), ideal.vars(), false, floor);
  return std::max(rec.max_degree, floor) + 1;
}

}  // namespace regdef
