#include "monomial.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>

namespace regdef {

Exp checked_add(Exp a, Exp b) {
  Exp r;
  if (__builtin_add_overflow(a, b, &r)) {
    fail(Errc::overflow, "exponent addition overflows 64 bits");
  }
  return r;
}

Exp checked_mul(Exp a, Exp b) {
  Exp r;
  if (__builtin_mul_overflow(a, b, &r)) {
    fail(Errc::overflow, "exponent multiplication overflows 64 bits");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<Exp> exponents) : exps_(std::move(exponents)) {
  for (Exp e : exps_) {
    if (e < 0) fail(Errc::invalid_argument, "negative exponent");
  }
}

Monomial Monomial::unit(int vars) {
  return Monomial(std::vector<Exp>(static_cast<std::size_t>(vars), 0));
}

Exp Monomial::degree() const {
  Exp d = 0;
  for (Exp e : exps_) d = checked_add(d, e);
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exp e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (vars() != other.vars()) {
    fail(Errc::dimension_mismatch, "monomials live in different rings");
  }
  for (int i = 0; i < vars(); ++i) {
    if (exps_[static_cast<std::size_t>(i)] > other.exps_[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (vars() != other.vars()) {
    fail(Errc::dimension_mismatch, "monomials live in different rings");
  }
  std::vector<Exp> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    e[i] = checked_add(exps_[i], other.exps_[i]);
  }
  return Monomial(std::move(e));
}

Monomial Monomial::times_variable(int i) const {
  std::vector<Exp> e(exps_);
  e.at(static_cast<std::size_t>(i)) = checked_add(e[static_cast<std::size_t>(i)], 1);
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  if (is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < vars(); ++i) {
    Exp e = exps_[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!first) out << '*';
    first = false;
    out << 'x' << (i + 1);
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

bool canonical_less(std::span<const Exp> a, std::span<const Exp> b) {
  Exp da = 0, db = 0;
  for (Exp e : a) da += e;
  for (Exp e : b) db += e;
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  return canonical_less(a.exponents(), b.exponents());
}

// ---------------------------------------------------------------------------
// Packed representation: up to 8 variables, exponents below 2^15, stored in
// 16-bit lanes of two 64-bit words with the leading variable in the most
// significant lane. Integer comparison of (w0, w1) is then the lexicographic
// order on exponent vectors, and divisibility is a branch-free subtraction.
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxPackedVars = 8;
constexpr Exp kMaxPackedExp = 0x7FFF;
constexpr std::uint64_t kGuard = 0x8000800080008000ULL;

struct Pack {
  std::uint64_t w0 = 0, w1 = 0;
};

inline Pack pack_row(const Exp* e, int vars) {
  Pack p;
  for (int i = 0; i < vars && i < 4; ++i) {
    p.w0 |= static_cast<std::uint64_t>(e[i]) << ((3 - i) * 16);
  }
  for (int i = 4; i < vars; ++i) {
    p.w1 |= static_cast<std::uint64_t>(e[i]) << ((7 - i) * 16);
  }
  return p;
}

inline void unpack_row(const Pack& p, Exp* e, int vars) {
  for (int i = 0; i < vars && i < 4; ++i) {
    e[i] = static_cast<Exp>((p.w0 >> ((3 - i) * 16)) & 0x7FFF);
  }
  for (int i = 4; i < vars; ++i) {
    e[i] = static_cast<Exp>((p.w1 >> ((7 - i) * 16)) & 0x7FFF);
  }
}

// g divides u, i.e. g <= u in every lane.
inline bool pack_divides(const Pack& g, const Pack& u) {
  return ((((u.w0 | kGuard) - g.w0) & kGuard) == kGuard) &&
         ((((u.w1 | kGuard) - g.w1) & kGuard) == kGuard);
}

inline bool row_divides(const Exp* g, const Exp* u, int vars) {
  for (int i = 0; i < vars; ++i) {
    if (g[i] > u[i]) return false;
  }
  return true;
}

inline Exp row_degree(const Exp* e, int vars) {
  Exp d = 0;
  for (int i = 0; i < vars; ++i) d = checked_add(d, e[i]);
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// MonomialIdeal
// ---------------------------------------------------------------------------

struct MonomialIdeal::Impl {
  int vars = 0;
  std::vector<Exp> flat;          // count x vars, canonical order
  std::vector<Exp> degrees;       // per generator
  bool packed = false;
  std::vector<Pack> packs;        // per generator when packed

  std::size_t count() const { return degrees.size(); }
};

MonomialIdeal::MonomialIdeal(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

MonomialIdeal MonomialIdeal::zero(int vars) {
  auto impl = std::make_shared<Impl>();
  impl->vars = vars;
  return MonomialIdeal(std::move(impl));
}

MonomialIdeal MonomialIdeal::unit(int vars) {
  auto impl = std::make_shared<Impl>();
  impl->vars = vars;
  impl->flat.assign(static_cast<std::size_t>(vars), 0);
  impl->degrees.assign(1, 0);
  impl->packed = vars <= kMaxPackedVars;
  if (impl->packed) impl->packs.assign(1, Pack{});
  return MonomialIdeal(std::move(impl));
}

int MonomialIdeal::vars() const { return impl_->vars; }

bool MonomialIdeal::is_unit() const {
  return impl_->count() == 1 && impl_->degrees[0] == 0;
}

std::size_t MonomialIdeal::generator_count() const { return impl_->count(); }

std::span<const Exp> MonomialIdeal::generator_span(std::size_t i) const {
  const std::size_t n = static_cast<std::size_t>(impl_->vars);
  return std::span<const Exp>(impl_->flat.data() + i * n, n);
}

Exp MonomialIdeal::generator_degree(std::size_t i) const { return impl_->degrees[i]; }

Monomial MonomialIdeal::generator(std::size_t i) const {
  auto s = generator_span(i);
  return Monomial(std::vector<Exp>(s.begin(), s.end()));
}

std::vector<Monomial> MonomialIdeal::generators() const {
  std::vector<Monomial> out;
  out.reserve(generator_count());
  for (std::size_t i = 0; i < generator_count(); ++i) out.push_back(generator(i));
  return out;
}

Exp MonomialIdeal::min_generator_degree() const {
  if (is_zero()) fail(Errc::undefined, "zero ideal has no generators");
  return impl_->degrees.front();  // canonical order is degree-ascending
}

Exp MonomialIdeal::max_generator_degree() const {
  if (is_zero()) fail(Errc::undefined, "zero ideal has no generators");
  return impl_->degrees.back();
}

bool MonomialIdeal::contains(std::span<const Exp> u) const {
  if (static_cast<int>(u.size()) != impl_->vars) {
    fail(Errc::dimension_mismatch, "monomial dimension does not match ideal");
  }
  const std::size_t count = impl_->count();
  if (count == 0) return false;
  const Exp udeg = row_degree(u.data(), impl_->vars);
  bool u_packable = impl_->packed;
  if (u_packable) {
    for (Exp e : u) {
      if (e > kMaxPackedExp) {
        u_packable = false;
        break;
      }
    }
  }
  if (u_packable) {
    const Pack up = pack_row(u.data(), impl_->vars);
    for (std::size_t i = 0; i < count; ++i) {
      if (impl_->degrees[i] > udeg) break;
      if (pack_divides(impl_->packs[i], up)) return true;
    }
    return false;
  }
  const int n = impl_->vars;
  for (std::size_t i = 0; i < count; ++i) {
    if (impl_->degrees[i] > udeg) break;
    if (row_divides(impl_->flat.data() + i * static_cast<std::size_t>(n), u.data(), n)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const Monomial& u) const { return contains(u.exponents()); }

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
  if (vars() != other.vars()) {
    fail(Errc::dimension_mismatch, "ideals live in different rings");
  }
  for (std::size_t i = 0; i < other.generator_count(); ++i) {
    if (!contains(other.generator_span(i))) return false;
  }
  return true;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.impl_->vars == b.impl_->vars && a.impl_->flat == b.impl_->flat;
}

std::string MonomialIdeal::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < generator_count(); ++i) {
    if (i) out << " + ";
    out << generator(i).str();
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Minimalization
// ---------------------------------------------------------------------------

namespace {

struct PackedRow {
  Exp deg;
  Pack p;
};

std::shared_ptr<const MonomialIdeal::Impl> build_packed(int vars,
                                                        const std::vector<PackedRow>& kept) {
  auto impl = std::make_shared<MonomialIdeal::Impl>();
  impl->vars = vars;
  impl->packed = true;
  impl->flat.resize(kept.size() * static_cast<std::size_t>(vars));
  impl->degrees.resize(kept.size());
  impl->packs.resize(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    impl->degrees[i] = kept[i].deg;
    impl->packs[i] = kept[i].p;
    unpack_row(kept[i].p, impl->flat.data() + i * static_cast<std::size_t>(vars), vars);
  }
  return impl;
}

std::shared_ptr<const MonomialIdeal::Impl> build_general(int vars,
                                                         const std::vector<const Exp*>& kept) {
  auto impl = std::make_shared<MonomialIdeal::Impl>();
  impl->vars = vars;
  impl->packed = false;
  impl->flat.resize(kept.size() * static_cast<std::size_t>(vars));
  impl->degrees.resize(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::memcpy(impl->flat.data() + i * static_cast<std::size_t>(vars), kept[i],
                sizeof(Exp) * static_cast<std::size_t>(vars));
    impl->degrees[i] = row_degree(kept[i], vars);
  }
  return impl;
}

}  // namespace

MonomialIdeal minimalize_flat(int vars, std::vector<Exp>&& pool) {
  if (vars < 0) fail(Errc::invalid_argument, "negative ring dimension");
  const std::size_t n = static_cast<std::size_t>(vars);
  if (n == 0) {
    // Degenerate ring k: any generator is the unit.
    return pool.empty() && true ? MonomialIdeal::zero(0) : MonomialIdeal::unit(0);
  }
  if (pool.size() % n != 0) fail(Errc::internal, "ragged exponent pool");
  const std::size_t count = pool.size() / n;
  if (count == 0) return MonomialIdeal::zero(vars);

  bool packable = vars <= kMaxPackedVars;
  for (Exp e : pool) {
    if (e < 0) fail(Errc::invalid_argument, "negative exponent");
    if (e > kMaxPackedExp) packable = false;
  }

  if (packable) {
    std::vector<PackedRow> rows(count);
    for (std::size_t i = 0; i < count; ++i) {
      const Exp* r = pool.data() + i * n;
      rows[i].deg = row_degree(r, vars);
      rows[i].p = pack_row(r, vars);
    }
    pool.clear();
    pool.shrink_to_fit();
    std::sort(rows.begin(), rows.end(), [](const PackedRow& a, const PackedRow& b) {
      if (a.deg != b.deg) return a.deg < b.deg;
      if (a.p.w0 != b.p.w0) return a.p.w0 < b.p.w0;
      return a.p.w1 < b.p.w1;
    });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const PackedRow& a, const PackedRow& b) {
                             return a.p.w0 == b.p.w0 && a.p.w1 == b.p.w1;
                           }),
               rows.end());
    if (rows.front().deg == 0) return MonomialIdeal::unit(vars);

    std::vector<PackedRow> kept;
    std::size_t block_start = 0;  // kept entries before this index have smaller degree
    Exp block_deg = -1;
    for (const PackedRow& r : rows) {
      if (r.deg != block_deg) {
        block_start = kept.size();
        block_deg = r.deg;
      }
      bool redundant = false;
      for (std::size_t k = 0; k < block_start; ++k) {
        if (pack_divides(kept[k].p, r.p)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) kept.push_back(r);
    }
    return MonomialIdeal(build_packed(vars, kept));
  }

  // General path: index sort plus plain row comparisons.
  std::vector<const Exp*> rows(count);
  std::vector<Exp> degs(count);
  for (std::size_t i = 0; i < count; ++i) {
    rows[i] = pool.data() + i * n;
    degs[i] = row_degree(rows[i], vars);
  }
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (degs[a] != degs[b]) return degs[a] < degs[b];
    return std::lexicographical_compare(rows[a], rows[a] + n, rows[b], rows[b] + n);
  });

  std::vector<const Exp*> kept;
  std::vector<Exp> kept_deg;
  std::size_t block_start = 0;
  Exp block_deg = -1;
  for (std::size_t pos = 0; pos < count; ++pos) {
    const Exp* r = rows[idx[pos]];
    const Exp d = degs[idx[pos]];
    if (d != block_deg) {
      block_start = kept.size();
      block_deg = d;
    }
    if (!kept.empty() && kept.size() > block_start &&
        std::equal(r, r + n, kept.back())) {
      continue;  // duplicate within the degree block
    }
    bool redundant = false;
    for (std::size_t k = 0; k < block_start; ++k) {
      if (row_divides(kept[k], r, vars)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      kept.push_back(r);
      kept_deg.push_back(d);
    }
  }
  if (!kept.empty() && kept_deg.front() == 0) return MonomialIdeal::unit(vars);
  return MonomialIdeal(build_general(vars, kept));
}

MonomialIdeal minimalize(int vars, const std::vector<Monomial>& gens) {
  std::vector<Exp> pool;
  pool.reserve(gens.size() * static_cast<std::size_t>(vars));
  for (const Monomial& g : gens) {
    if (g.vars() != vars) {
      fail(Errc::dimension_mismatch, "generator dimension does not match ideal");
    }
    pool.insert(pool.end(), g.exponents().begin(), g.exponents().end());
  }
  return minimalize_flat(vars, std::move(pool));
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars()) fail(Errc::dimension_mismatch, "ideals live in different rings");
  const std::size_t n = static_cast<std::size_t>(a.vars());
  std::vector<Exp> pool;
  pool.reserve((a.generator_count() + b.generator_count()) * n);
  for (std::size_t i = 0; i < a.generator_count(); ++i) {
    auto s = a.generator_span(i);
    pool.insert(pool.end(), s.begin(), s.end());
  }
  for (std::size_t i = 0; i < b.generator_count(); ++i) {
    auto s = b.generator_span(i);
    pool.insert(pool.end(), s.begin(), s.end());
  }
  return minimalize_flat(a.vars(), std::move(pool));
}

namespace {
// Hard ceiling on a single product pool; keeps runaway expressions from
// exhausting memory before the defect-level budgets can notice.
constexpr std::size_t kMaxProductRows = 80'000'000;
}  // namespace

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars()) fail(Errc::dimension_mismatch, "ideals live in different rings");
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.vars());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const std::size_t n = static_cast<std::size_t>(a.vars());
  const std::size_t rows = a.generator_count() * b.generator_count();
  if (rows > kMaxProductRows) {
    fail(Errc::budget_exhausted, "product generator pool exceeds the global ceiling");
  }
  std::vector<Exp> pool(rows * n);
  std::size_t w = 0;
  for (std::size_t i = 0; i < a.generator_count(); ++i) {
    auto ga = a.generator_span(i);
    for (std::size_t j = 0; j < b.generator_count(); ++j) {
      auto gb = b.generator_span(j);
      for (std::size_t k = 0; k < n; ++k) {
        pool[w + k] = checked_add(ga[k], gb[k]);
      }
      w += n;
    }
  }
  return minimalize_flat(a.vars(), std::move(pool));
}

MonomialIdeal boxed_ideal(const std::vector<Exp>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Exp> pool(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (a[static_cast<std::size_t>(i)] <= 0) {
      fail(Errc::invalid_argument, "pure-power exponents must be positive");
    }
    pool[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
        a[static_cast<std::size_t>(i)];
  }
  return minimalize_flat(n, std::move(pool));
}

MonomialIdeal max_ideal_power(int n, Exp q) {
  if (n <= 0) fail(Errc::invalid_argument, "ring dimension must be positive");
  if (q < 1) fail(Errc::invalid_argument, "power of the maximal ideal requires q >= 1");
  // count = C(q+n-1, n-1); guard against absurd enumerations
  long double approx = 1.0L;
  for (int i = 1; i < n; ++i) approx = approx * static_cast<long double>(q + i) / i;
  if (approx > 50'000'000.0L) {
    fail(Errc::budget_exhausted, "degree-q monomial enumeration too large");
  }
  std::vector<Exp> pool;
  std::vector<Exp> cur(static_cast<std::size_t>(n), 0);
  // enumerate all exponent vectors of total degree q
  auto rec = [&](auto&& self, int i, Exp rest) -> void {
    if (i == n - 1) {
      cur[static_cast<std::size_t>(i)] = rest;
      pool.insert(pool.end(), cur.begin(), cur.end());
      return;
    }
    for (Exp e = 0; e <= rest; ++e) {
      cur[static_cast<std::size_t>(i)] = e;
      self(self, i + 1, rest - e);
    }
  };
  rec(rec, 0, q);
  return minimalize_flat(n, std::move(pool));
}

MonomialIdeal truncate_below(const MonomialIdeal& ideal, Exp d) {
  if (d < 0) fail(Errc::invalid_argument, "degree bound must be nonnegative");
  std::vector<Exp> pool;
  for (std::size_t i = 0; i < ideal.generator_count(); ++i) {
    if (ideal.generator_degree(i) <= d) {
      auto s = ideal.generator_span(i);
      pool.insert(pool.end(), s.begin(), s.end());
    }
  }
  return minimalize_flat(ideal.vars(), std::move(pool));
}

std::vector<std::optional<Exp>> pure_power_exponents(const MonomialIdeal& ideal) {
  std::vector<std::optional<Exp>> out(static_cast<std::size_t>(ideal.vars()));
  for (std::size_t i = 0; i < ideal.generator_count(); ++i) {
    auto g = ideal.generator_span(i);
    int support = -1;
    bool pure = true;
    for (int j = 0; j < ideal.vars(); ++j) {
      if (g[static_cast<std::size_t>(j)] > 0) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = j;
      }
    }
    if (pure && support >= 0) {
      auto& slot = out[static_cast<std::size_t>(support)];
      const Exp e = g[static_cast<std::size_t>(support)];
      if (!slot || e < *slot) slot = e;
    }
  }
  return out;
}

bool is_m_primary(const MonomialIdeal& ideal) {
  if (ideal.vars() == 0) return false;
  if (ideal.is_zero() || ideal.is_unit()) return false;
  auto pures = pure_power_exponents(ideal);
  return std::all_of(pures.begin(), pures.end(), [](const auto& p) { return p.has_value(); });
}

// ---------------------------------------------------------------------------
// PowerCache
// ---------------------------------------------------------------------------

PowerCache::PowerCache(MonomialIdeal base)
    : base_(std::move(base)), unit_(MonomialIdeal::unit(base_.vars())) {
  powers_.push_back(base_);
}

int PowerCache::cached_up_to() const {
  std::shared_lock lock(mutex_);
  return static_cast<int>(powers_.size());
}

const MonomialIdeal& PowerCache::power(int m) {
  if (m < 0) fail(Errc::invalid_argument, "negative ideal power");
  if (m == 0) return unit_;
  for (;;) {
    MonomialIdeal highest;
    std::size_t have;
    {
      std::shared_lock lock(mutex_);
      have = powers_.size();
      if (static_cast<std::size_t>(m) <= have) {
        return powers_[static_cast<std::size_t>(m) - 1];
      }
      highest = powers_.back();
    }
    MonomialIdeal next = product(highest, base_);
    std::unique_lock lock(mutex_);
    if (powers_.size() == have) {
      powers_.push_back(std::move(next));
    }
    // Otherwise another thread extended first; retry with the longer cache.
  }
}

MonomialIdeal power(const MonomialIdeal& ideal, int m, PowerCache& cache) {
  if (!(cache.base() == ideal)) {
    fail(Errc::internal, "power cache bound to a different base ideal");
  }
  return cache.power(m);
}

MonomialIdeal power(const MonomialIdeal& ideal, int m) {
  PowerCache cache(ideal);
  return cache.power(m);
}

Exp order(const MonomialIdeal& ideal_j, const Monomial& u, PowerCache& cache) {
  if (ideal_j.is_zero() || ideal_j.is_unit()) {
    fail(Errc::undefined, "ideal order is undefined for the zero and unit ideal");
  }
  if (!(cache.base() == ideal_j)) {
    fail(Errc::internal, "power cache bound to a different base ideal");
  }
  const Exp udeg = u.degree();
  for (int t = 1;; ++t) {
    const MonomialIdeal& p = cache.power(t);
    // Every element of J^t has degree at least the minimal generator degree,
    // which grows without bound in t; this guarantees termination.
    if (p.min_generator_degree() > udeg) return t - 1;
    if (!p.contains(u)) return t - 1;
  }
}

}  // namespace regdef
