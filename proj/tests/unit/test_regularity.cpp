#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "core/monomial.hpp"
#include "core/regularity.hpp"
#include "support/test_rng.hpp"

using namespace regdef;

namespace {

MonomialIdeal ideal(int vars, std::vector<std::vector<Exp>> rows) {
  std::vector<Monomial> gens;
  for (auto& r : rows) gens.emplace_back(std::move(r));
  return minimalize(vars, gens);
}

std::set<std::vector<Exp>> as_rows(const std::vector<Monomial>& monos) {
  std::set<std::vector<Exp>> out;
  for (const auto& m : monos) out.insert({m.exponents().begin(), m.exponents().end()});
  return out;
}

MonomialIdeal random_primary(testrng::SplitMix64& rng, int max_vars = 4, Exp max_pure = 6,
                             int max_extra = 6) {
  const int n = static_cast<int>(rng.range(2, max_vars));
  std::vector<Exp> pures;
  for (int i = 0; i < n; ++i) pures.push_back(rng.range(2, max_pure));
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<Exp> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = pures[static_cast<std::size_t>(i)];
    gens.emplace_back(std::move(e));
  }
  const int extras = static_cast<int>(rng.range(0, max_extra));
  for (int t = 0; t < extras; ++t) {
    std::vector<Exp> e;
    Exp deg = 0;
    for (int i = 0; i < n; ++i) {
      e.push_back(rng.range(0, pures[static_cast<std::size_t>(i)] - 1));
      deg += e.back();
    }
    if (deg > 0) gens.emplace_back(std::move(e));
  }
  return minimalize(n, gens);
}

// fat-socle example base: J in three variables
MonomialIdeal fat_socle_j() {
  std::vector<Monomial> gens;
  for (int i = 0; i < 3; ++i) {
    std::vector<Exp> pure(3, 0);
    pure[static_cast<std::size_t>(i)] = 8;
    gens.emplace_back(std::move(pure));
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<Exp> e(3, 0);
      e[static_cast<std::size_t>(i)] = 7;
      e[static_cast<std::size_t>(j)] = 2;
      gens.emplace_back(std::move(e));
    }
    std::vector<Exp> e(3, 1);
    e[static_cast<std::size_t>(i)] = 7;
    gens.emplace_back(std::move(e));
  }
  return minimalize(3, gens);
}

}  // namespace

TEST_SUITE("regularity") {
  TEST_CASE("standard monomials of small quotients") {
    auto I = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
    auto std_monos = standard_monomials(I);
    CHECK(as_rows(std_monos) ==
          std::set<std::vector<Exp>>{{0, 0}, {1, 0}, {0, 1}, {0, 2}});

    auto m = ideal(2, {{1, 0}, {0, 1}});
    CHECK(as_rows(standard_monomials(m)) == std::set<std::vector<Exp>>{{0, 0}});

    auto box = boxed_ideal({2, 2, 2});
    CHECK(standard_monomials(box).size() == 8);
  }

  TEST_CASE("socle of (x^2, xy, y^3)") {
    auto I = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
    for (auto strategy : {Strategy::box, Strategy::corner}) {
      auto s = socle_monomials(I, strategy);
      CHECK(as_rows(s.monomials) == std::set<std::vector<Exp>>{{1, 0}, {0, 2}});
      CHECK(s.top_degree == 2);
    }
  }

  TEST_CASE("complete intersection socle is one-dimensional") {
    for (Exp d : {2, 3, 4}) {
      for (int n : {2, 3}) {
        auto I = boxed_ideal(std::vector<Exp>(static_cast<std::size_t>(n), d));
        auto s = socle_monomials(I);
        REQUIRE(s.monomials.size() == 1);
        CHECK(s.monomials[0] ==
              Monomial(std::vector<Exp>(static_cast<std::size_t>(n), d - 1)));
        CHECK(s.top_degree == n * (d - 1));
      }
    }
  }

  TEST_CASE("fat-socle base ideal: socle contains the cube corner at degree 18") {
    auto J = fat_socle_j();
    auto s = socle_monomials(J);
    CHECK(s.top_degree == 18);
    bool found = false;
    for (const auto& u : s.monomials) found = found || u == Monomial({6, 6, 6});
    CHECK(found);
    // the witness set is exactly the top corner
    auto w = witness_set(J);
    CHECK(as_rows(w.monomials) == std::set<std::vector<Exp>>{{6, 6, 6}});
    CHECK(w.degree == 18);
  }

  TEST_CASE("witness sets") {
    auto I = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
    auto w = witness_set(I);
    CHECK(as_rows(w.monomials) == std::set<std::vector<Exp>>{{0, 2}});
    CHECK(w.degree == 2);

    auto sq = power(ideal(2, {{2, 0}, {0, 2}}), 2);
    auto w2 = witness_set(sq);
    CHECK(as_rows(w2.monomials) == std::set<std::vector<Exp>>{{3, 1}, {1, 3}});
    CHECK(w2.degree == 4);
  }

  TEST_CASE("regularity of pure-power ideals is n(d-1)+1") {
    for (int n : {2, 3, 4}) {
      for (Exp d : {2, 3, 5}) {
        auto I = boxed_ideal(std::vector<Exp>(static_cast<std::size_t>(n), d));
        CHECK(regularity(I, Strategy::box) == n * (d - 1) + 1);
        CHECK(regularity(I, Strategy::corner) == n * (d - 1) + 1);
      }
    }
  }

  TEST_CASE("fat-socle regularities") {
    auto J = fat_socle_j();
    auto I = sum(J, max_ideal_power(3, 10));
    CHECK(regularity(I) == 10);
    CHECK(regularity(J) == 19);
    CHECK(regularity(power(I, 2)) == 19);
  }

  TEST_CASE("regularity of (x^2, xy, y^3) is 3") {
    auto I = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
    CHECK(regularity(I, Strategy::box) == 3);
    CHECK(regularity(I, Strategy::corner) == 3);
  }

  TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS((void)regularity(MonomialIdeal::unit(2)), Error);
    CHECK_THROWS_AS((void)regularity(MonomialIdeal::zero(2)), Error);
    CHECK_THROWS_AS((void)regularity(ideal(2, {{2, 0}, {1, 1}})), Error);
    CHECK_THROWS_AS((void)socle_monomials(MonomialIdeal::unit(2)), Error);
    CHECK_THROWS_AS((void)standard_monomials(ideal(2, {{1, 1}})), Error);
  }

  TEST_CASE("general socle membership and enumeration on non-primary ideals") {
    // K = (x) in two variables: no socle at all
    auto K = ideal(2, {{1, 0}});
    CHECK(socle_members(K).empty());
    CHECK(witness_members(K).empty());
    CHECK_FALSE(is_socle_member(K, Monomial({0, 1})));

    // K = (x^2, xy): corners of the infinite staircase
    auto K2 = ideal(2, {{2, 0}, {1, 1}});
    auto s = socle_members(K2);
    CHECK(as_rows(s) == std::set<std::vector<Exp>>{{1, 0}});
    CHECK(is_socle_member(K2, Monomial({1, 0})));

    // socle enumeration agrees with the m-primary API where both apply
    auto I = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
    CHECK(as_rows(socle_members(I)) == as_rows(socle_monomials(I).monomials));
  }

  TEST_CASE("property: strategies agree on random m-primary ideals") {
    testrng::SplitMix64 rng(0xACE0);
    int done = 0;
    for (int trial = 0; trial < 120; ++trial) {
      auto I = random_primary(rng);
      auto rb = regularity(I, Strategy::box);
      auto rc = regularity(I, Strategy::corner);
      CHECK(rb == rc);
      auto sb = socle_monomials(I, Strategy::box);
      auto sc = socle_monomials(I, Strategy::corner);
      CHECK(as_rows(sb.monomials) == as_rows(sc.monomials));
      CHECK(sb.top_degree == sc.top_degree);
      auto wb = witness_set(I, Strategy::box);
      auto wc = witness_set(I, Strategy::corner);
      CHECK(as_rows(wb.monomials) == as_rows(wc.monomials));
      CHECK(wb.degree == wc.degree);
      // witness degree ties regularity
      CHECK(wc.degree + 1 == rc);
      // every max-degree standard monomial is in the socle
      for (const auto& u : wb.monomials) CHECK(is_socle_member(I, u));
      ++done;
    }
    CHECK(done == 120);
  }

  TEST_CASE("property: strategy agreement on powers") {
    testrng::SplitMix64 rng(0xD1CE);
    for (int trial = 0; trial < 25; ++trial) {
      auto I = random_primary(rng, 3, 4, 4);
      PowerCache cache(I);
      for (int m = 1; m <= 3; ++m) {
        auto P = power(I, m, cache);
        CHECK(regularity(P, Strategy::box) == regularity(P, Strategy::corner));
      }
    }
  }
}
