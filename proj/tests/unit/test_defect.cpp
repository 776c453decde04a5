#include <doctest.h>

#include <vector>

#include "core/defect.hpp"
#include "core/families.hpp"
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

std::vector<Exp> defects(const DefectReport& r) {
  std::vector<Exp> out;
  for (const auto& row : r.rows) out.push_back(row.e);
  return out;
}

}  // namespace

TEST_SUITE("defect") {
  TEST_CASE("asymptotic degree is the maximal pure power") {
    CHECK(asymptotic_degree(sum(boxed_ideal({3, 3, 3}), max_ideal_power(3, 4))) == 3);
    CHECK(asymptotic_degree(example_fat_socle().ideal) == 8);
    CHECK(asymptotic_degree(example_mixed(4, 5, 2).ideal) == 5);
    CHECK_THROWS_AS((void)asymptotic_degree(ideal(2, {{1, 1}})), Error);
  }

  TEST_CASE("pure power profiles") {
    // slow-decreasing family: only the first variable reaches d
    auto slow = example_slow_decreasing(3, 4);
    auto p = pure_power_profile(slow.ideal);
    CHECK(p.d == 4);
    CHECK(p.x_var == 0);
    CHECK(p.l() == 1);
    CHECK(p.k() == 2);
    for (const auto& [z, dz] : p.z_vars) {
      CHECK(dz == 3);
      CHECK(z > 0);
    }

    auto box = boxed_ideal({4, 4, 4});
    auto pb = pure_power_profile(box);
    CHECK(pb.l() == 3);
    CHECK(pb.k() == 0);

    // mixed family: every variable reaches d through x_i^{d-1} x_i
    auto mixed = example_mixed(4, 5, 1);
    auto pm = pure_power_profile(mixed.ideal);
    CHECK(pm.l() == 4);
    CHECK(pm.k() == 0);

    // explicit distinguished-variable choice
    auto alt = pure_power_profile(box, 2);
    CHECK(alt.x_var == 2);
    CHECK_THROWS_AS((void)pure_power_profile(slow.ideal, 1), Error);
  }

  TEST_CASE("profile block ideals") {
    auto p = pure_power_profile(example_slow_decreasing(3, 4).ideal);
    CHECK(p.y_block().is_zero());
    auto z = p.z_block();
    CHECK(z.generator_count() == 2);
    CHECK(z.max_generator_degree() == 3);
  }

  TEST_CASE("monomial reduction") {
    auto I = ideal(2, {{2, 0}, {0, 2}});
    auto p = pure_power_profile(I);
    // x^3 y with m = 2
    auto r = reduce_monomial(Monomial({3, 1}), p, 2);
    CHECK(r.m_x == 1);
    CHECK(r.remainders == std::vector<Exp>{1, 1});
    CHECK(r.abar == Monomial({1, 1}));
    CHECK(r.a_x == Monomial({3, 1}));
    CHECK(r.ord_y == 0);
    CHECK(r.mbar == 1);

    // fully reduced input: mbar = m
    auto r2 = reduce_monomial(Monomial({1, 1}), p, 5);
    CHECK(r2.mbar == 5);

    // pure x power x^{dm}: abar = 1, mbar = 0
    auto r3 = reduce_monomial(Monomial({6, 0}), p, 3);
    CHECK(r3.m_x == 3);
    CHECK(r3.abar.is_unit());
    CHECK(r3.mbar == 0);
  }

  TEST_CASE("reduction cross-checks against ideal order") {
    testrng::SplitMix64 rng(0x90210);
    auto I = sum(boxed_ideal({3, 4, 2, 2}), max_ideal_power(4, 5));
    auto p = pure_power_profile(I);
    auto Y = p.y_block();
    auto Z = p.z_block();
    PowerCache yc(Y);
    PowerCache zc(Z);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Exp> e;
      for (int i = 0; i < 4; ++i) e.push_back(rng.range(0, 9));
      Monomial a{std::move(e)};
      auto r = reduce_monomial(a, p, 3);
      if (!Y.is_zero()) CHECK(r.ord_y == order(Y, a, yc));
      if (!Z.is_zero()) CHECK(r.ord_z == order(Z, a, zc));
      CHECK(r.m_x + r.ord_y + r.ord_z + r.mbar == 3);
    }
  }

  TEST_CASE("generator degree statistics") {
    auto fat = example_fat_socle();
    auto s = generator_degree_stats(fat.ideal, *fat.companion);
    CHECK(s.d == 8);
    CHECK(*s.c_prime == 8);
    CHECK(*s.c == 9);
    CHECK(*s.d_prime == 10);

    auto box = boxed_ideal({3, 3});
    auto sb = generator_degree_stats(box);
    CHECK(sb.b == 0);
    CHECK_FALSE(sb.b_prime.has_value());

    auto inc = example_increasing(3, 3, 1);
    auto si = generator_degree_stats(inc.ideal);
    CHECK(si.b == 1);
    CHECK(*si.b_prime == 1);

    // J = I: every generator of I lies in J, so d' is infinite
    auto self = generator_degree_stats(box, box);
    CHECK(self.d_prime_infinite);

    CHECK_THROWS_AS((void)generator_degree_stats(box, boxed_ideal({2, 2})), Error);
  }

  TEST_CASE("defect sequence of the maximal ideal is identically zero") {
    auto m = ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto r = defect_sequence(m, 6);
    CHECK(r.d == 1);
    CHECK(defects(r) == std::vector<Exp>{0, 0, 0, 0, 0, 0});
    for (const auto& row : r.rows) CHECK(row.reg == row.m);
  }

  TEST_CASE("defect sequence of the fat-socle ideal") {
    auto r = defect_sequence(example_fat_socle().ideal, 3);
    CHECK(defects(r) == std::vector<Exp>{2, 3, 3});
    CHECK(r.rows[0].reg == 10);
    CHECK(r.rows[1].reg == 19);
    CHECK(r.rows[2].reg == 27);
  }

  TEST_CASE("mu on the pure-square ideal") {
    auto I = ideal(2, {{2, 0}, {0, 2}});
    CHECK(mu(I, 2) == 1);
  }

  TEST_CASE("mu is m0 for the increasing family") {
    auto spec = example_increasing(3, 3, 1);
    PowerCache cache(spec.ideal);
    for (int m = 2; m <= 4; ++m) {
      CHECK(mu(spec.ideal, m, cache) == spec.parameters["m0"].get<Exp>());
    }
  }

  TEST_CASE("mu stays within the residual bounds") {
    testrng::SplitMix64 rng(0x7777);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = static_cast<int>(rng.range(2, 3));
      std::vector<Exp> pures;
      for (int i = 0; i < n; ++i) pures.push_back(rng.range(2, 4));
      std::vector<Monomial> gens;
      for (int i = 0; i < n; ++i) {
        std::vector<Exp> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = pures[static_cast<std::size_t>(i)];
        gens.emplace_back(std::move(e));
      }
      auto I = minimalize(n, gens);
      PowerCache cache(I);
      for (int m = 1; m <= 3; ++m) {
        const Exp v = mu(I, m, cache);
        CHECK(v >= 1);
        CHECK(v <= n - 1);
      }
    }
  }

  TEST_CASE("monotone threshold and stabilization bound") {
    // mixed (4,5,1): reg I_{<=5} = 13, so the threshold is 13/6
    auto spec = example_mixed(4, 5, 1);
    auto tau = monotone_threshold(spec.ideal);
    CHECK(tau == Rat(13, 6));
    CHECK(monotone_from(spec.ideal) == 3);

    // equigenerated: threshold collapses to zero
    CHECK(monotone_threshold(boxed_ideal({3, 3})) == Rat(0, 1));
    CHECK(monotone_from(boxed_ideal({3, 3})) == 1);

    // bound: max(n-1, (n-1)(l(d-1)-1))
    CHECK(stabilization_bound(boxed_ideal({2, 2})) == 1);
    CHECK(stabilization_bound(example_slow_decreasing(3, 4).ideal) == 4);
  }

  TEST_CASE("stable defect of a complete intersection certifies immediately") {
    auto I = boxed_ideal({2, 2});
    auto r = stable_defect(I);
    CHECK(r.certificate == StableCertificate::reached_theorem_bound);
    CHECK(*r.e_infinity == 1);  // n(d-1)+1-d
    CHECK(*r.certified_stable_from == 1);
  }

  TEST_CASE("stable defect of mixed (4,5,1) certifies zero at m = 9") {
    auto spec = example_mixed(4, 5, 1);
    auto r = stable_defect(spec.ideal);
    CHECK(r.certificate == StableCertificate::reached_zero_after_monotone_threshold);
    CHECK(*r.e_infinity == 0);
    CHECK(*r.certified_stable_from == 9);
    CHECK(defects(r) == std::vector<Exp>{1, 2, 2, 1, 1, 1, 1, 1, 0});
  }

  TEST_CASE("stable defect respects the work budget") {
    auto spec = example_mixed(4, 5, 1);
    WorkBudget tiny;
    tiny.max_power = 3;
    auto r = stable_defect(spec.ideal, tiny);
    CHECK(r.certificate == StableCertificate::uncertified);
    CHECK(r.budget_exhausted);
    CHECK(r.rows.size() == 3);

    WorkBudget starved;
    starved.max_generators = 10;
    auto r2 = stable_defect(spec.ideal, starved);
    CHECK(r2.certificate == StableCertificate::uncertified);
    CHECK(r2.budget_exhausted);
  }

  TEST_CASE("defect rows satisfy the growth window") {
    auto spec = example_increasing(3, 3, 1);
    auto stats = generator_degree_stats(spec.ideal);
    auto r = defect_sequence(spec.ideal, 5);
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
      const Exp jump = r.rows[i].reg - r.rows[i - 1].reg;
      CHECK(jump >= 1);
      CHECK(jump <= stats.d + stats.b);
    }
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS((void)defect_sequence(ideal(2, {{1, 1}}), 3), Error);
    CHECK_THROWS_AS((void)defect_sequence(boxed_ideal({2, 2}), 0), Error);
    CHECK_THROWS_AS((void)mu(boxed_ideal({2, 2}), 0), Error);
  }
}
