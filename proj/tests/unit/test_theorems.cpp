#include <doctest.h>

#include <vector>

#include "core/families.hpp"
#include "core/monomial.hpp"
#include "core/regularity.hpp"
#include "core/theorems.hpp"

using namespace regdef;

namespace {

MonomialIdeal ideal(int vars, std::vector<std::vector<Exp>> rows) {
  std::vector<Monomial> gens;
  for (auto& r : rows) gens.emplace_back(std::move(r));
  return minimalize(vars, gens);
}

}  // namespace

TEST_SUITE("theorems") {
  TEST_CASE("first difference on the fat-socle pair at m = 2") {
    auto fat = example_fat_socle();
    PowerCache cache(fat.ideal);
    // witness mode: some witness of I^2 lies in J, the conclusion binds
    auto r = check_first_difference(fat.ideal, *fat.companion, 2,
                                    FirstDifferenceMode::witness_hypothesis, cache);
    CHECK(r.hypothesis_holds);
    REQUIRE(r.conclusion_holds.has_value());
    CHECK(*r.conclusion_holds);
    CHECK(r.quantities["difference"] == 1);
    CHECK(r.quantities["bound"] == 1);  // c - d = 9 - 8
    CHECK(r.passed());
    // regularity mode is vacuous here: reg I^2 equals reg J exactly
    auto rv = check_first_difference(fat.ideal, *fat.companion, 2,
                                     FirstDifferenceMode::regularity_hypothesis, cache);
    CHECK_FALSE(rv.hypothesis_holds);
    CHECK(rv.passed());
    // at m = 3 the regularity hypothesis binds again
    auto r3 = check_first_difference(fat.ideal, *fat.companion, 3,
                                     FirstDifferenceMode::regularity_hypothesis, cache);
    CHECK(r3.hypothesis_holds);
    CHECK(*r3.conclusion_holds);
  }

  TEST_CASE("first difference with J = I on an equigenerated ideal") {
    auto I = boxed_ideal({3, 3});
    PowerCache cache(I);
    for (int m = 2; m <= 4; ++m) {
      auto r = check_first_difference(I, I, m, FirstDifferenceMode::regularity_hypothesis, cache);
      CHECK(r.hypothesis_holds);  // reg I^m > reg I for m >= 2
      CHECK(*r.conclusion_holds); // e_m <= e_{m-1}
      CHECK(r.quantities["bound"] == 0);
    }
  }

  TEST_CASE("first difference rejects bad inputs") {
    auto I = boxed_ideal({2, 2});
    auto J = boxed_ideal({5, 5});  // not contained in I? actually J subset I; use reverse
    CHECK_THROWS_AS((void)check_first_difference(J, I, 2, FirstDifferenceMode::witness_hypothesis),
                    Error);
    CHECK_THROWS_AS((void)check_first_difference(I, I, 1, FirstDifferenceMode::witness_hypothesis),
                    Error);
  }

  TEST_CASE("difference bound on the fat-socle pair") {
    auto fat = example_fat_socle();
    PowerCache cache(fat.ideal);

    // m = 3: threshold min(19/8, 19/10 + max(1 - 8/10, 0)) = 21/10 crossed
    auto r3 = check_difference_bound(fat.ideal, *fat.companion, 3, false, cache);
    CHECK(r3.hypothesis_holds);
    CHECK(*r3.conclusion_holds);
    CHECK(r3.quantities["e_difference"] == 0);
    CHECK(r3.quantities["threshold"] == "21/10");

    // m = 2: threshold not crossed and the refined hypothesis fails too;
    // the witness set of J survives into the mixed product
    auto r2 = check_difference_bound(fat.ideal, *fat.companion, 2, true, cache);
    CHECK_FALSE(r2.hypothesis_holds);
    CHECK_FALSE(r2.conclusion_holds.has_value());
    CHECK(r2.quantities["refined_status"] == "contained");
    CHECK(r2.passed());  // vacuous
  }

  TEST_CASE("difference bound with J = I reports the infinite branch") {
    auto I = boxed_ideal({3, 3});
    auto r = check_difference_bound(I, I, 2, true);
    CHECK(r.quantities["d_prime"] == "inf");
    CHECK(r.quantities["refined_status"] == "inapplicable");
    // threshold becomes min(reg J / d, 1), so m = 2 crosses it
    CHECK(r.hypothesis_holds);
    CHECK(*r.conclusion_holds);
  }

  TEST_CASE("defect monotonicity on the increasing family achieves equality") {
    auto spec = example_increasing(3, 3, 1);
    auto r = check_defect_monotone(spec.ideal, 5);
    CHECK(r.hypothesis_holds);
    CHECK(*r.conclusion_holds);
    CHECK(r.quantities["b"] == 1);
  }

  TEST_CASE("defect monotonicity on mixed (4,5,1): threshold 13/6") {
    auto spec = example_mixed(4, 5, 1);
    auto r = check_defect_monotone(spec.ideal, 6);
    CHECK(*r.conclusion_holds);
    CHECK(r.quantities["threshold"] == "13/6");
  }

  TEST_CASE("defect monotonicity is unconditional for equigenerated ideals") {
    auto r = check_defect_monotone(boxed_ideal({2, 2, 2}), 5);
    CHECK(*r.conclusion_holds);
    CHECK(r.quantities["b_prime"] == "inf");
    CHECK(r.quantities["threshold"] == "0");
  }

  TEST_CASE("strict increase") {
    auto m = ideal(2, {{1, 0}, {0, 1}});
    auto r = check_strict_increase(m, 6);
    CHECK(*r.conclusion_holds);

    auto fat = check_strict_increase(example_fat_socle().ideal, 3);
    CHECK(*fat.conclusion_holds);
    CHECK(fat.quantities["regularities"] == nlohmann::json({10, 19, 27}));
  }

  TEST_CASE("socle descent") {
    auto I = ideal(2, {{2, 0}, {0, 2}});
    auto r = check_socle_descent(I, 2);
    CHECK(*r.conclusion_holds);
    CHECK(r.quantities["socle_size"] == 2);  // x^3 y and x y^3

    auto md = check_socle_descent(max_ideal_power(2, 3), 2);
    CHECK(*md.conclusion_holds);
  }

  TEST_CASE("witness comparison lemma example") {
    auto I = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
    auto J = ideal(2, {{3, 0}, {0, 3}});
    auto r = check_witness_comparison(I, J);
    CHECK(r.hypothesis_holds);
    CHECK(r.quantities["escaped_witness"] == "x2^2");
    CHECK(r.quantities["reg_I"] == 3);
    CHECK(r.quantities["reg_J"] == 5);
    CHECK(*r.conclusion_holds);

    // I = J: witnesses of I are witnesses of J, hypothesis vacuous
    auto same = check_witness_comparison(I, I);
    CHECK_FALSE(same.hypothesis_holds);
    CHECK(same.passed());
  }

  TEST_CASE("reduction bounds: strict upper bound fails on pure squares at m = 2") {
    auto I = ideal(2, {{2, 0}, {0, 2}});
    auto relaxed = check_reduction_bounds(I, 2, false);
    CHECK(relaxed.hypothesis_holds);
    CHECK(*relaxed.conclusion_holds);
    CHECK(relaxed.quantities["degree_upper_ok"] == true);
    CHECK(relaxed.quantities["degree_upper_strict_ok"] == false);
    CHECK(relaxed.quantities["strict_upper_violations"] == 2);

    auto strict = check_reduction_bounds(I, 2, true);
    CHECK(strict.hypothesis_holds);
    CHECK_FALSE(*strict.conclusion_holds);  // reported, not an error
    CHECK(strict.violation.has_value());
    CHECK_FALSE(strict.passed());
  }

  TEST_CASE("reduction bounds hold on the slow-decreasing family") {
    auto spec = example_slow_decreasing(3, 4);
    auto r = check_reduction_bounds(spec.ideal, 1, false);
    CHECK(*r.conclusion_holds);
    CHECK(r.quantities["residual_range_ok"] == true);
    CHECK(r.quantities["degree_lower_ok"] == true);
    CHECK(r.quantities["z_order_ok"] == true);
  }

  TEST_CASE("increase threshold on the slow-decreasing family") {
    // l = 1 collapses the threshold to (n-1)(d-2)
    auto spec = example_slow_decreasing(3, 4);
    PowerCache cache(spec.ideal);
    auto r = check_increase_threshold(spec.ideal, 5, cache);
    CHECK(r.quantities["threshold"] == 4);
    CHECK(r.hypothesis_holds);  // 5 > 4
    CHECK(*r.conclusion_holds);

    auto below = check_increase_threshold(spec.ideal, 2, cache);
    CHECK_FALSE(below.hypothesis_holds);  // decreasing part, vacuous
    CHECK(below.passed());
  }

  TEST_CASE("increase threshold on a complete intersection") {
    auto I = boxed_ideal({2, 2});
    PowerCache cache(I);
    for (int m = 1; m <= 3; ++m) {
      auto r = check_increase_threshold(I, m, cache);
      if (r.hypothesis_holds) CHECK(*r.conclusion_holds);
    }
  }

  TEST_CASE("stabilization bound on small ideals") {
    auto r = check_stabilization_bound(boxed_ideal({2, 2}), WorkBudget{});
    CHECK(r.hypothesis_holds);
    CHECK(*r.conclusion_holds);

    WorkBudget tiny;
    tiny.max_power = 1;
    auto skipped = check_stabilization_bound(example_slow_decreasing(3, 4).ideal, tiny);
    CHECK_FALSE(skipped.hypothesis_holds);
    CHECK(skipped.quantities["status"] == "skipped-budget");
  }

  TEST_CASE("stable defect zero characterization") {
    // mixed family: predicate true and stable defect zero
    auto spec = example_mixed(4, 5, 1);
    auto r = check_stable_defect_zero(spec.ideal, WorkBudget{});
    CHECK(r.hypothesis_holds);
    CHECK(r.quantities["predicate"] == true);
    CHECK(r.quantities["e_infinity"] == 0);
    CHECK(*r.conclusion_holds);

    // pure powers with n, d >= 2: x^{d-1} y escapes I, stable defect positive
    auto box = check_stable_defect_zero(boxed_ideal({3, 3}), WorkBudget{});
    CHECK(box.hypothesis_holds);
    CHECK(box.quantities["predicate"] == false);
    CHECK(box.quantities["e_infinity"].get<Exp>() > 0);
    CHECK(*box.conclusion_holds);

    // increasing family with b >= 1: predicate false, stable defect positive
    auto inc = check_stable_defect_zero(example_increasing(3, 3, 1).ideal, WorkBudget{});
    CHECK(inc.hypothesis_holds);
    CHECK(inc.quantities["predicate"] == false);
    CHECK(*inc.conclusion_holds);

    // budget starvation is inconclusive, not a failure
    WorkBudget tiny;
    tiny.max_power = 1;
    auto inconclusive = check_stable_defect_zero(example_mixed(4, 5, 1).ideal, tiny);
    CHECK_FALSE(inconclusive.hypothesis_holds);
    CHECK(inconclusive.quantities["status"] == "inconclusive");
    CHECK(inconclusive.passed());
  }

  TEST_CASE("binomial inequality at the published corners") {
    auto r42 = check_binomial_inequality(4, 2);
    CHECK(r42.quantities["lhs"] == 56);
    CHECK(r42.quantities["rhs"] == 64);
    CHECK(r42.quantities["holds"] == true);
    CHECK(*r42.conclusion_holds);

    auto r32 = check_binomial_inequality(3, 2);
    CHECK(r32.quantities["lhs"] == 15);
    CHECK(r32.quantities["rhs"] == 9);
    CHECK(r32.quantities["holds"] == false);
    CHECK(*r32.conclusion_holds);  // expected false for n = 3

    auto r25 = check_binomial_inequality(2, 5);
    CHECK(r25.quantities["lhs"] == 10);
    CHECK(r25.quantities["rhs"] == 0);
    CHECK(r25.quantities["holds"] == false);
    CHECK(*r25.conclusion_holds);

    CHECK_THROWS_AS((void)check_binomial_inequality(1, 2), Error);
  }

  TEST_CASE("binomial inequality over the acceptance grid") {
    for (Exp n = 2; n <= 8; ++n) {
      for (Exp d = 2; d <= 10; ++d) {
        auto r = check_binomial_inequality(n, d);
        CHECK(r.quantities["holds"] == (n >= 4));
        CHECK(*r.conclusion_holds);
      }
    }
  }

  TEST_CASE("violation payload appears exactly on hypothesis + failed conclusion") {
    auto I = ideal(2, {{2, 0}, {0, 2}});
    auto strict = check_reduction_bounds(I, 2, true);
    CHECK((strict.hypothesis_holds && !*strict.conclusion_holds));
    CHECK(strict.violation.has_value());

    auto relaxed = check_reduction_bounds(I, 2, false);
    CHECK_FALSE(relaxed.violation.has_value());
  }

  TEST_CASE("report serialization is stable") {
    auto r = check_binomial_inequality(4, 2);
    auto j = r.to_json();
    CHECK(j["type"] == "check_report");
    CHECK(j["name"] == "binomial-inequality");
    CHECK(j["passed"] == true);
    CHECK(j.dump() == r.to_json().dump());
  }
}
