#include <doctest.h>

#include <vector>

#include "core/defect.hpp"
#include "core/families.hpp"
#include "core/regularity.hpp"

using namespace regdef;

namespace {

std::vector<Exp> computed_defects(const ExampleSpec& spec, int m_max) {
  std::vector<Exp> out;
  for (const auto& row : defect_sequence(spec.ideal, m_max).rows) out.push_back(row.e);
  return out;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("fat-socle golden values") {
    auto spec = example_fat_socle();
    CHECK(regularity(spec.ideal) == 10);
    CHECK(regularity(*spec.companion) == 19);
    CHECK(regularity(power(spec.ideal, 2)) == 19);
    CHECK(computed_defects(spec, 3) == std::vector<Exp>{2, 3, 3});
    CHECK(spec.predicted == std::vector<Exp>{2, 3, 3});
  }

  TEST_CASE("increasing family matches its closed form") {
    for (auto [n, d, b] : {std::tuple<int, Exp, Exp>{3, 3, 1}, {4, 5, 1}, {4, 4, 2}}) {
      auto spec = example_increasing(n, d, b);
      const int m_max = spec.suggested_m_max;
      auto seq = computed_defects(spec, m_max);
      std::vector<Exp> expected = spec.predicted;
      while (static_cast<int>(expected.size()) < m_max) {
        expected.push_back(*spec.predicted_tail);
      }
      CHECK(seq == expected);
    }
  }

  TEST_CASE("increasing family closed-form constants") {
    auto spec = example_increasing(4, 5, 1);
    CHECK(spec.parameters["m0"] == 2);
    CHECK(spec.parameters["delta"] == 0);
    CHECK(spec.predicted == std::vector<Exp>{1, 2, 2});
    // delta < b always
    for (auto [n, d, b] : {std::tuple<int, Exp, Exp>{3, 3, 1}, {4, 4, 2}, {3, 4, 2}}) {
      auto s = example_increasing(n, d, b);
      CHECK(s.parameters["delta"].get<Exp>() < b);
    }
    CHECK_THROWS_AS((void)example_increasing(2, 2, 1), Error);  // b > n(d-1)-d
  }

  TEST_CASE("slow-decreasing family: computation arbitrates the published readings") {
    // Frozen regression values: the computed sequence starts one below the
    // published first entry and terminates at 0, i.e. e_m = (n-1)(d-2) - m.
    struct Case {
      int n;
      Exp d;
      std::vector<Exp> frozen;
    };
    const std::vector<Case> cases = {
        {3, 4, {3, 2, 1, 0, 0, 0}},
        {3, 5, {5, 4, 3, 2, 1, 0, 0, 0}},
        {4, 4, {5, 4, 3, 2, 1, 0, 0, 0}},
    };
    for (const auto& c : cases) {
      auto spec = example_slow_decreasing(c.n, c.d);
      auto seq = computed_defects(spec, static_cast<int>(c.frozen.size()));
      CHECK(seq == c.frozen);

      // both readings start at (n-1)(d-2); the computation starts one lower
      // with the same unit decrements, and realizes the terminal value 0
      CHECK(spec.predicted.front() == static_cast<Exp>(c.n - 1) * (c.d - 2));
      CHECK(spec.predicted_alt.front() == spec.predicted.front());
      CHECK(seq.front() == spec.predicted.front() - 1);
      for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i - 1] > 0) CHECK(seq[i] == seq[i - 1] - 1);
      }
      CHECK(seq.back() == 0);  // realizes the terminal value of the displayed reading
    }
  }

  TEST_CASE("slow-decreasing witness of the base ideal") {
    auto spec = example_slow_decreasing(3, 4);
    auto w = witness_set(spec.ideal);
    REQUIRE(w.monomials.size() == 1);
    CHECK(w.monomials[0] == Monomial({2, 2, 2}));  // x^{d-2} (prod z_i)^{d-2}
  }

  TEST_CASE("slow-decreasing variant with z powers raised to d") {
    // Frozen regression: constant from the start at n(d-1) - d; the
    // published constant n(d-1) - 1 does not match the computation.
    auto spec = example_slow_decreasing(3, 3, true);
    auto seq = computed_defects(spec, 4);
    CHECK(seq == std::vector<Exp>{3, 3, 3, 3});
    CHECK(seq.front() == 3 * (3 - 1) - 3);
    CHECK(spec.predicted.front() == 3 * (3 - 1) - 1);  // the published value

    auto spec2 = example_slow_decreasing(3, 4, true);
    auto seq2 = computed_defects(spec2, 3);
    CHECK(seq2 == std::vector<Exp>{5, 5, 5});
  }

  TEST_CASE("mixed family golden sequences") {
    auto a = example_mixed(4, 5, 1);
    CHECK(computed_defects(a, 6) == std::vector<Exp>{1, 2, 2, 1, 1, 1});
    CHECK(a.predicted == std::vector<Exp>{1, 2, 2, 1, 1, 1, 1, 1, 0, 0});

    auto b = example_mixed(4, 5, 2);
    CHECK(computed_defects(b, 4) == std::vector<Exp>{2, 3, 2, 2});

    auto c = example_mixed(4, 6, 2);
    CHECK(computed_defects(c, 4) == std::vector<Exp>{2, 4, 4, 3});
    CHECK(c.stable_defect_must_vanish);
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((void)example_mixed(2, 5, 1), Error);
    CHECK_THROWS_AS((void)example_slow_decreasing(3, 2), Error);
    CHECK_THROWS_AS((void)example_by_name("nope", {}), Error);
  }

  TEST_CASE("lookup by name") {
    auto spec = example_by_name("increasing", {{"n", 3}, {"d", 3}, {"b", 1}});
    CHECK(spec.name == "increasing");
    CHECK(example_by_name("fat-socle", {}).name == "fat-socle");
  }

  TEST_CASE("predictions are internally consistent") {
    for (const auto& spec :
         {example_fat_socle(), example_increasing(3, 3, 1), example_slow_decreasing(3, 4),
          example_mixed(4, 5, 1)}) {
      for (Exp e : spec.predicted) CHECK(e >= 0);
      if (spec.predicted_tail && !spec.predicted.empty()) {
        CHECK(spec.predicted.back() == *spec.predicted_tail);
      }
    }
  }
}
