#include <doctest.h>

#include <algorithm>
#include <set>

#include "support/oracles.hpp"
#include "wienerdegen/bounds.hpp"
#include "wienerdegen/constructions.hpp"
#include "wienerdegen/distance.hpp"
#include "wienerdegen/enumeration.hpp"
#include "wienerdegen/recognition.hpp"

using wdegen::EnumerationOptions;
using wdegen::EnumerationSummary;
using wdegen::Graph;
using wdegen::GraphClass;

TEST_CASE("tree censuses match the subset-filter oracle") {
  // k = 1 in either class enumerates unlabeled trees.
  for (int n = 1; n <= 8; ++n) {
    const long expected = oracle::tree_count_by_filter(n);
    CHECK(wdegen::enumerate_k_trees(n, 1).count == expected);
    CHECK(wdegen::enumerate_maximal_k_degenerate(n, 1).count == expected);
  }
}

TEST_CASE("tree censuses at n = 9, 10 match the known values") {
  CHECK(wdegen::enumerate_maximal_k_degenerate(9, 1).count == 47);
  CHECK(wdegen::enumerate_maximal_k_degenerate(10, 1).count == 106);
}

TEST_CASE("2-tree censuses") {
  const long expected[] = {1, 1, 1, 2, 5, 12, 39, 136};  // n = 2..9
  for (int n = 2; n <= 9; ++n)
    CHECK(wdegen::enumerate_k_trees(n, 2).count == expected[n - 2]);
}

TEST_CASE("labeled 2-tree count certifies the unlabeled census") {
  // Sum over representatives of n!/|Aut| must equal the labeled count,
  // which is computed two independent ways: subset filtration and the
  // closed form C(n,2) * (2n-3)^(n-4).
  for (int n : {6, 7}) {
    const auto levels = wdegen::enumerate_levels(n, 2, GraphClass::k_tree);
    std::int64_t factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    std::int64_t labeled_from_reps = 0;
    for (const wdegen::ClassRep& rep : levels[n - 2])
      labeled_from_reps += factorial / oracle::automorphism_count(rep.graph);
    std::int64_t closed_form = n * (n - 1) / 2;
    for (int i = 0; i < n - 4; ++i) closed_form *= 2 * n - 3;
    CHECK(labeled_from_reps == closed_form);
    CHECK(labeled_from_reps == oracle::labeled_two_tree_count(n));
  }
}

TEST_CASE("3-tree censuses") {
  const long expected[] = {1, 1, 1, 2, 5, 15};  // n = 3..8
  for (int n = 3; n <= 8; ++n)
    CHECK(wdegen::enumerate_k_trees(n, 3).count == expected[n - 3]);
  // Orbit certification at n = 8 against the labeled closed form
  // C(8,3) * 16^3 = 229376.
  const auto levels = wdegen::enumerate_levels(8, 3, GraphClass::k_tree);
  std::int64_t labeled = 0;
  for (const wdegen::ClassRep& rep : levels[8 - 3])
    labeled += 40320 / oracle::automorphism_count(rep.graph);
  CHECK(labeled == 229376);
}

TEST_CASE("every enumerated graph is in its class, exactly once") {
  const auto levels = wdegen::enumerate_levels(7, 2, GraphClass::maximal_k_degenerate);
  std::set<wdegen::CanonicalForm> seen;
  for (const auto& level : levels)
    for (const wdegen::ClassRep& rep : level) {
      CHECK(wdegen::is_maximal_k_degenerate(rep.graph, 2));
      CHECK(wdegen::canonical_form(rep.graph) == rep.form);
      CHECK(seen.insert(rep.form).second);
    }
  // Levels are sorted by form.
  for (const auto& level : levels)
    CHECK(std::is_sorted(level.begin(), level.end(),
                         [](const wdegen::ClassRep& a, const wdegen::ClassRep& b) {
                           return a.form < b.form;
                         }));
}

TEST_CASE("maximal 2-degenerate at order 5: the three classes") {
  const EnumerationSummary s = wdegen::enumerate_maximal_k_degenerate(5, 2);
  CHECK(s.count == 3);
  // Two of them are the 2-trees; the third contains an induced 4-cycle.
  const auto levels = wdegen::enumerate_levels(5, 2, GraphClass::maximal_k_degenerate);
  int chordal = 0, non_chordal = 0;
  for (const wdegen::ClassRep& rep : levels[3])
    (wdegen::is_chordal(rep.graph) ? chordal : non_chordal) += 1;
  CHECK(chordal == 2);
  CHECK(non_chordal == 1);
  CHECK(wdegen::enumerate_k_trees(5, 2).count == 2);
}

TEST_CASE("k-trees are a subset of maximal k-degenerate graphs") {
  for (int k : {2, 3})
    for (int n = k; n <= k + 4; ++n) {
      const auto ktrees = wdegen::enumerate_levels(n, k, GraphClass::k_tree);
      const auto mkd = wdegen::enumerate_levels(n, k, GraphClass::maximal_k_degenerate);
      std::set<wdegen::CanonicalForm> pool;
      for (const wdegen::ClassRep& rep : mkd[n - k]) pool.insert(rep.form);
      for (const wdegen::ClassRep& rep : ktrees[n - k]) {
        CHECK(wdegen::is_chordal(rep.graph));
        CHECK(pool.count(rep.form) == 1);
      }
    }
}

TEST_CASE("summary fields are internally consistent") {
  const EnumerationSummary s = wdegen::enumerate_maximal_k_degenerate(8, 2);
  CHECK(s.n == 8);
  CHECK(s.k == 2);
  CHECK(s.wiener_min == wdegen::lower_bound(8, 2));
  CHECK(s.wiener_max == wdegen::upper_bound_sum(8, 2));
  CHECK_FALSE(s.minimizers.empty());
  CHECK_FALSE(s.maximizers.empty());
  std::int64_t histogram_total = 0;
  for (auto [diameter, count] : s.diameter_histogram) {
    CHECK(diameter >= 1);
    // Maximal k-degenerate graphs have diameter at most D + 1.
    CHECK(diameter <= (8 - 2) / 2 + 1);
    histogram_total += count;
  }
  CHECK(histogram_total == s.count);
}

TEST_CASE("extremal census cross-checks the bounds") {
  for (int n = 2; n <= 9; ++n) {
    const EnumerationSummary s =
        wdegen::extremal_census(n, 2, GraphClass::maximal_k_degenerate);
    CHECK(s.wiener_min == wdegen::lower_bound(n, 2));
    if (n >= 2) CHECK(s.wiener_max == wdegen::upper_bound_sum(n, 2));
  }
  // The path power is always among the maximizers.
  const EnumerationSummary s = wdegen::extremal_census(9, 2, GraphClass::k_tree);
  REQUIRE(s.maximizers.size() == 1);
  CHECK(s.maximizers.front() == wdegen::canonical_form(wdegen::power_of_path(9, 2)));
}

TEST_CASE("worker count does not change results") {
  EnumerationOptions one;
  one.workers = 1;
  EnumerationOptions three;
  three.workers = 3;
  CHECK(wdegen::enumerate_maximal_k_degenerate(8, 2, one) ==
        wdegen::enumerate_maximal_k_degenerate(8, 2, three));
  CHECK(wdegen::enumerate_k_trees(9, 3, one) == wdegen::enumerate_k_trees(9, 3, three));
}

TEST_CASE("ceilings and budget errors") {
  CHECK(wdegen::default_ceiling(1) == 16);
  CHECK(wdegen::default_ceiling(2) == 12);
  CHECK(wdegen::default_ceiling(3) == 11);
  CHECK_THROWS_AS(wdegen::enumerate_k_trees(13, 2), wdegen::BudgetError);
  CHECK_THROWS_AS(wdegen::enumerate_maximal_k_degenerate(17, 1), wdegen::BudgetError);
  // An explicit ceiling unlocks the order; count from the published
  // unlabeled 2-tree sequence (..., 529, 2171, 9368, 41534 at n = 10..13).
  EnumerationOptions opts;
  opts.ceiling = 13;
  opts.workers = 4;
  CHECK(wdegen::enumerate_k_trees(13, 2, opts).count == 41534);
  CHECK_THROWS_AS(wdegen::enumerate_k_trees(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(wdegen::enumerate_k_trees(1, 2), std::invalid_argument);
}
