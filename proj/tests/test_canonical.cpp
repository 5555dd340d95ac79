#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support/oracles.hpp"
#include "wienerdegen/constructions.hpp"
#include "wienerdegen/enumeration.hpp"
#include "wienerdegen/graph.hpp"

using wdegen::CanonicalForm;
using wdegen::Graph;

namespace {

Graph random_relabeling(std::mt19937& rng, const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return wdegen::relabeled(g, perm);
}

}  // namespace

TEST_CASE("canonical form is relabeling-invariant") {
  std::mt19937 rng(64738u);
  std::vector<Graph> pool = {
      wdegen::power_of_path(8, 3), wdegen::tr2(),      wdegen::fan(7),
      wdegen::star(6),             wdegen::cycle_graph(9), wdegen::t5(),
      wdegen::kk_join_empty(8, 2), wdegen::order7_k4_regions()};
  for (int trial = 0; trial < 40; ++trial)
    pool.push_back(oracle::random_connected_graph(rng, 2 + rng() % 8, 0.45));
  for (const Graph& g : pool) {
    const CanonicalForm form = wdegen::canonical_form(g);
    for (int rep = 0; rep < 12; ++rep)
      CHECK(wdegen::canonical_form(random_relabeling(rng, g)) == form);
  }
}

TEST_CASE("every relabeling of K_4 and of a random graph canonicalizes alike") {
  const Graph base = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
  const CanonicalForm expected = wdegen::canonical_form(base);
  std::vector<int> perm = {0, 1, 2, 3};
  do {
    CHECK(wdegen::canonical_form(wdegen::relabeled(base, perm)) == expected);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const CanonicalForm k4 = wdegen::canonical_form(wdegen::complete_graph(4));
  perm = {0, 1, 2, 3};
  do {
    CHECK(wdegen::canonical_form(wdegen::relabeled(wdegen::complete_graph(4), perm)) == k4);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("canonical equality agrees with brute-force isomorphism") {
  std::mt19937 rng(24601u);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);  // up to 6: full agreement both ways
    const Graph a = oracle::random_connected_graph(rng, n, 0.5);
    const Graph b = oracle::random_connected_graph(rng, n, 0.5);
    const bool iso = oracle::brute_force_isomorphic(a, b);
    const bool same = wdegen::canonical_form(a) == wdegen::canonical_form(b);
    CHECK(iso == same);
  }
}

TEST_CASE("distinct canonical forms imply non-isomorphic at n = 7..8") {
  std::mt19937 rng(1337u);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 2);
    const Graph a = oracle::random_connected_graph(rng, n, 0.5);
    const Graph b = oracle::random_connected_graph(rng, n, 0.5);
    if (wdegen::canonical_form(a) == wdegen::canonical_form(b))
      CHECK(oracle::brute_force_isomorphic(a, b));
    else
      CHECK_FALSE(oracle::brute_force_isomorphic(a, b));
  }
}

TEST_CASE("graph_from_canonical inverts canonical_form up to isomorphism") {
  std::mt19937 rng(8086u);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 2 + rng() % 7, 0.4);
    const CanonicalForm form = wdegen::canonical_form(g);
    const Graph rebuilt = wdegen::graph_from_canonical(form);
    CHECK(rebuilt.order() == g.order());
    CHECK(rebuilt.edge_count() == g.edge_count());
    // Reconstruction is already canonically labeled: a fixed point.
    CHECK(wdegen::canonical_form(rebuilt) == form);
    CHECK(oracle::brute_force_isomorphic(g, rebuilt));
  }
}

TEST_CASE("canonical form separates same-size non-isomorphic graphs") {
  // C_6 vs two triangles: same order, size, degree sequence.
  const Graph c6 = wdegen::cycle_graph(6);
  const Graph triangles =
      Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(wdegen::canonical_form(c6) == wdegen::canonical_form(triangles));
  // K_{3,3} vs prism: 3-regular order 6.
  const Graph k33 = wdegen::join(wdegen::empty_graph(3), wdegen::empty_graph(3));
  const Graph prism = Graph::from_edge_list(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK_FALSE(wdegen::canonical_form(k33) == wdegen::canonical_form(prism));
  std::mt19937 rng(5u);
  CHECK(wdegen::canonical_form(k33) ==
        wdegen::canonical_form(random_relabeling(rng, k33)));
}

TEST_CASE("highly symmetric graphs stay within budget") {
  // Complete and empty graphs are the worst case for naive search; the twin
  // rule collapses them.
  for (int n : {8, 16, 24, 32}) {
    CHECK(wdegen::canonical_form(wdegen::complete_graph(n)).edges == n * (n - 1) / 2);
    CHECK(wdegen::canonical_form(wdegen::empty_graph(n)).edges == 0);
    CHECK(wdegen::canonical_form(wdegen::kk_join_empty(n, 3)).order == n);
  }
}

TEST_CASE("order cap") {
  CHECK_NOTHROW(wdegen::canonical_form(wdegen::power_of_path(32, 2)));
  CHECK_THROWS_AS(wdegen::canonical_form(wdegen::power_of_path(33, 2)),
                  wdegen::BudgetError);
}

TEST_CASE("canonical forms order by (order, edges, bytes)") {
  const CanonicalForm small = wdegen::canonical_form(wdegen::path_graph(3));
  const CanonicalForm big = wdegen::canonical_form(wdegen::path_graph(4));
  CHECK(small < big);
  const CanonicalForm sparse = wdegen::canonical_form(wdegen::path_graph(4));
  const CanonicalForm dense = wdegen::canonical_form(wdegen::complete_graph(4));
  CHECK(sparse < dense);
}
