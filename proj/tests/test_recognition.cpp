#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "wienerdegen/constructions.hpp"
#include "wienerdegen/distance.hpp"
#include "wienerdegen/graph.hpp"
#include "wienerdegen/recognition.hpp"

using wdegen::Graph;

namespace {

// Replays an elimination certificate from scratch: removes vertices in the
// listed order and confirms the recorded removal degrees (and, for
// perfect-elimination certificates, that each removed vertex's remaining
// neighborhood is a clique).
void replay(const Graph& g, const wdegen::EliminationCertificate& cert) {
  const int n = g.order();
  REQUIRE(static_cast<int>(cert.order.size()) == n);
  REQUIRE(cert.degrees_at_removal.size() == cert.order.size());
  std::vector<bool> alive(n, true);
  for (std::size_t i = 0; i < cert.order.size(); ++i) {
    const int v = cert.order[i];
    REQUIRE(alive[v]);
    std::vector<int> live_nbrs;
    for (int w : g.neighbors(v))
      if (alive[w]) live_nbrs.push_back(w);
    CHECK(static_cast<int>(live_nbrs.size()) == cert.degrees_at_removal[i]);
    if (cert.kind == wdegen::CertificateKind::perfect_elimination) {
      for (std::size_t a = 0; a < live_nbrs.size(); ++a)
        for (std::size_t b = a + 1; b < live_nbrs.size(); ++b)
          CHECK(g.has_edge(live_nbrs[a], live_nbrs[b]));
    }
    alive[v] = false;
  }
}

// First-principles maximality: g is maximal k-degenerate iff it is
// k-degenerate and adding any missing edge pushes the degeneracy past k.
bool maximal_by_edge_trials(const Graph& g, int k) {
  if (wdegen::degeneracy(g).degeneracy > k) return false;
  auto edges = wdegen::edges_of(g);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) continue;
      edges.emplace_back(u, v);
      const Graph bigger = Graph::from_edge_list(g.order(), edges);
      edges.pop_back();
      if (wdegen::degeneracy(bigger).degeneracy <= k) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("degeneracy of known graphs") {
  CHECK(wdegen::degeneracy(wdegen::path_graph(7)).degeneracy == 1);
  CHECK(wdegen::degeneracy(wdegen::star(9)).degeneracy == 1);
  CHECK(wdegen::degeneracy(wdegen::cycle_graph(6)).degeneracy == 2);
  CHECK(wdegen::degeneracy(wdegen::complete_graph(5)).degeneracy == 4);
  CHECK(wdegen::degeneracy(wdegen::empty_graph(4)).degeneracy == 0);
  CHECK(wdegen::degeneracy(wdegen::power_of_path(9, 3)).degeneracy == 3);
  const Graph petersen = Graph::from_edge_list(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 7}, {7, 9}, {9, 6},
           {6, 8}, {8, 5}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  CHECK(wdegen::degeneracy(petersen).degeneracy == 3);
}

TEST_CASE("degeneracy certificates replay") {
  std::mt19937 rng(4242u);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_connected_graph(rng, n, 0.4);
    const wdegen::DegeneracyResult res = wdegen::degeneracy(g);
    replay(g, res.certificate);
    int max_removal = 0;
    for (int d : res.certificate.degrees_at_removal) max_removal = std::max(max_removal, d);
    CHECK(max_removal == res.degeneracy);
  }
}

TEST_CASE("maximal k-degenerate recognition vs edge-trial oracle") {
  std::mt19937 rng(5150u);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_connected_graph(rng, n, 0.5);
    for (int k = 1; k <= n; ++k)
      CHECK(wdegen::is_maximal_k_degenerate(g, k) == maximal_by_edge_trials(g, k));
  }
}

TEST_CASE("maximal k-degenerate knowns") {
  CHECK(wdegen::is_maximal_k_degenerate(wdegen::path_graph(6), 1));
  CHECK(wdegen::is_maximal_k_degenerate(wdegen::star(7), 1));
  CHECK_FALSE(wdegen::is_maximal_k_degenerate(wdegen::cycle_graph(6), 1));
  CHECK_FALSE(wdegen::is_maximal_k_degenerate(wdegen::cycle_graph(6), 2));
  CHECK(wdegen::is_maximal_k_degenerate(wdegen::power_of_path(8, 2), 2));
  CHECK(wdegen::is_maximal_k_degenerate(wdegen::complete_graph(4), 4));
  CHECK(wdegen::is_maximal_k_degenerate(wdegen::complete_graph(4), 3));
  CHECK_FALSE(wdegen::is_maximal_k_degenerate(wdegen::complete_graph(4), 2));
  CHECK_THROWS_AS(wdegen::is_maximal_k_degenerate(wdegen::complete_graph(3), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(wdegen::is_maximal_k_degenerate(wdegen::path_graph(3), 0),
                  std::invalid_argument);
}

TEST_CASE("chordality") {
  CHECK(wdegen::is_chordal(wdegen::path_graph(8)));
  CHECK(wdegen::is_chordal(wdegen::complete_graph(6)));
  CHECK(wdegen::is_chordal(wdegen::power_of_path(9, 3)));
  CHECK(wdegen::is_chordal(wdegen::empty_graph(3)));
  CHECK_FALSE(wdegen::is_chordal(wdegen::cycle_graph(4)));
  CHECK_FALSE(wdegen::is_chordal(wdegen::cycle_graph(6)));
  // C_4 plus one chord is chordal.
  CHECK(wdegen::is_chordal(Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})));

  const auto cert = wdegen::chordal_certificate(wdegen::power_of_path(8, 2));
  REQUIRE(cert.has_value());
  CHECK(cert->kind == wdegen::CertificateKind::perfect_elimination);
  replay(wdegen::power_of_path(8, 2), *cert);
  CHECK_FALSE(wdegen::chordal_certificate(wdegen::cycle_graph(5)).has_value());
}

TEST_CASE("k-tree recognition") {
  CHECK(wdegen::is_k_tree(wdegen::path_graph(5), 1));
  CHECK(wdegen::is_k_tree(wdegen::power_of_path(9, 2), 2));
  CHECK(wdegen::is_k_tree(wdegen::power_of_path(9, 4), 4));
  CHECK(wdegen::is_k_tree(wdegen::complete_graph(3), 3));
  CHECK(wdegen::is_k_tree(wdegen::tr2(), 2));
  CHECK_FALSE(wdegen::is_k_tree(wdegen::cycle_graph(5), 2));
  // Maximal 2-degenerate but not chordal: not a 2-tree.
  const Graph not_chordal = wdegen::construct_maximal_k_degenerate(
      {.k = 2, .base_order = 2, .clique_roots_required = false,
       .steps = {{0, 1}, {0, 2}, {1, 3}}});
  CHECK(wdegen::is_maximal_k_degenerate(not_chordal, 2));
  CHECK_FALSE(wdegen::is_chordal(not_chordal));
  CHECK_FALSE(wdegen::is_k_tree(not_chordal, 2));
}

TEST_CASE("diameter-2 2-tree classification") {
  using wdegen::TwoTreeKind;
  // Fan P_5 + K_1: a tree join; its path has interior vertices of degree 3,
  // so no rooted-triangle reading exists.
  const auto fan6 = wdegen::classify_2tree_diam2(wdegen::fan(6));
  CHECK(fan6.kind == TwoTreeKind::tree_join);
  REQUIRE(fan6.joined_tree.has_value());
  CHECK(fan6.joined_tree->edge_count() == 4);
  CHECK(oracle::tree_certificate(*fan6.joined_tree) ==
        oracle::tree_certificate(wdegen::path_graph(5)));

  // Tr_2 has no dominating vertex: rooted triangle only.
  const auto trg = wdegen::classify_2tree_diam2(wdegen::tr2());
  CHECK(trg.kind == TwoTreeKind::k3_rooted);
  CHECK_FALSE(trg.joined_tree.has_value());

  // The diamond K_4 - e reads both ways.
  const auto diamond = wdegen::classify_2tree_diam2(wdegen::power_of_path(4, 2));
  CHECK(diamond.kind == TwoTreeKind::both);

  // Book K_2 + empty: both (tree join of a star; triangle with degree-2 pages).
  const auto book = wdegen::classify_2tree_diam2(wdegen::kk_join_empty(6, 2));
  CHECK(book.kind == TwoTreeKind::both);

  // P_5^2 has diameter 2 and both readings.
  const auto p52 = wdegen::classify_2tree_diam2(wdegen::power_of_path(5, 2));
  CHECK(p52.kind == TwoTreeKind::both);

  CHECK_THROWS_AS(wdegen::classify_2tree_diam2(wdegen::power_of_path(6, 2)),
                  std::invalid_argument);  // diameter 3
  CHECK_THROWS_AS(wdegen::classify_2tree_diam2(wdegen::cycle_graph(5)),
                  std::invalid_argument);  // not a 2-tree
  CHECK_THROWS_AS(wdegen::classify_2tree_diam2(wdegen::complete_graph(3)),
                  std::invalid_argument);  // diameter 1
}

TEST_CASE("every k-tree is maximal k-degenerate and chordal") {
  for (int k = 1; k <= 4; ++k)
    for (int n = k; n <= k + 5; ++n) {
      const Graph g = wdegen::power_of_path(n, k);
      CHECK(wdegen::is_k_tree(g, k));
      CHECK(wdegen::is_maximal_k_degenerate(g, k));
      CHECK(wdegen::is_chordal(g));
    }
}
