#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wienerdegen/graph.hpp"

namespace wdegen {

// Recipe for building a graph by repeated vertex addition on top of K_k.
// Step t (0-based) adds vertex base_order + t adjacent to exactly the k
// listed existing vertices. With clique_roots_required every root set
// must induce a clique at the moment the step runs, which is exactly the
// k-tree construction; without it any k distinct earlier vertices do,
// which yields the maximal k-degenerate graphs.
struct ConstructionTrace {
  int k = 0;
  int base_order = 0;  // must equal k
  bool clique_roots_required = false;
  std::vector<std::vector<int>> steps;
};

// Validates the trace (k >= 1, base_order == k, each step has k distinct
// in-range indices, clique roots when required) and builds the graph.
// construct_k_tree additionally insists clique_roots_required is set.
// Violations raise std::invalid_argument.
Graph construct_k_tree(const ConstructionTrace& trace);
Graph construct_maximal_k_degenerate(const ConstructionTrace& trace);

// k-th power of the path: vertices 0..n-1, edge iff |u - v| <= k.
// Requires n >= 1, k >= 1. For n <= k+1 this is K_n.
Graph power_of_path(int n, int k);

// Join: all of g, all of h (shifted by |g|), and every cross edge.
Graph join(const Graph& g, const Graph& h);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// Named graphs used by the extremal characterizations.
Graph star(int n);                   // K_{1,n-1}: center 0, leaves 1..n-1
Graph fan(int n);                    // path 0..n-2 joined with apex n-1
Graph tr2();                         // triangle 0,1,2 with 3->{0,1}, 4->{1,2}, 5->{0,2}
Graph t5();                          // order-5 tree, neither path nor star:
                                     // path 0-1-2-3 with pendant 4 on 1
Graph tree_join(const Graph& tree);  // tree + K1, apex gets the top label
Graph kk_join_empty(int n, int k);   // K_k + empty graph on n-k vertices
Graph order7_k3_join_k4bar();        // K_3 + complement of K_4
Graph order7_k2_join_t5();           // K_2 + t5
Graph order7_p5_join_k2();           // P_5 + K_2
Graph order7_k4_regions();           // K_4 on 0..3 with 4->{0,1,2}, 5->{0,1,3}, 6->{0,2,3}

// All triangulations of a convex n-gon (n >= 3), as labeled graphs on the
// cycle 0..n-1 plus diagonals; Catalan(n-2) of them, with repetition up to
// isomorphism. These are precisely the maximal outerplanar graphs, so the
// list serves as the constructive census of that family.
std::vector<Graph> polygon_triangulations(int n);

struct NamedGraphParams {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<Graph> tree;  // for "tree-join"
};

// Dispatcher used by the command-line generator. Accepted names:
//   pnk, complete, empty, path, cycle, star, fan, tr2, t5, tree-join,
//   kk-join-empty, order7-k3-join-k4bar, order7-k2-join-t5,
//   order7-p5-join-k2, order7-k4-regions
// Unknown names or missing parameters raise std::invalid_argument.
Graph named_graph(const std::string& name, const NamedGraphParams& params);
const std::vector<std::string>& named_graph_names();

}  // namespace wdegen
