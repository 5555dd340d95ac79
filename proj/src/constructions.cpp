#include "wienerdegen/constructions.hpp"

#include <algorithm>

namespace wdegen {

namespace {

void validate_trace(const ConstructionTrace& t) {
  if (t.k < 1) throw std::invalid_argument("trace: k must be positive");
  if (t.base_order != t.k) throw std::invalid_argument("trace: base order must equal k");
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& roots = t.steps[i];
    if (static_cast<int>(roots.size()) != t.k)
      throw std::invalid_argument("trace: step " + std::to_string(i) +
                                  " must list exactly k roots");
    const int limit = t.k + static_cast<int>(i);
    std::vector<int> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (sorted[j] < 0 || sorted[j] >= limit)
        throw std::invalid_argument("trace: step " + std::to_string(i) +
                                    " references a vertex not yet present");
      if (j > 0 && sorted[j] == sorted[j - 1])
        throw std::invalid_argument("trace: step " + std::to_string(i) +
                                    " repeats a root");
    }
  }
}

Graph build_trace(const ConstructionTrace& t) {
  validate_trace(t);
  const int n = t.k + static_cast<int>(t.steps.size());
  std::vector<std::pair<int, int>> edges;
  // Adjacency snapshot grows step by step so clique roots can be checked
  // against the graph as it stood when the step ran.
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  auto connect = [&](int u, int v) {
    adj[u][v] = adj[v][u] = 1;
    edges.emplace_back(u, v);
  };
  for (int u = 0; u < t.k; ++u)
    for (int v = u + 1; v < t.k; ++v) connect(u, v);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& roots = t.steps[i];
    if (t.clique_roots_required) {
      for (std::size_t a = 0; a < roots.size(); ++a)
        for (std::size_t b = a + 1; b < roots.size(); ++b)
          if (!adj[roots[a]][roots[b]])
            throw std::invalid_argument("trace: step " + std::to_string(i) +
                                        " roots do not form a clique");
    }
    const int v = t.k + static_cast<int>(i);
    for (int r : roots) connect(r, v);
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace

Graph construct_k_tree(const ConstructionTrace& trace) {
  if (!trace.clique_roots_required)
    throw std::invalid_argument("k-tree construction requires clique roots");
  return build_trace(trace);
}

Graph construct_maximal_k_degenerate(const ConstructionTrace& trace) {
  return build_trace(trace);
}

Graph power_of_path(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("power_of_path needs n >= 1, k >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n && v - u <= k; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  std::vector<std::pair<int, int>> edges = edges_of(g);
  for (auto [u, v] : edges_of(h)) edges.emplace_back(ng + u, ng + v);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) edges.emplace_back(u, ng + v);
  return Graph::from_edge_list(ng + nh, edges);
}

Graph complete_graph(int n) {
  if (n < 0) throw std::invalid_argument("negative order");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph empty_graph(int n) {
  if (n < 0) throw std::invalid_argument("negative order");
  return Graph::from_edge_list(n, {});
}

Graph path_graph(int n) { return power_of_path(n, 1); }

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs order >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edge_list(n, edges);
}

Graph star(int n) {
  if (n < 1) throw std::invalid_argument("star needs order >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edge_list(n, edges);
}

Graph fan(int n) {
  if (n < 2) throw std::invalid_argument("fan needs order >= 2");
  return join(path_graph(n - 1), complete_graph(1));
}

Graph tr2() {
  return Graph::from_edge_list(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 0}, {5, 2}});
}

Graph t5() {
  return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
}

Graph tree_join(const Graph& tree) {
  if (!tree.is_connected() || tree.edge_count() != tree.order() - 1)
    throw std::invalid_argument("tree_join needs a tree");
  return join(tree, complete_graph(1));
}

Graph kk_join_empty(int n, int k) {
  if (k < 1 || n < k) throw std::invalid_argument("kk_join_empty needs n >= k >= 1");
  return join(complete_graph(k), empty_graph(n - k));
}

Graph order7_k3_join_k4bar() { return join(complete_graph(3), empty_graph(4)); }
Graph order7_k2_join_t5() { return join(complete_graph(2), t5()); }
Graph order7_p5_join_k2() { return join(path_graph(5), complete_graph(2)); }

Graph order7_k4_regions() {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) edges.emplace_back(u, v);
  for (int r : {0, 1, 2}) edges.emplace_back(4, r);
  for (int r : {0, 1, 3}) edges.emplace_back(5, r);
  for (int r : {0, 2, 3}) edges.emplace_back(6, r);
  return Graph::from_edge_list(7, edges);
}

namespace {

using ChordList = std::vector<std::pair<int, int>>;

// Chord sets triangulating the sub-polygon on consecutive corners i..j
// (the side i-j itself is already closed). Picking the apex m of the
// triangle standing on i-j splits the rest into two smaller polygons.
std::vector<ChordList> polygon_rec(int i, int j) {
  if (j - i < 2) return {{}};
  std::vector<ChordList> out;
  for (int m = i + 1; m < j; ++m) {
    ChordList extra;
    if (m - i >= 2) extra.emplace_back(i, m);
    if (j - m >= 2) extra.emplace_back(m, j);
    for (const ChordList& left : polygon_rec(i, m)) {
      for (const ChordList& right : polygon_rec(m, j)) {
        ChordList full = extra;
        full.insert(full.end(), left.begin(), left.end());
        full.insert(full.end(), right.begin(), right.end());
        out.push_back(std::move(full));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Graph> polygon_triangulations(int n) {
  if (n < 3) throw std::invalid_argument("polygon needs order >= 3");
  std::vector<ChordList> chordsets = polygon_rec(0, n - 1);
  std::vector<Graph> out;
  out.reserve(chordsets.size());
  for (auto& chords : chordsets) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    edges.insert(edges.end(), chords.begin(), chords.end());
    out.push_back(Graph::from_edge_list(n, edges));
  }
  return out;
}

namespace {

int need(const std::optional<int>& v, const char* what) {
  if (!v) throw std::invalid_argument(std::string("missing parameter --") + what);
  return *v;
}

}  // namespace

Graph named_graph(const std::string& name, const NamedGraphParams& p) {
  if (name == "pnk") return power_of_path(need(p.n, "n"), need(p.k, "k"));
  if (name == "complete") return complete_graph(need(p.n, "n"));
  if (name == "empty") return empty_graph(need(p.n, "n"));
  if (name == "path") return path_graph(need(p.n, "n"));
  if (name == "cycle") return cycle_graph(need(p.n, "n"));
  if (name == "star") return star(need(p.n, "n"));
  if (name == "fan") return fan(need(p.n, "n"));
  if (name == "tr2") return tr2();
  if (name == "t5") return t5();
  if (name == "tree-join") {
    if (!p.tree) throw std::invalid_argument("tree-join needs --tree-file");
    return tree_join(*p.tree);
  }
  if (name == "kk-join-empty") return kk_join_empty(need(p.n, "n"), need(p.k, "k"));
  if (name == "order7-k3-join-k4bar") return order7_k3_join_k4bar();
  if (name == "order7-k2-join-t5") return order7_k2_join_t5();
  if (name == "order7-p5-join-k2") return order7_p5_join_k2();
  if (name == "order7-k4-regions") return order7_k4_regions();
  throw std::invalid_argument("unknown graph name: " + name);
}

const std::vector<std::string>& named_graph_names() {
  static const std::vector<std::string> names = {
      "pnk", "complete", "empty", "path", "cycle", "star", "fan", "tr2", "t5",
      "tree-join", "kk-join-empty", "order7-k3-join-k4bar", "order7-k2-join-t5",
      "order7-p5-join-k2", "order7-k4-regions"};
  return names;
}

}  // namespace wdegen
