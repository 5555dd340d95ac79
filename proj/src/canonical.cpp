#include <algorithm>
#include <numeric>
#include <utility>

#include "wienerdegen/distance.hpp"
#include "wienerdegen/enumeration.hpp"

namespace wdegen {

namespace {

// Dense-ranks arbitrary ordered keys; equal keys share a color and colors
// follow key order, which keeps the cell ordering label-independent.
template <typename Key>
std::pair<std::vector<int>, int> rank_keys(std::vector<Key>& keys) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> colors(n, 0);
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && keys[idx[i - 1]] < keys[idx[i]]) ++rank;
    colors[idx[i]] = rank;
  }
  return {std::move(colors), n == 0 ? 0 : rank + 1};
}

// Classic color refinement: replace each color with (color, sorted
// multiset of neighbor colors) until the partition stops splitting.
std::pair<std::vector<int>, int> refine(const Graph& g, std::vector<int> colors,
                                        int num_colors) {
  const int n = g.order();
  while (num_colors < n) {
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) {
      auto& key = keys[v];
      key.reserve(g.degree(v) + 1);
      key.push_back(colors[v]);
      for (int u : g.neighbors(v)) key.push_back(colors[u]);
      std::sort(key.begin() + 1, key.end());
    }
    auto [next, count] = rank_keys(keys);
    if (count == num_colors) break;
    colors = std::move(next);
    num_colors = count;
  }
  return {std::move(colors), num_colors};
}

std::pair<std::vector<int>, int> initial_coloring(const Graph& g) {
  const int n = g.order();
  const DistanceSummary d = distances(g);
  std::vector<std::vector<int>> keys(n);
  for (int v = 0; v < n; ++v) {
    auto& key = keys[v];
    key.reserve(n + 1);
    key.push_back(g.degree(v));
    for (int u = 0; u < n; ++u) key.push_back(d.at(v, u));
    std::sort(key.begin() + 1, key.end());
  }
  auto [colors, count] = rank_keys(keys);
  return refine(g, std::move(colors), count);
}

// Swapping u and v is an automorphism whenever their adjacency rows agree
// outside {u, v} (same neighborhood, or same closed neighborhood). Among
// branch candidates such vertices yield identical subtree minima, so all
// but one can be dropped. This is what keeps joins with large clique or
// independent parts (all mutual twins) linear instead of factorial.
bool twin_pair(const Graph& g, int u, int v) {
  auto ru = g.row(u);
  auto rv = g.row(v);
  const int words = g.row_words();
  for (int w = 0; w < words; ++w) {
    std::uint64_t a = ru[w], b = rv[w];
    if (w == (u >> 6)) {
      a &= ~(std::uint64_t{1} << (u & 63));
      b &= ~(std::uint64_t{1} << (u & 63));
    }
    if (w == (v >> 6)) {
      a &= ~(std::uint64_t{1} << (v & 63));
      b &= ~(std::uint64_t{1} << (v & 63));
    }
    if (a != b) return false;
  }
  return true;
}

constexpr long kSearchNodeBudget = 4'000'000;

struct CanonicalSearch {
  const Graph& g;
  int n;
  std::vector<std::uint8_t> best;
  bool have_best = false;
  long nodes = 0;

  explicit CanonicalSearch(const Graph& graph) : g(graph), n(graph.order()) {}

  void leaf(const std::vector<int>& colors) {
    std::vector<int> vertex_at(n);
    for (int v = 0; v < n; ++v) vertex_at[colors[v]] = v;
    std::vector<std::uint8_t> bytes((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, 0);
    std::size_t bit = 0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q, ++bit) {
        if (g.has_edge(vertex_at[p], vertex_at[q]))
          bytes[bit >> 3] |= static_cast<std::uint8_t>(0x80u >> (bit & 7));
      }
    }
    if (!have_best || bytes < best) {
      best = std::move(bytes);
      have_best = true;
    }
  }

  void dfs(const std::vector<int>& colors, int num_colors) {
    if (++nodes > kSearchNodeBudget)
      throw BudgetError("canonical form search exceeded its node budget");
    if (num_colors == n) {
      leaf(colors);
      return;
    }
    // Target the first cell with at least two members; the color ranks
    // are label-independent, so this choice is too.
    std::vector<int> cell_count(num_colors, 0);
    for (int v = 0; v < n; ++v) ++cell_count[colors[v]];
    int target = 0;
    while (cell_count[target] < 2) ++target;
    std::vector<int> cell;
    for (int v = 0; v < n; ++v)
      if (colors[v] == target) cell.push_back(v);

    std::vector<int> kept;
    for (int v : cell) {
      bool duplicate = false;
      for (int u : kept) {
        if (twin_pair(g, u, v)) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) kept.push_back(v);
    }

    for (int v : kept) {
      std::vector<int> child(colors);
      // Split v off at the front of its cell, keeping all other colors in
      // their current order.
      for (int u = 0; u < n; ++u) child[u] = child[u] * 2 + (u == v ? 0 : 1);
      auto [ranked, count] = rank_keys(child);
      auto [refined, refined_count] = refine(g, std::move(ranked), count);
      dfs(refined, refined_count);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalOrderLimit)
    throw BudgetError("canonical form limited to order " +
                      std::to_string(kCanonicalOrderLimit));
  CanonicalForm form;
  form.order = n;
  form.edges = g.edge_count();
  if (n <= 1) return form;
  auto [colors, count] = initial_coloring(g);
  CanonicalSearch search(g);
  search.dfs(colors, count);
  form.bytes = std::move(search.best);
  return form;
}

Graph graph_from_canonical(const CanonicalForm& form) {
  const int n = form.order;
  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q, ++bit) {
      if (form.bytes[bit >> 3] & (0x80u >> (bit & 7))) edges.emplace_back(p, q);
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace wdegen
