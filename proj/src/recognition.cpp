#include "wienerdegen/recognition.hpp"

#include <algorithm>
#include <bit>

#include "wienerdegen/distance.hpp"

namespace wdegen {

DegeneracyResult degeneracy(const Graph& g) {
  const int n = g.order();
  DegeneracyResult res;
  res.certificate.kind = CertificateKind::degeneracy;
  if (n == 0) return res;

  std::vector<int> deg(n);
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    maxdeg = std::max(maxdeg, deg[v]);
  }
  // Bucket queue keyed by current degree; stale entries are skipped.
  std::vector<std::vector<int>> bucket(maxdeg + 1);
  for (int v = 0; v < n; ++v) bucket[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  int cursor = 0;
  for (int step = 0; step < n; ++step) {
    cursor = std::min(cursor, maxdeg);
    int v = -1;
    for (int d = cursor; d <= maxdeg; ++d) {
      auto& b = bucket[d];
      while (!b.empty()) {
        const int u = b.back();
        if (removed[u] || deg[u] != d) {
          b.pop_back();
          continue;
        }
        v = u;
        b.pop_back();
        cursor = d;
        break;
      }
      if (v >= 0) break;
    }
    removed[v] = 1;
    res.degeneracy = std::max(res.degeneracy, deg[v]);
    res.certificate.order.push_back(v);
    res.certificate.degrees_at_removal.push_back(deg[v]);
    for (int u : g.neighbors(v)) {
      if (removed[u]) continue;
      bucket[--deg[u]].push_back(u);
      cursor = std::min(cursor, deg[u]);
    }
  }
  return res;
}

bool is_maximal_k_degenerate(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const std::int64_t n = g.order();
  if (n < k) throw std::invalid_argument("maximal k-degenerate test needs order >= k");
  const std::int64_t expected = k * n - static_cast<std::int64_t>(k) * (k + 1) / 2;
  if (g.edge_count() != expected) return false;
  return degeneracy(g).degeneracy <= k;
}

std::optional<EliminationCertificate> chordal_certificate(const Graph& g) {
  const int n = g.order();
  const int words = g.row_words();
  EliminationCertificate cert;
  cert.kind = CertificateKind::perfect_elimination;
  std::vector<std::uint64_t> alive(words, 0);
  for (int v = 0; v < n; ++v) alive[v >> 6] |= std::uint64_t{1} << (v & 63);
  std::vector<std::uint64_t> nb(words), probe(words);

  for (int step = 0; step < n; ++step) {
    int found = -1;
    for (int v = 0; v < n && found < 0; ++v) {
      if (!((alive[v >> 6] >> (v & 63)) & 1u)) continue;
      auto rv = g.row(v);
      int degv = 0;
      for (int w = 0; w < words; ++w) {
        nb[w] = rv[w] & alive[w];
        degv += std::popcount(nb[w]);
      }
      // Simplicial: every surviving neighbor u must cover nb minus u.
      bool simplicial = true;
      for (int w = 0; w < words && simplicial; ++w) {
        std::uint64_t bits = nb[w];
        while (bits) {
          const int u = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          auto ru = g.row(u);
          for (int x = 0; x < words; ++x) probe[x] = nb[x] & ~ru[x];
          probe[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
          for (int x = 0; x < words; ++x) {
            if (probe[x]) {
              simplicial = false;
              break;
            }
          }
          if (!simplicial) break;
        }
      }
      if (simplicial) {
        found = v;
        cert.order.push_back(v);
        cert.degrees_at_removal.push_back(degv);
      }
    }
    if (found < 0) return std::nullopt;
    alive[found >> 6] &= ~(std::uint64_t{1} << (found & 63));
  }
  return cert;
}

bool is_chordal(const Graph& g) { return chordal_certificate(g).has_value(); }

bool is_k_tree(const Graph& g, int k) {
  return is_maximal_k_degenerate(g, k) && is_chordal(g);
}

TwoTreeClassification classify_2tree_diam2(const Graph& g) {
  if (!is_k_tree(g, 2)) throw std::invalid_argument("classification needs a 2-tree");
  const DistanceSummary d = distances(g);
  if (!d.connected || d.diameter != 2)
    throw std::invalid_argument("classification needs diameter exactly 2");
  const int n = g.order();

  // Family one: some dominating vertex whose deletion leaves a tree.
  std::optional<Graph> joined_tree;
  for (int a = 0; a < n && !joined_tree; ++a) {
    if (g.degree(a) != n - 1) continue;
    Graph h = g.without_vertex(a);
    if (h.edge_count() == h.order() - 1 && h.is_connected()) joined_tree = std::move(h);
  }

  // Family two: one triangle carrying every other vertex on one of its edges.
  bool k3_rooted = false;
  for (int a = 0; a < n && !k3_rooted; ++a) {
    for (int b = a + 1; b < n && !k3_rooted; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (int c = b + 1; c < n && !k3_rooted; ++c) {
        if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
          if (v == a || v == b || v == c) continue;
          if (g.degree(v) != 2) {
            ok = false;
            break;
          }
          for (int u : g.neighbors(v)) {
            if (u != a && u != b && u != c) {
              ok = false;
              break;
            }
          }
        }
        k3_rooted = ok;
      }
    }
  }

  if (joined_tree && k3_rooted) return {TwoTreeKind::both, std::move(joined_tree)};
  if (joined_tree) return {TwoTreeKind::tree_join, std::move(joined_tree)};
  if (k3_rooted) return {TwoTreeKind::k3_rooted, std::nullopt};
  throw CounterexampleError("diameter-2 2-tree fits neither family");
}

}  // namespace wdegen
