#include "wienerdegen/distance.hpp"

#include <algorithm>
#include <bit>

namespace wdegen {

namespace {

// Word-parallel BFS from s: expands whole frontiers with row ORs and
// writes hop counts into dist (a row of length n, pre-filled with the
// sentinel). Returns the number of reached vertices including s.
int bfs_row(const Graph& g, int s, std::uint16_t* dist,
            std::vector<std::uint64_t>& seen, std::vector<std::uint64_t>& frontier,
            std::vector<std::uint64_t>& next) {
  const int n = g.order();
  const int words = g.row_words();
  std::fill_n(dist, n, kUnreachable);
  std::fill(seen.begin(), seen.end(), 0);
  std::fill(frontier.begin(), frontier.end(), 0);
  dist[s] = 0;
  seen[s >> 6] |= std::uint64_t{1} << (s & 63);
  frontier[s >> 6] = seen[s >> 6];
  int reached = 1;
  for (std::uint16_t hop = 1;; ++hop) {
    std::fill(next.begin(), next.end(), 0);
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits) {
        const int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        auto r = g.row(v);
        for (int x = 0; x < words; ++x) next[x] |= r[x];
      }
    }
    bool any = false;
    for (int x = 0; x < words; ++x) {
      next[x] &= ~seen[x];
      seen[x] |= next[x];
      std::uint64_t bits = next[x];
      while (bits) {
        dist[x * 64 + std::countr_zero(bits)] = hop;
        bits &= bits - 1;
        ++reached;
        any = true;
      }
    }
    if (!any) return reached;
    frontier.swap(next);
  }
}

}  // namespace

DistanceSummary distances(const Graph& g) {
  const int n = g.order();
  if (n > 65535) throw std::invalid_argument("distance matrix limited to order 65535");
  DistanceSummary s;
  s.order = n;
  s.dist.assign(static_cast<std::size_t>(n) * n, kUnreachable);
  s.status.assign(n, 0);
  s.eccentricity.assign(n, 0);
  const int words = g.row_words();
  std::vector<std::uint64_t> seen(words), frontier(words), next(words);
  for (int v = 0; v < n; ++v) {
    int reached = bfs_row(g, v, s.dist.data() + static_cast<std::size_t>(v) * n,
                          seen, frontier, next);
    if (reached != n) s.connected = false;
  }
  for (int u = 0; u < n; ++u) {
    int ecc = 0;
    for (int v = 0; v < n; ++v) {
      const std::uint16_t d = s.at(u, v);
      if (d == kUnreachable) continue;
      s.status[u] += d;
      ecc = std::max(ecc, static_cast<int>(d));
    }
    s.eccentricity[u] = ecc;
    s.diameter = std::max(s.diameter, ecc);
  }
  s.distance_distribution.assign(s.diameter + 1, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const std::uint16_t d = s.at(u, v);
      if (d == kUnreachable) continue;
      s.distance_distribution[d] += 1;
      s.wiener += d;
    }
  }
  return s;
}

namespace {

// Queue BFS over adjacency lists; cheaper than the matrix when only one
// row is needed, and the whole-graph Wiener sum never stores the matrix.
std::int64_t bfs_status(const Graph& g, int s, std::vector<int>& dist,
                        std::vector<int>& queue, bool* complete) {
  const int n = g.order();
  dist.assign(n, -1);
  queue.clear();
  queue.push_back(s);
  dist[s] = 0;
  std::int64_t sum = 0;
  std::size_t head = 0;
  while (head < queue.size()) {
    const int u = queue[head++];
    for (int v : g.neighbors(u)) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      sum += dist[v];
      queue.push_back(v);
    }
  }
  *complete = queue.size() == static_cast<std::size_t>(n);
  return sum;
}

}  // namespace

std::int64_t wiener(const Graph& g) {
  const int n = g.order();
  std::vector<int> dist, queue;
  std::int64_t total = 0;
  for (int v = 0; v < n; ++v) {
    bool complete = false;
    total += bfs_status(g, v, dist, queue, &complete);
    if (!complete) throw std::invalid_argument("wiener index undefined: graph is disconnected");
  }
  return total / 2;
}

std::int64_t vertex_status(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
  std::vector<int> dist, queue;
  bool complete = false;
  const std::int64_t sum = bfs_status(g, v, dist, queue, &complete);
  if (!complete) throw std::invalid_argument("status undefined: unreachable vertices");
  return sum;
}

bool is_isometric_after_deletion(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
  if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
  const Graph h = g.without_vertex(v);
  if (!h.is_connected()) throw std::invalid_argument("deleting the vertex disconnects the graph");
  const DistanceSummary dg = distances(g);
  const DistanceSummary dh = distances(h);
  const int m = h.order();
  for (int x = 0; x < m; ++x) {
    const int gx = x < v ? x : x + 1;
    for (int y = x + 1; y < m; ++y) {
      const int gy = y < v ? y : y + 1;
      if (dh.at(x, y) != dg.at(gx, gy)) return false;
    }
  }
  return true;
}

}  // namespace wdegen
