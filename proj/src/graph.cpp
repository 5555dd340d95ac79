#include "wienerdegen/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>

namespace wdegen {

namespace {

void check_endpoint(int v, int n) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument("edge endpoint " + std::to_string(v) +
                                " out of range for order " + std::to_string(n));
  }
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("negative order");
  Graph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.adj_.assign(n, {});
  g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
  for (auto [u, v] : edges) {
    check_endpoint(u, n);
    check_endpoint(v, n);
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    std::uint64_t& wu = g.bits_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)];
    if ((wu >> (v & 63)) & 1u) continue;  // duplicate
    wu |= std::uint64_t{1} << (v & 63);
    g.bits_[static_cast<std::size_t>(v) * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    ++g.m_;
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::without_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    if (u == v) continue;
    for (int w : adj_[u]) {
      if (w == v || w < u) continue;
      edges.emplace_back(u < v ? u : u - 1, w < v ? w : w - 1);
    }
  }
  return from_edge_list(n_ - 1, edges);
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<std::uint64_t> seen(words_, 0), frontier(words_, 0);
  seen[0] = frontier[0] = 1;
  int reached = 1;
  while (true) {
    std::vector<std::uint64_t> next(words_, 0);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits) {
        int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        auto r = row(v);
        for (int x = 0; x < words_; ++x) next[x] |= r[x];
      }
    }
    bool any = false;
    for (int x = 0; x < words_; ++x) {
      next[x] &= ~seen[x];
      if (next[x]) any = true;
      seen[x] |= next[x];
      reached += std::popcount(next[x]);
    }
    if (!any) break;
    frontier = next;
  }
  return reached == n_;
}

std::vector<std::pair<int, int>> edges_of(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edge_count());
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph relabeled(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : edges_of(g)) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edge_list(g.order(), edges);
}

Graph read_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw GraphFormatError("expected header line \"n m\"");
  if (n < 0 || m < 0 || n > 1000000 || m > 100000000)
    throw GraphFormatError("implausible header values");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw GraphFormatError("truncated edge list");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphFormatError("edge endpoint out of range");
    if (u == v) throw GraphFormatError("loop edge not allowed");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : edges_of(g)) out << u << ' ' << v << '\n';
}

// graph6 packs the column-major upper triangle (pairs ordered by the
// larger endpoint) into 6-bit groups, each stored as ASCII 63+value.

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw std::invalid_argument("graph6 encoding limited to order 258047");
  }
  int group = 0, used = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (group << (6 - used))));
  return out;
}

Graph from_graph6(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw GraphFormatError("empty graph6 string");
  std::size_t pos = 0;
  long long n = 0;
  if (s[0] == 126) {
    if (s.size() >= 2 && s[1] == 126)
      throw GraphFormatError("graph6 orders above 258047 not supported");
    if (s.size() < 4) throw GraphFormatError("truncated graph6 header");
    for (int i = 1; i <= 3; ++i) {
      int c = static_cast<unsigned char>(s[i]);
      if (c < 63 || c > 126) throw GraphFormatError("invalid graph6 byte");
      n = (n << 6) | (c - 63);
    }
    pos = 4;
  } else {
    int c = static_cast<unsigned char>(s[0]);
    if (c < 63 || c > 125) throw GraphFormatError("invalid graph6 header byte");
    n = c - 63;
    pos = 1;
  }
  const long long bits_needed = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits_needed + 5) / 6);
  if (s.size() - pos != body) throw GraphFormatError("graph6 body length mismatch");
  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  int group = 0, left = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (left == 0) {
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw GraphFormatError("invalid graph6 byte");
        group = c - 63;
        left = 6;
      }
      if ((group >> (left - 1)) & 1) edges.emplace_back(u, v);
      --left;
    }
  }
  if (left > 0 && (group & ((1 << left) - 1)) != 0)
    throw GraphFormatError("nonzero graph6 padding bits");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

}  // namespace wdegen
