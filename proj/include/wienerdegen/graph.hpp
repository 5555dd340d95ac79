#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wdegen {

// Thrown when an edge-list or graph6 stream is malformed.
struct GraphFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph on vertices 0..n-1.
//
// Neighbor lists are kept sorted. A packed bit matrix (one row of 64-bit
// words per vertex) backs O(1) adjacency tests and word-parallel BFS,
// which is what the enumeration inner loops live on. All member functions
// are const; instances are safe to share across threads.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges collapse. Throws std::invalid_argument on a loop
  // (u == v) or an endpoint outside [0, n).
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int edge_count() const { return m_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  bool has_edge(int u, int v) const {
    return (row(u)[static_cast<unsigned>(v) >> 6] >> (v & 63)) & 1u;
  }

  // Adjacency row of v as packed words (bit i set iff i adjacent to v).
  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }
  int row_words() const { return words_; }

  // Copy with vertex v removed; vertices above v shift down by one.
  Graph without_vertex(int v) const;

  bool is_connected() const;

  // Label-sensitive equality (same vertex numbering, same edges).
  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_;
};

// All edges as (u, v) pairs with u < v, sorted.
std::vector<std::pair<int, int>> edges_of(const Graph& g);

// Relabel: vertex v of g becomes perm[v] of the result.
Graph relabeled(const Graph& g, std::span<const int> perm);

// Edge-list text format: line 1 is "n m", then m lines "u v" (0-based).
// Parse failures, loops and out-of-range endpoints raise GraphFormatError.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

// graph6: standard 6-bit ASCII encoding of small undirected graphs.
// Orders up to 62 use the single header byte 63+n; 63..258047 use the
// '~' three-byte form. Decoding rejects anything malformed.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view s);

}  // namespace wdegen
