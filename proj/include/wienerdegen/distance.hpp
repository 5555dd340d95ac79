#pragma once

#include <cstdint>
#include <vector>

#include "wienerdegen/graph.hpp"

namespace wdegen {

// Sentinel for "no path"; exceeds any hop count since order is capped below 65536.
inline constexpr std::uint16_t kUnreachable = 0xFFFF;

// All-pairs distance data plus the derived invariants.
//
// For a disconnected graph `connected` is false, the Wiener index is
// undefined (treated as infinite by callers), and status / eccentricity /
// diameter range over reachable pairs only.
struct DistanceSummary {
  int order = 0;
  bool connected = true;
  std::vector<std::uint16_t> dist;           // row-major order*order
  std::vector<std::int64_t> status;          // per-vertex sum of distances
  std::vector<int> eccentricity;
  int diameter = 0;
  std::vector<std::int64_t> distance_distribution;  // [i] = pairs at distance i
  std::int64_t wiener = 0;                   // meaningful only when connected

  std::uint16_t at(int u, int v) const {
    return dist[static_cast<std::size_t>(u) * order + v];
  }
};

// BFS from every vertex over the packed adjacency rows.
DistanceSummary distances(const Graph& g);

// Sum of distances over unordered pairs, 64-bit. Throws
// std::invalid_argument when g is disconnected. Does not materialize the
// distance matrix, so it stays usable at orders where `distances` would
// be too large.
std::int64_t wiener(const Graph& g);

// Distance sum from one vertex. Throws std::invalid_argument if some
// vertex is unreachable from v.
std::int64_t vertex_status(const Graph& g, int v);

// True when g - v preserves all pairwise distances among the remaining
// vertices. Throws std::invalid_argument if g is disconnected, v is out
// of range, or the deletion disconnects the graph.
bool is_isometric_after_deletion(const Graph& g, int v);

}  // namespace wdegen
