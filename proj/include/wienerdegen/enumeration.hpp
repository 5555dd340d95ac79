#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wienerdegen/graph.hpp"

namespace wdegen {

// Thrown when a request exceeds its enumeration ceiling or the canonical
// search blows past its node budget. Runs fail loudly rather than
// silently truncating.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Label-independent fingerprint: the lexicographically smallest
// upper-triangle adjacency bit string over the candidate labelings that
// the refinement search admits. Two graphs have equal forms iff they are
// isomorphic. Ordering is (order, edges, bytes), so sorted lists of forms
// are deterministic.
struct CanonicalForm {
  int order = 0;
  int edges = 0;
  std::vector<std::uint8_t> bytes;  // row-major upper triangle, MSB first

  auto operator<=>(const CanonicalForm&) const = default;
};

// Orders above this are rejected (the search and the byte encoding are
// sized for small-order exhaustive work, not general graphs).
inline constexpr int kCanonicalOrderLimit = 32;

CanonicalForm canonical_form(const Graph& g);

// Rebuilds the canonically labeled graph from its form.
Graph graph_from_canonical(const CanonicalForm& form);

enum class GraphClass { k_tree, maximal_k_degenerate };

struct EnumerationOptions {
  // Highest order this run may enumerate; defaults to default_ceiling(k).
  std::optional<int> ceiling;
  // Worker threads; 0 means take WIENER_DEGEN_THREADS from the
  // environment, or 1 if unset. Results are identical for any count.
  int workers = 0;
};

int default_ceiling(int k);

// One representative per isomorphism class, paired with its form.
struct ClassRep {
  CanonicalForm form;
  Graph graph;
};

// Isomorph-free exhaustive generation by vertex addition: every member of
// the class of order m+1 arises from one of order m by attaching a new
// vertex to k existing vertices (a k-clique for k-trees, any k-set for
// maximal k-degenerate), so level-by-level extension with canonical-form
// deduplication reaches each class exactly once. Returns one vector per
// order k..n, each sorted by form. Throws BudgetError past the ceiling.
std::vector<std::vector<ClassRep>> enumerate_levels(int n, int k, GraphClass cls,
                                                    const EnumerationOptions& opts = {});

struct EnumerationSummary {
  int n = 0;
  int k = 0;
  GraphClass graph_class = GraphClass::k_tree;
  std::int64_t count = 0;
  std::int64_t wiener_min = 0;
  std::int64_t wiener_max = 0;
  std::vector<CanonicalForm> minimizers;  // sorted
  std::vector<CanonicalForm> maximizers;  // sorted
  std::map<int, std::int64_t> diameter_histogram;

  bool operator==(const EnumerationSummary&) const = default;
};

EnumerationSummary enumerate_k_trees(int n, int k, const EnumerationOptions& opts = {});
EnumerationSummary enumerate_maximal_k_degenerate(int n, int k,
                                                  const EnumerationOptions& opts = {});

// Enumerates and cross-checks the extremal structure: the minimum Wiener
// index must equal lower_bound(n, k) and be attained exactly by the
// diameter <= 2 members, and the maximum must equal upper_bound_sum(n, k).
// A violation (which would falsify the bounds) raises std::logic_error.
EnumerationSummary extremal_census(int n, int k, GraphClass cls,
                                   const EnumerationOptions& opts = {});

}  // namespace wdegen
