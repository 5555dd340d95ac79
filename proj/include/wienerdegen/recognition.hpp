#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "wienerdegen/graph.hpp"

namespace wdegen {

enum class CertificateKind { degeneracy, perfect_elimination };

// Vertex elimination order with the degree each vertex had (among the
// not-yet-removed vertices) at the moment it was removed.
struct EliminationCertificate {
  CertificateKind kind = CertificateKind::degeneracy;
  std::vector<int> order;
  std::vector<int> degrees_at_removal;
};

struct DegeneracyResult {
  int degeneracy = 0;
  EliminationCertificate certificate;
};

// Smallest k such that every subgraph has a vertex of degree <= k,
// computed by bucketed min-degree removal. The certificate's removal
// degrees never exceed the result and attain it.
DegeneracyResult degeneracy(const Graph& g);

// Edge-count test: a graph of order n >= k with degeneracy <= k is
// maximal k-degenerate iff it has exactly k*n - k(k+1)/2 edges.
// Throws std::invalid_argument when n < k or k < 1.
bool is_maximal_k_degenerate(const Graph& g, int k);

// Repeated simplicial-vertex elimination; nullopt when none exists at
// some stage (i.e. the graph is not chordal).
std::optional<EliminationCertificate> chordal_certificate(const Graph& g);
bool is_chordal(const Graph& g);

// k-tree = chordal + maximal k-degenerate (order >= k).
// Throws std::invalid_argument when n < k or k < 1.
bool is_k_tree(const Graph& g, int k);

// Thrown when a graph that the classification below says cannot exist
// shows up anyway. Deliberately loud: it falsifies the classification.
struct CounterexampleError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class TwoTreeKind { tree_join, k3_rooted, both };

struct TwoTreeClassification {
  TwoTreeKind kind = TwoTreeKind::tree_join;
  // The tree T with g = T + K1, present for tree_join and both.
  std::optional<Graph> joined_tree;
};

// Classifies a diameter-2 2-tree as T + K1 (some dominating vertex whose
// deletion leaves a tree), as K3 with every further vertex attached to an
// edge of that one triangle, or both. Every candidate dominating vertex
// and every triangle is tried before giving up. Throws
// std::invalid_argument unless g is a 2-tree of diameter 2, and
// CounterexampleError if neither family matches.
TwoTreeClassification classify_2tree_diam2(const Graph& g);

}  // namespace wdegen
