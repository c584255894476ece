#pragma once

/// Bicolored labeled maps as rotation systems.
///
/// Half-edge indexing: the edge with index e (1-based) has white half-edge
/// 2e-1 and black half-edge 2e; an external half-edge, when present, takes
/// the next free index 2E+1.  A map built from a permutation pair
/// (tau, taubar) has white vertices = cycles of tau, black vertices =
/// cycles of taubar, and edge i joins the cycles containing i; the rotation
/// at a vertex is the cycle order.

#include <cstdint>
#include <string>
#include <vector>

#include "kerov/permutation.hpp"

namespace kerov {

enum class Color : std::uint8_t { white, black };

/// Subset of the edges of a fixed map; bit e-1 stands for edge index e.
using EdgeSet = std::uint32_t;

struct OrientedEdge {
  int edge = 0;                 // edge index in the parent map
  bool white_to_black = true;   // orientation of traversal
  bool operator==(const OrientedEdge&) const = default;
  auto operator<=>(const OrientedEdge&) const = default;
};

class BicoloredMap {
public:
  /// Raw rotation-system constructor.
  ///
  /// endpoints[e-1] = (white vertex, black vertex) of edge e;
  /// labels[e-1] = positive label of edge e (labels must be distinct);
  /// rotations[v] lists the half-edge ids at vertex v in cyclic order and
  /// must cover exactly the half-edges incident to v (including
  /// external_half_edge if nonzero).
  BicoloredMap(std::vector<Color> colors,
               std::vector<std::pair<int, int>> endpoints,
               std::vector<int> labels,
               std::vector<std::vector<int>> rotations,
               int external_half_edge = 0);

  static BicoloredMap from_permutation_pair(const Permutation& tau, const Permutation& taubar);

  /// Inverse of from_permutation_pair.  Requires no external half-edge and
  /// labels forming a bijection onto [E].
  std::pair<Permutation, Permutation> to_permutation_pair() const;

  int num_edges() const { return static_cast<int>(endpoints_.size()); }
  int num_vertices() const { return static_cast<int>(colors_.size()); }
  int num_half_edges() const { return 2 * num_edges() + (external_half_edge_ ? 1 : 0); }

  Color vertex_color(int v) const { return colors_[v]; }
  int white_end(int edge) const { return endpoints_[edge - 1].first; }
  int black_end(int edge) const { return endpoints_[edge - 1].second; }
  int label(int edge) const { return labels_[edge - 1]; }
  int edge_with_label(int label) const;  // throws if absent

  static int white_half(int edge) { return 2 * edge - 1; }
  static int black_half(int edge) { return 2 * edge; }
  static int edge_of_half(int h) { return (h + 1) / 2; }
  static bool is_white_half(int h) { return h % 2 == 1; }

  int vertex_of_half(int h) const { return vertex_of_[h]; }
  int next_at_vertex(int h) const { return next_at_vertex_[h]; }
  const std::vector<int>& rotation(int v) const { return rotations_[v]; }

  int external_half_edge() const { return external_half_edge_; }

  EdgeSet full_edge_set() const {
    return num_edges() == 32 ? ~EdgeSet{0} : (EdgeSet{1} << num_edges()) - 1;
  }

  std::vector<int> labels_of(EdgeSet edges) const;        // sorted labels
  EdgeSet edges_with_labels(const std::vector<int>& labels) const;

  bool operator==(const BicoloredMap&) const = default;

private:
  std::vector<Color> colors_;
  std::vector<std::pair<int, int>> endpoints_;  // per edge: (white, black)
  std::vector<int> labels_;
  std::vector<std::vector<int>> rotations_;     // per vertex
  std::vector<int> vertex_of_;                  // per half-edge id
  std::vector<int> next_at_vertex_;             // per half-edge id
  int external_half_edge_ = 0;

  void validate_and_index();
};

inline BicoloredMap build_map(const Permutation& tau, const Permutation& taubar) {
  return BicoloredMap::from_permutation_pair(tau, taubar);
}

struct Face {
  std::vector<OrientedEdge> oriented_edges;
  std::vector<int> word;  // labels of the white-to-black edges, in face order

  bool operator==(const Face&) const = default;
};

/// Faces via the successor rule; requires a map without external half-edges.
/// Traversal starts from the unused oriented edge with the smallest
/// (label, orientation), white-to-black first.
std::vector<Face> faces(const BicoloredMap& m);

/// Connected components as standalone maps; vertices are renumbered in
/// increasing order of their original ids, edge labels are preserved.
std::vector<BicoloredMap> connected_components(const BicoloredMap& m);

/// True iff every component satisfies |V| = |E| + 1.
bool is_forest(const BicoloredMap& m);

/// Component count of the spanning subgraph (V, edges); isolated vertices
/// count as components.
int component_count(const BicoloredMap& m, EdgeSet edges);

/// True iff (V, edges) is acyclic with no isolated vertex.
bool is_covering_forest_no_trivial_trees(const BicoloredMap& m, EdgeSet edges);

/// Returns m with one external half-edge inserted at the black extremity of
/// the lowest-labeled edge, immediately after that edge's black half-edge in
/// the rotation.  Requires m connected, without external half-edge, with at
/// least one edge.
BicoloredMap attach_external_half_edge(const BicoloredMap& m);

}  // namespace kerov
