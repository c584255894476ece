#pragma once

/// The elementary edge-erasing transformation T_L, admissible loops, the
/// canonical decomposition operators D1 and D, and forest-coefficient
/// extraction.
///
/// T_L sends a graph to the inclusion-exclusion sum over nonempty subsets
/// E' of the loop's white-to-black edges of (-1)^{|E'|-1} G \ E'.  D1 is
/// the fixed point of rewriting by T_L over admissible loops of a map with
/// one external half-edge; D extends it to arbitrary labeled maps and lands
/// on covering forests without trivial trees.

#include <vector>

#include "kerov/bicolored_map.hpp"
#include "kerov/formal_map_sum.hpp"

namespace kerov {

/// Oriented simple loop in a fixed parent map, stored up to cyclic rotation
/// (canonical form starts at the smallest (edge, orientation) pair).
struct OrientedLoop {
  std::vector<OrientedEdge> edges;

  OrientedLoop() = default;
  explicit OrientedLoop(std::vector<OrientedEdge> seq);  // canonicalizes

  OrientedLoop reversed() const;

  bool operator==(const OrientedLoop&) const = default;
};

/// E(L): the edges the loop traverses from their white to their black
/// extremity, as a subset of the parent's edges.
EdgeSet erasable_edges(const OrientedLoop& loop);

/// All oriented simple loops of the spanning subgraph (V, edges); each
/// undirected loop appears in both orientations.
std::vector<OrientedLoop> enumerate_loops(const BicoloredMap& m, EdgeSet edges);
std::vector<OrientedLoop> enumerate_loops(const BicoloredMap& m);

/// Checks the loop invariants (consecutive extremities shared, vertices and
/// edges distinct) against the subgraph (V, edges).
bool loop_valid(const BicoloredMap& m, EdgeSet edges, const OrientedLoop& loop);

FormalMapSum t_transform(const BicoloredMap& g, const OrientedLoop& loop);

/// Linear extension; the loop must be valid in every term of the sum.
FormalMapSum t_transform(const FormalMapSum& s, const OrientedLoop& loop);

/// All admissible loops of a connected map with exactly one external
/// half-edge: simple loops through the marked vertex whose orientation
/// matches the rotation condition there.  Of the two orientations of an
/// undirected loop through the marked vertex exactly one is returned.
std::vector<OrientedLoop> admissible_loops(const BicoloredMap& m);

/// D1 of a connected map with exactly one external half-edge.
FormalMapSum d1(const BicoloredMap& m);

/// Linear extension of D1 to sums of submaps of the parent.
FormalMapSum d1(const FormalMapSum& s);

/// Full decomposition D; requires distinct labels and at most one external
/// half-edge.  Every term of the result is a covering forest of m without
/// trivial trees.
FormalMapSum d_full(const BicoloredMap& m);

/// Coefficient of the given covering forest (as an erased-edge set's
/// complement: `forest` lists the KEPT edges) in d_full(m).
mpz_class forest_coefficient(const BicoloredMap& m, EdgeSet forest);

/// |forest_coefficient| with the sign (-1)^{t-1} stripped; non-negative for
/// connected m.  Throws for disconnected m.
mpz_class cumulant_multiplicity(const BicoloredMap& m, EdgeSet forest);

}  // namespace kerov
