#pragma once

/// The generating polynomial N(G) of a bicolored graph: the sum over
/// evaluations psi of the vertices into [m] with psi(black) >= psi(white)
/// across every edge of the monomial  prod p_{psi(w)} prod q_{psi(b)}.
/// Computed per connected component (N is multiplicative over disjoint
/// unions) by enumerating white assignments only; each black vertex then
/// contributes an independent linear factor q_t + ... + q_m.

#include "kerov/bicolored_map.hpp"
#include "kerov/formal_map_sum.hpp"
#include "kerov/pq_polynomial.hpp"

namespace kerov {

/// N of the graph underlying m (rotations ignored, external half-edges
/// ignored), truncated to values in [truncation].
PQPolynomial n_of_graph(const BicoloredMap& m, int truncation);

/// Same, restricted to the spanning subgraph on the given edges; the vertex
/// set stays that of m, so isolated vertices still carry a free variable.
PQPolynomial n_of_graph(const BicoloredMap& m, EdgeSet edges, int truncation);

/// Linear extension of n_of_graph to formal sums of submaps.
PQPolynomial n_of_sum(const FormalMapSum& s, int truncation);

}  // namespace kerov
