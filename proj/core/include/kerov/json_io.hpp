#pragma once

/// JSON serialization for the public data types.
///
/// Schemas:
///   Permutation       [2,3,1]                        one-line form, 1-based
///   CycleType         [3,2]                          parts, decreasing
///   YoungDiagram      [4,2,1]                        row lengths
///   PQPolynomial      {"m":2,"terms":[{"p_exponents":[1,0],"q_exponents":[0,1],"coefficient":"1"},...]}
///   RPolynomial       {"terms":[{"indices":[2,2],"coefficient":"5"},...]}
///   BicoloredMap      {"vertices":[{"color":"white"},...],
///                      "edges":[{"white":0,"black":1,"label":1},...],
///                      "rotations":[[1,3],[2,4]],
///                      "external_half_edge":0}
///   FormalMapSum      {"parent":<map>,
///                      "terms":[{"erased_edge_labels":[1],"coefficient":"-1"},...]}
///
/// Coefficients are decimal strings so arbitrary precision survives the trip.

#include <string>

#include "kerov/bicolored_map.hpp"
#include "kerov/formal_map_sum.hpp"
#include "kerov/oracle.hpp"
#include "kerov/permutation.hpp"
#include "kerov/pq_polynomial.hpp"
#include "kerov/r_polynomial.hpp"

namespace kerov {

std::string to_json(const Permutation& p);
std::string to_json(const CycleType& t);
std::string to_json(const YoungDiagram& d);
std::string to_json(const PQPolynomial& p);
std::string to_json(const RPolynomial& p);
std::string to_json(const BicoloredMap& m);
std::string to_json(const FormalMapSum& s);

Permutation permutation_from_json(const std::string& text);
CycleType cycle_type_from_json(const std::string& text);
YoungDiagram young_diagram_from_json(const std::string& text);
PQPolynomial pq_polynomial_from_json(const std::string& text);
RPolynomial r_polynomial_from_json(const std::string& text);
BicoloredMap bicolored_map_from_json(const std::string& text);
FormalMapSum formal_map_sum_from_json(const std::string& text);

}  // namespace kerov
