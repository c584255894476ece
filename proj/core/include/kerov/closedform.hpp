#pragma once

/// Closed-form coefficient counts for Kerov polynomials: linear and
/// quadratic coefficients by direct enumeration over S(k), the subdominant
/// graded component of K_k, and the top graded component of K'_{r,s}.

#include <gmpxx.h>

#include "kerov/permutation.hpp"
#include "kerov/r_polynomial.hpp"

namespace kerov {

/// Default cap on the enumeration degree k (k! permutations are scanned).
inline constexpr int default_enumeration_cap = 9;

/// [R_d] K'_mu: the number of tau in S(k) with d-1 cycles such that
/// tau^{-1} sigma is a single k-cycle, sigma of type mu.
mpz_class linear_coefficient(const CycleType& mu, int d, unsigned threads = 1,
                             int enumeration_cap = default_enumeration_cap);

/// [R_j R_l] K'_mu: counts pairs (tau, phi) where tau has two cycles
/// numbered by phi, tau^{-1} sigma has j+l-2 cycles of which at least j meet
/// cycle phi^{-1}(1) and at least l meet phi^{-1}(2), and <tau, tau^{-1}
/// sigma> acts transitively; halved when j == l (integrality is asserted).
mpq_class quadratic_coefficient(const CycleType& mu, int j, int l, unsigned threads = 1,
                                int enumeration_cap = default_enumeration_cap);

/// Subdominant coefficient of K_k: for a monomial of weight k-1 with factor
/// multiset j, the value (k-1)k(k+1)/24 * |Perm(j)| * prod (j_i - 1).
mpq_class top_term_coefficient(int k, const RMonomial& mono);

/// Number of integer vectors 0 <= x_i <= bounds[i] with sum == target.
mpz_class count_bounded_solutions(const std::vector<long>& bounds, long target);

/// Top-degree coefficient of K'_{r,s}: for a monomial of weight r+s,
/// (r*s/t) * |Perm(j)| * N(j_1-2, ..., j_t-2; r-t).
mpq_class two_part_top_coefficient(int r, int s, const RMonomial& mono);

/// The two top graded components of K_mu assembled from the closed forms:
/// the product of leading cumulants, one-part corrections from the
/// subdominant component of each K_{k_i}, minus pair corrections from the
/// top component of each K'_{k_i,k_j}.
RPolynomial subdominant_expansion(const CycleType& mu);

}  // namespace kerov
