#pragma once

/// Character polynomials Sigma_mu and free cumulants R_j in multirectangular
/// coordinates, the exact change of basis into R-monomials, and the Kerov
/// polynomials K_k, K_mu, K'_mu.

#include "kerov/pq_polynomial.hpp"
#include "kerov/permutation.hpp"
#include "kerov/r_polynomial.hpp"

#include <stdexcept>

namespace kerov {

/// Thrown when a change of basis cannot be completed at the current
/// truncation level; retry with a larger truncation.
struct solve_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sigma_mu as a polynomial in p, q: the signed sum of N over all
/// factorizations tau * taubar = sigma of a fixed permutation sigma of type
/// mu, with sign (-1)^{#cycles(tau) + #parts(mu)}.
PQPolynomial sigma_poly(const CycleType& mu, int truncation, unsigned threads = 1);

/// Same sum restricted to transitive factorizations, sign
/// (-1)^{#cycles(tau) + 1}.
PQPolynomial sigma_prime_poly(const CycleType& mu, int truncation, unsigned threads = 1);

/// The free cumulant R_j as a polynomial in p, q: the signed sum of N over
/// the minimal factorizations of the (j-1)-cycle, indexed by NC(j-1).
/// Homogeneous of total degree j.
PQPolynomial free_cumulant_poly(int j, int truncation, unsigned threads = 1);

/// The unique integer polynomial in R_2, R_3, ... of weight <= max_weight
/// whose expansion equals poly exactly at poly's truncation level.  Solved
/// degree by degree by exact fraction-free elimination; the residual is
/// verified to vanish and the coefficients to be integers.  A positive
/// max_index restricts the generators to R_2..R_max_index (the Kerov
/// callers pass k+1); zero leaves them unrestricted.
RPolynomial express_in_R(const PQPolynomial& poly, int max_weight, int max_index = 0,
                         unsigned threads = 1);

/// K_k: Sigma_k expressed in free cumulants (weight <= k+1, truncation k).
RPolynomial kerov_polynomial(int k, unsigned threads = 1);

/// K_mu: Sigma_mu expressed in free cumulants (weight <= |mu| + parts(mu)).
RPolynomial generalized_kerov(const CycleType& mu, unsigned threads = 1);

/// K'_mu: Sigma'_mu expressed in free cumulants (weight <= |mu|+2-parts(mu));
/// all coefficients are non-negative integers.
RPolynomial positive_kerov(const CycleType& mu, unsigned threads = 1);

/// Reassembles K_mu from the K' family: the sum over set partitions of the
/// part indices of the product over blocks of (-1)^{|block|-1} K'_{block}.
RPolynomial sigma_from_sigma_prime(const CycleType& mu, unsigned threads = 1);

}  // namespace kerov
