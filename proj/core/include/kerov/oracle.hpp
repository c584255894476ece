#pragma once

/// Independent ground truth for the pipeline: Young diagrams from
/// multirectangular coordinates, Murnaghan-Nakayama character values,
/// normalized characters, and free cumulants via the transition measure.
/// Exact rationals throughout; no floating point.

#include <vector>

#include <gmpxx.h>

#include "kerov/permutation.hpp"

namespace kerov {

class YoungDiagram {
public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<long> rows);  // weakly decreasing, >= 0

  static YoungDiagram from_rows(std::vector<long> rows) { return YoungDiagram(std::move(rows)); }

  const std::vector<long>& rows() const { return rows_; }
  long n() const { return n_; }
  bool empty() const { return rows_.empty(); }

  bool operator==(const YoungDiagram&) const = default;
  auto operator<=>(const YoungDiagram&) const = default;

private:
  std::vector<long> rows_;  // trailing zero rows dropped
  long n_ = 0;
};

/// lambda(p, q): the first p_1 rows have length q_1+q_2+..., the next p_2
/// rows length q_2+q_3+..., and so on.  Entries must be non-negative.
YoungDiagram diagram_from_pq(const std::vector<long>& p, const std::vector<long>& q);

/// chi^lambda at the class of cycle type mu union (1^{n-|mu|}), by
/// border-strip removal over beta numbers with sign (-1)^height.
/// Requires |mu| <= n.
mpz_class mn_character(const YoungDiagram& lambda, const CycleType& mu);

/// n(n-1)...(n-|mu|+1) * chi^lambda(mu) / chi^lambda(id); an integer in
/// fact, returned as an exact rational.
mpq_class normalized_character(const YoungDiagram& lambda, const CycleType& mu);

/// Interlacing corner contents and the associated weights
/// w(x_i) = prod_j (x_i - y_j) / prod_{k != i} (x_i - x_k).
struct TransitionMeasure {
  std::vector<mpq_class> atoms;    // addable-corner contents, increasing
  std::vector<mpq_class> weights;  // positive, summing to 1
};

TransitionMeasure transition_measure(const YoungDiagram& lambda);

/// Moments m_0..m_up_to of the transition measure.
std::vector<mpq_class> moments(const TransitionMeasure& tm, int up_to);

/// Free cumulants R_0..R_up_to of lambda via the non-crossing
/// moment-cumulant inversion (R_0 = 1, R_1 = 0, R_2 = n, ...); index j of
/// the result is R_j.
std::vector<mpq_class> free_cumulants_numeric(const YoungDiagram& lambda, int up_to);

}  // namespace kerov
