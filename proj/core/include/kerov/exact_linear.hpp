#pragma once

/// Exact solver for integer linear systems A x = b with at least as many
/// rows as columns, via fraction-free (Bareiss) forward elimination and
/// rational back substitution.

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace kerov {

/// Thrown when the system does not determine a unique solution.
struct singular_system : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Solves A x = b for the unique x; A is rows x cols with rows >= cols and
/// full column rank.  Rows beyond the pivot rows are ignored by the
/// elimination; callers verify the residual on the full system.
std::vector<mpq_class> solve_exact(std::vector<std::vector<mpz_class>> a,
                                   std::vector<mpz_class> b);

}  // namespace kerov
