#include "kerov/exact_linear.hpp"

#include <algorithm>

namespace kerov {

std::vector<mpq_class> solve_exact(std::vector<std::vector<mpz_class>> a,
                                   std::vector<mpz_class> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (cols == 0) return {};
  if (rows < cols) throw singular_system("fewer equations than unknowns");
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  if (b.size() != rows) throw std::invalid_argument("rhs size mismatch");

  // Bareiss elimination on the augmented matrix; division by the previous
  // pivot is exact.
  mpz_class prev_pivot = 1;
  for (std::size_t k = 0; k < cols; ++k) {
    std::size_t pivot = k;
    while (pivot < rows && a[pivot][k] == 0) ++pivot;
    if (pivot == rows) throw singular_system("column rank deficiency");
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      std::swap(b[pivot], b[k]);
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev_pivot;
      b[i] = (b[i] * a[k][k] - a[i][k] * b[k]) / prev_pivot;
      a[i][k] = 0;
    }
    prev_pivot = a[k][k];
  }

  std::vector<mpq_class> x(cols);
  for (std::size_t k = cols; k-- > 0;) {
    mpq_class acc(b[k]);
    for (std::size_t j = k + 1; j < cols; ++j) acc -= mpq_class(a[k][j]) * x[j];
    x[k] = acc / mpq_class(a[k][k]);
    x[k].canonicalize();
  }
  return x;
}

}  // namespace kerov
