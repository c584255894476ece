#pragma once

/// Exact-integer polynomials in the formal free-cumulant generators
/// R_2, R_3, ...  A monomial is a multiset of indices >= 2; its weight is
/// the sum of its indices.  Terms are ordered by decreasing weight, then
/// lexicographically, which is also the rendering order.

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kerov {

struct RMonomial {
  std::vector<int> indices;  // sorted ascending, each >= 2

  RMonomial() = default;
  explicit RMonomial(std::vector<int> idx);

  int weight() const;
  int factor_count() const { return static_cast<int>(indices.size()); }
  bool is_one() const { return indices.empty(); }

  bool operator==(const RMonomial&) const = default;
};

struct RMonomialOrder {
  bool operator()(const RMonomial& a, const RMonomial& b) const;
};

class RPolynomial {
public:
  RPolynomial() = default;

  static RPolynomial zero() { return RPolynomial(); }
  static RPolynomial one();
  static RPolynomial generator(int index);  // R_index

  bool is_zero() const { return terms_.empty(); }
  const std::map<RMonomial, mpz_class, RMonomialOrder>& terms() const { return terms_; }

  mpz_class coefficient(const RMonomial& mono) const;
  void add_term(const RMonomial& mono, const mpz_class& coeff);

  RPolynomial& operator+=(const RPolynomial& rhs);
  RPolynomial& operator-=(const RPolynomial& rhs);
  RPolynomial operator+(const RPolynomial& rhs) const;
  RPolynomial operator-(const RPolynomial& rhs) const;
  RPolynomial operator*(const RPolynomial& rhs) const;
  RPolynomial operator*(const mpz_class& scalar) const;
  RPolynomial operator-() const;

  bool operator==(const RPolynomial&) const = default;

  int max_weight() const;  // 0 for the zero polynomial
  RPolynomial weight_component(int w) const;

  /// Rendering such as "R6 + 15 R4 + 5 R2^2 + 8 R2"; "0" when zero.
  std::string to_string() const;

private:
  std::map<RMonomial, mpz_class, RMonomialOrder> terms_;
};

struct PositivityReport {
  bool non_negative = true;
  std::vector<std::pair<RMonomial, mpz_class>> violations;
};

/// True iff every coefficient is >= 0; negative terms are listed.
PositivityReport verify_positivity(const RPolynomial& p);

}  // namespace kerov
