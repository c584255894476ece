#pragma once

/// Sparse exact-integer polynomials in the truncated variable families
/// p_1..p_m, q_1..q_m.  Exponents are stored as 4-bit nibbles, which caps
/// the truncation level at 16 variables per family and each exponent at 15;
/// both are asserted at insertion time.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kerov {

struct PQMonomial {
  std::uint64_t p_bits = 0;
  std::uint64_t q_bits = 0;

  static constexpr int max_vars = 16;

  static std::uint64_t unit(int var) { return std::uint64_t{1} << (4 * (var - 1)); }
  static int exponent(std::uint64_t bits, int var) {
    return static_cast<int>((bits >> (4 * (var - 1))) & 0xF);
  }

  int p_exp(int var) const { return exponent(p_bits, var); }
  int q_exp(int var) const { return exponent(q_bits, var); }
  int p_degree() const;
  int q_degree() const;
  int total_degree() const { return p_degree() + q_degree(); }
  int max_var() const;  // largest variable index with nonzero exponent

  PQMonomial times(const PQMonomial& rhs) const;  // asserts no nibble overflow

  bool operator==(const PQMonomial&) const = default;
  auto operator<=>(const PQMonomial&) const = default;
};

class PQPolynomial {
public:
  explicit PQPolynomial(int m);

  static PQPolynomial zero(int m) { return PQPolynomial(m); }
  static PQPolynomial one(int m);
  static PQPolynomial p_var(int i, int m);
  static PQPolynomial q_var(int i, int m);

  int truncation() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<PQMonomial, mpz_class>& terms() const { return terms_; }

  mpz_class coefficient(const PQMonomial& mono) const;
  void add_term(const PQMonomial& mono, const mpz_class& coeff);

  PQPolynomial& operator+=(const PQPolynomial& rhs);
  PQPolynomial& operator-=(const PQPolynomial& rhs);
  PQPolynomial operator+(const PQPolynomial& rhs) const;
  PQPolynomial operator-(const PQPolynomial& rhs) const;
  PQPolynomial operator*(const PQPolynomial& rhs) const;
  PQPolynomial operator*(const mpz_class& scalar) const;
  PQPolynomial operator-() const;

  bool operator==(const PQPolynomial&) const = default;

  /// Terms of the given total degree, as a polynomial.
  PQPolynomial homogeneous_component(int degree) const;
  std::vector<int> degrees_present() const;

  /// True iff every term has p-degree dp and q-degree dq.
  bool is_homogeneous(int dp, int dq) const;

  /// Sets p_i = q_i = 0 for i > new_m; requires new_m <= truncation().
  PQPolynomial truncate(int new_m) const;

  /// Exact substitution; the vectors must have length == truncation().
  mpq_class evaluate(const std::vector<mpq_class>& p, const std::vector<mpq_class>& q) const;

  std::string to_string() const;  // deterministic, for diagnostics

private:
  int m_;
  std::map<PQMonomial, mpz_class> terms_;
};

inline mpq_class evaluate(const PQPolynomial& poly, const std::vector<mpq_class>& p,
                          const std::vector<mpq_class>& q) {
  return poly.evaluate(p, q);
}

}  // namespace kerov
