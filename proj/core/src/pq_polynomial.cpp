#include "kerov/pq_polynomial.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace kerov {

int PQMonomial::p_degree() const {
  int d = 0;
  for (std::uint64_t b = p_bits; b; b >>= 4) d += static_cast<int>(b & 0xF);
  return d;
}

int PQMonomial::q_degree() const {
  int d = 0;
  for (std::uint64_t b = q_bits; b; b >>= 4) d += static_cast<int>(b & 0xF);
  return d;
}

int PQMonomial::max_var() const {
  int top = 0;
  for (int v = 1; v <= max_vars; ++v)
    if (p_exp(v) || q_exp(v)) top = v;
  return top;
}

PQMonomial PQMonomial::times(const PQMonomial& rhs) const {
  PQMonomial out;
  for (int v = 1; v <= max_vars; ++v) {
    int pe = p_exp(v) + rhs.p_exp(v);
    int qe = q_exp(v) + rhs.q_exp(v);
    if (pe > 15 || qe > 15) throw std::overflow_error("monomial exponent exceeds nibble range");
    out.p_bits |= static_cast<std::uint64_t>(pe) << (4 * (v - 1));
    out.q_bits |= static_cast<std::uint64_t>(qe) << (4 * (v - 1));
  }
  return out;
}

PQPolynomial::PQPolynomial(int m) : m_(m) {
  if (m < 1 || m > PQMonomial::max_vars)
    throw std::invalid_argument("truncation level must be in [1, 16]");
}

PQPolynomial PQPolynomial::one(int m) {
  PQPolynomial p(m);
  p.terms_[PQMonomial{}] = 1;
  return p;
}

PQPolynomial PQPolynomial::p_var(int i, int m) {
  PQPolynomial p(m);
  if (i < 1 || i > m) throw std::invalid_argument("variable index out of range");
  p.terms_[PQMonomial{PQMonomial::unit(i), 0}] = 1;
  return p;
}

PQPolynomial PQPolynomial::q_var(int i, int m) {
  PQPolynomial p(m);
  if (i < 1 || i > m) throw std::invalid_argument("variable index out of range");
  p.terms_[PQMonomial{0, PQMonomial::unit(i)}] = 1;
  return p;
}

mpz_class PQPolynomial::coefficient(const PQMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void PQPolynomial::add_term(const PQMonomial& mono, const mpz_class& coeff) {
  if (coeff == 0) return;
  if (mono.max_var() > m_) throw std::invalid_argument("monomial beyond truncation level");
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

PQPolynomial& PQPolynomial::operator+=(const PQPolynomial& rhs) {
  if (m_ != rhs.m_) throw std::invalid_argument("truncation mismatch");
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

PQPolynomial& PQPolynomial::operator-=(const PQPolynomial& rhs) {
  if (m_ != rhs.m_) throw std::invalid_argument("truncation mismatch");
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

PQPolynomial PQPolynomial::operator+(const PQPolynomial& rhs) const {
  PQPolynomial out = *this;
  out += rhs;
  return out;
}

PQPolynomial PQPolynomial::operator-(const PQPolynomial& rhs) const {
  PQPolynomial out = *this;
  out -= rhs;
  return out;
}

PQPolynomial PQPolynomial::operator*(const PQPolynomial& rhs) const {
  if (m_ != rhs.m_) throw std::invalid_argument("truncation mismatch");
  PQPolynomial out(m_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

PQPolynomial PQPolynomial::operator*(const mpz_class& scalar) const {
  PQPolynomial out(m_);
  if (scalar == 0) return out;
  for (const auto& [mono, c] : terms_) out.terms_[mono] = c * scalar;
  return out;
}

PQPolynomial PQPolynomial::operator-() const { return *this * mpz_class(-1); }

PQPolynomial PQPolynomial::homogeneous_component(int degree) const {
  PQPolynomial out(m_);
  for (const auto& [mono, c] : terms_)
    if (mono.total_degree() == degree) out.terms_[mono] = c;
  return out;
}

std::vector<int> PQPolynomial::degrees_present() const {
  std::set<int> degrees;
  for (const auto& [mono, c] : terms_) degrees.insert(mono.total_degree());
  return {degrees.begin(), degrees.end()};
}

bool PQPolynomial::is_homogeneous(int dp, int dq) const {
  for (const auto& [mono, c] : terms_)
    if (mono.p_degree() != dp || mono.q_degree() != dq) return false;
  return true;
}

PQPolynomial PQPolynomial::truncate(int new_m) const {
  if (new_m > m_) throw std::invalid_argument("truncate cannot raise the level");
  PQPolynomial out(new_m);
  for (const auto& [mono, c] : terms_)
    if (mono.max_var() <= new_m) out.terms_[mono] = c;
  return out;
}

mpq_class PQPolynomial::evaluate(const std::vector<mpq_class>& p,
                                 const std::vector<mpq_class>& q) const {
  if (static_cast<int>(p.size()) != m_ || static_cast<int>(q.size()) != m_)
    throw std::invalid_argument("evaluation vectors must have the truncation length");
  mpq_class total = 0;
  for (const auto& [mono, c] : terms_) {
    mpq_class term(c);
    for (int v = 1; v <= m_; ++v) {
      for (int i = 0; i < mono.p_exp(v); ++i) term *= p[v - 1];
      for (int i = 0; i < mono.q_exp(v); ++i) term *= q[v - 1];
    }
    total += term;
  }
  return total;
}

std::string PQPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    mpz_class a = abs(c);
    bool printed = false;
    if (a != 1) {
      os << a.get_str();
      printed = true;
    }
    for (int v = 1; v <= m_; ++v) {
      if (int e = mono.p_exp(v); e) {
        if (printed) os << ' ';
        os << 'p' << v;
        if (e > 1) os << '^' << e;
        printed = true;
      }
    }
    for (int v = 1; v <= m_; ++v) {
      if (int e = mono.q_exp(v); e) {
        if (printed) os << ' ';
        os << 'q' << v;
        if (e > 1) os << '^' << e;
        printed = true;
      }
    }
    if (!printed) os << '1';
  }
  return os.str();
}

}  // namespace kerov
