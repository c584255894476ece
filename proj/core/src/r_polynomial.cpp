#include "kerov/r_polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kerov {

RMonomial::RMonomial(std::vector<int> idx) : indices(std::move(idx)) {
  for (int i : indices)
    if (i < 2) throw std::invalid_argument("cumulant indices start at 2");
  std::sort(indices.begin(), indices.end());
}

int RMonomial::weight() const { return std::accumulate(indices.begin(), indices.end(), 0); }

bool RMonomialOrder::operator()(const RMonomial& a, const RMonomial& b) const {
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa > wb;
  return std::lexicographical_compare(b.indices.begin(), b.indices.end(),
                                      a.indices.begin(), a.indices.end());
}

RPolynomial RPolynomial::one() {
  RPolynomial p;
  p.terms_[RMonomial{}] = 1;
  return p;
}

RPolynomial RPolynomial::generator(int index) {
  RPolynomial p;
  p.terms_[RMonomial({index})] = 1;
  return p;
}

mpz_class RPolynomial::coefficient(const RMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void RPolynomial::add_term(const RMonomial& mono, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RPolynomial& RPolynomial::operator+=(const RPolynomial& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

RPolynomial& RPolynomial::operator-=(const RPolynomial& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

RPolynomial RPolynomial::operator+(const RPolynomial& rhs) const {
  RPolynomial out = *this;
  out += rhs;
  return out;
}

RPolynomial RPolynomial::operator-(const RPolynomial& rhs) const {
  RPolynomial out = *this;
  out -= rhs;
  return out;
}

RPolynomial RPolynomial::operator*(const RPolynomial& rhs) const {
  RPolynomial out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      std::vector<int> idx = ma.indices;
      idx.insert(idx.end(), mb.indices.begin(), mb.indices.end());
      out.add_term(RMonomial(std::move(idx)), ca * cb);
    }
  }
  return out;
}

RPolynomial RPolynomial::operator*(const mpz_class& scalar) const {
  RPolynomial out;
  if (scalar == 0) return out;
  for (const auto& [mono, c] : terms_) out.terms_[mono] = c * scalar;
  return out;
}

RPolynomial RPolynomial::operator-() const { return *this * mpz_class(-1); }

int RPolynomial::max_weight() const {
  return terms_.empty() ? 0 : terms_.begin()->first.weight();
}

RPolynomial RPolynomial::weight_component(int w) const {
  RPolynomial out;
  for (const auto& [mono, c] : terms_)
    if (mono.weight() == w) out.terms_[mono] = c;
  return out;
}

std::string RPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    mpz_class a = abs(c);
    bool need_coeff = (a != 1) || mono.is_one();
    if (need_coeff) os << a.get_str();
    // group equal indices into powers, ascending
    bool printed = need_coeff;
    for (std::size_t i = 0; i < mono.indices.size();) {
      std::size_t j = i;
      while (j < mono.indices.size() && mono.indices[j] == mono.indices[i]) ++j;
      if (printed) os << ' ';
      os << 'R' << mono.indices[i];
      if (j - i > 1) os << '^' << (j - i);
      printed = true;
      i = j;
    }
  }
  return os.str();
}

PositivityReport verify_positivity(const RPolynomial& p) {
  PositivityReport report;
  for (const auto& [mono, c] : p.terms()) {
    if (c < 0) {
      report.non_negative = false;
      report.violations.emplace_back(mono, c);
    }
  }
  return report;
}

}  // namespace kerov
