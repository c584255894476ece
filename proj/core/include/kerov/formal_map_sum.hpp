#pragma once

/// Integer-weighted formal sum of submaps of a fixed parent map.  A term is
/// keyed by the set of erased edges, so two terms are equal exactly when
/// they are equal as submaps of the parent, never merely isomorphic.

#include <map>
#include <vector>

#include <gmpxx.h>

#include "kerov/bicolored_map.hpp"

namespace kerov {

class FormalMapSum {
public:
  explicit FormalMapSum(BicoloredMap parent) : parent_(std::move(parent)) {}

  const BicoloredMap& parent() const { return parent_; }
  const std::map<EdgeSet, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(EdgeSet erased, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(erased);
    if (it == terms_.end()) {
      terms_.emplace(erased, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  mpz_class coefficient(EdgeSet erased) const {
    auto it = terms_.find(erased);
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  mpz_class coefficient_sum() const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  /// Sorted labels of the erased edges of a term key.
  std::vector<int> erased_labels(EdgeSet erased) const { return parent_.labels_of(erased); }

  /// Terms share the parent; equality compares term maps.
  bool same_terms(const FormalMapSum& rhs) const { return terms_ == rhs.terms_; }

private:
  BicoloredMap parent_;
  std::map<EdgeSet, mpz_class> terms_;
};

}  // namespace kerov
