#pragma once

/// Permutations of [k] = {1,...,k}, cycle structure, the absolute-length
/// partial order, non-crossing partitions and the minimal-factorization
/// bijection.
///
/// Composition acts right to left: (a * b)(x) = a(b(x)).  All factorization
/// pairs produced in this library are of the form (tau, tau^{-1} * sigma),
/// so that tau * taubar == sigma under this convention.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kerov {

/// Weakly decreasing partition recording the cycle lengths of a permutation.
class CycleType {
public:
  CycleType() = default;

  /// Builds from any list of positive parts; parts are sorted decreasingly.
  static CycleType of(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  bool operator==(const CycleType&) const = default;
  auto operator<=>(const CycleType&) const = default;

  std::string to_string() const;

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

class Permutation {
public:
  /// Identity on [degree].
  explicit Permutation(int degree);

  /// From one-line form: images[i-1] is the image of i (1-based values).
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }
  static Permutation transposition(int degree, int a, int b);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  /// Parses cycle notation such as "(1 5)(2 7)(3)(4 8 6)".  Elements may be
  /// separated by spaces or commas.  Rejects repeated elements.  If degree is
  /// zero the degree is inferred as the largest element mentioned.
  static Permutation parse_cycles(const std::string& text, int degree = 0);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;  // (a*b)(x) = a(b(x))
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  bool is_identity() const;

  /// Cycles in canonical form: each cycle starts at its minimal element and
  /// cycles are listed by increasing minimum.  Fixed points appear as
  /// singleton cycles.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  CycleType cycle_type() const;

  std::string cycle_string() const;

private:
  std::vector<int> images_;
};

/// degree - number of cycles; the minimal number of transpositions with
/// product p.
int absolute_length(const Permutation& p);

/// Absolute order: p <= q iff l(q) = l(p) + l(p^{-1} q).  Throws on degree
/// mismatch.
bool leq(const Permutation& p, const Permutation& q);

/// True iff the group generated by {tau, taubar} has a single orbit on [k].
bool is_transitive(const Permutation& tau, const Permutation& taubar);

/// Canonical permutation of the given type: cycles laid consecutively on
/// [k], largest part first, e.g. (3,2) -> (1 2 3)(4 5).
Permutation canonical_of_type(const CycleType& mu);

/// Set partition of [j] with no crossing a < b < c < d (a,c in one block,
/// b,d in another).  Construction validates the invariant.
class NonCrossingPartition {
public:
  NonCrossingPartition(std::vector<std::vector<int>> blocks, int ground_size);

  static bool crossing_free(const std::vector<std::vector<int>>& blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int ground_size() const { return ground_size_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  /// Refinement order: every block of *this contained in a block of rhs.
  bool refines(const NonCrossingPartition& rhs) const;

  bool operator==(const NonCrossingPartition&) const = default;

private:
  std::vector<std::vector<int>> blocks_;  // each sorted, ordered by minimum
  int ground_size_ = 0;
};

/// All of NC(j), by brute-force crossing checks over set partitions.
std::vector<NonCrossingPartition> enumerate_noncrossing(int j);

/// sigma_pi: i maps to the next element of its block in the cyclic order
/// (1,2,...,j).  The cycles of the result are exactly the blocks of pi and
/// sigma_pi <= (1 ... j).
Permutation nc_to_perm(const NonCrossingPartition& pi);

/// Inverse of nc_to_perm; requires p <= (1 2 ... j) in the absolute order.
NonCrossingPartition perm_to_nc(const Permutation& p);

std::uint64_t factorial(int n);

/// The index-th permutation of [degree] in lexicographic one-line order.
Permutation nth_permutation_lex(int degree, std::uint64_t index);

/// Calls fn(tau, taubar) for every tau in S(k) in lexicographic one-line
/// order, with taubar = tau^{-1} * sigma; exactly k! pairs, each of product
/// sigma.
void for_each_factorization(const Permutation& sigma,
                            const std::function<void(const Permutation&, const Permutation&)>& fn);

/// All k! factorization pairs of sigma in the deterministic stream order.
std::vector<std::pair<Permutation, Permutation>>
enumerate_factorizations(const Permutation& sigma);

/// All partitions of n as cycle types, parts decreasing, in a deterministic
/// order.
std::vector<CycleType> partitions_of(int n);

}  // namespace kerov
