#include "kerov/closedform.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "kerov/parallel.hpp"

namespace kerov {

namespace {

void check_cap(int k, int cap) {
  if (k > cap) throw std::invalid_argument("enumeration degree exceeds the configured cap");
}

// |Perm(j)|: distinct orderings of the multiset, t! / prod multiplicity!
mpz_class orderings(const RMonomial& mono) {
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(mono.factor_count()));
  std::map<int, int> mult;
  for (int i : mono.indices) ++mult[i];
  for (const auto& [idx, m] : mult) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    num /= f;
  }
  return num;
}

}  // namespace

mpz_class linear_coefficient(const CycleType& mu, int d, unsigned threads, int enumeration_cap) {
  if (d < 2) throw std::invalid_argument("linear coefficients start at R_2");
  const int k = mu.weight();
  check_cap(k, enumeration_cap);
  if (k == 0) return 0;
  const Permutation sigma = canonical_of_type(mu);
  const int wanted_cycles = d - 1;

  auto shard = [&](std::uint64_t lo, std::uint64_t hi) {
    long long count = 0;
    std::vector<int> one_line = nth_permutation_lex(k, lo).images();
    for (std::uint64_t i = lo; i < hi; ++i) {
      Permutation tau{one_line};
      if (tau.cycle_count() == wanted_cycles) {
        Permutation taubar = tau.inverse() * sigma;
        if (taubar.cycle_count() == 1) ++count;
      }
      std::next_permutation(one_line.begin(), one_line.end());
    }
    return count;
  };
  long long total = parallel_reduce(std::uint64_t{0}, factorial(k), threads, 0LL, shard,
                                    [](long long a, long long b) { return a + b; });
  return mpz_class(static_cast<long>(total));
}

mpq_class quadratic_coefficient(const CycleType& mu, int j, int l, unsigned threads,
                                int enumeration_cap) {
  if (j < 2 || l < 2) throw std::invalid_argument("quadratic coefficients start at R_2");
  const int k = mu.weight();
  check_cap(k, enumeration_cap);
  if (k == 0) return 0;
  const Permutation sigma = canonical_of_type(mu);
  const int wanted_cycles = j + l - 2;

  auto shard = [&](std::uint64_t lo, std::uint64_t hi) {
    long long count = 0;
    std::vector<int> one_line = nth_permutation_lex(k, lo).images();
    for (std::uint64_t i = lo; i < hi; ++i) {
      Permutation tau{one_line};
      std::next_permutation(one_line.begin(), one_line.end());
      if (tau.cycle_count() != 2) continue;
      Permutation taubar = tau.inverse() * sigma;
      if (taubar.cycle_count() != wanted_cycles) continue;
      if (!is_transitive(tau, taubar)) continue;

      auto tau_cycles = tau.cycles();
      std::vector<char> in_first(static_cast<std::size_t>(k) + 1, 0);
      for (int x : tau_cycles[0]) in_first[x] = 1;
      int meet_first = 0, meet_second = 0;
      for (const auto& cyc : taubar.cycles()) {
        bool first = false, second = false;
        for (int x : cyc) (in_first[x] ? first : second) = true;
        meet_first += first;
        meet_second += second;
      }
      // the two numberings phi of tau's cycles
      if (meet_first >= j && meet_second >= l) ++count;
      if (meet_first >= l && meet_second >= j) ++count;
    }
    return count;
  };
  long long total = parallel_reduce(std::uint64_t{0}, factorial(k), threads, 0LL, shard,
                                    [](long long a, long long b) { return a + b; });
  mpq_class value(static_cast<long>(total));
  if (j == l) value /= 2;
  if (value.get_den() != 1) throw std::logic_error("halved quadratic count must stay integral");
  return value;
}

mpq_class top_term_coefficient(int k, const RMonomial& mono) {
  int weight = mono.weight();
  if (weight != k - 1) throw std::invalid_argument("monomial weight must be k-1");
  mpq_class value(mpz_class(k - 1) * k * (k + 1), 24);
  value.canonicalize();
  value *= orderings(mono);
  for (int i : mono.indices) value *= (i - 1);
  return value;
}

mpz_class count_bounded_solutions(const std::vector<long>& bounds, long target) {
  if (target < 0) return 0;
  for (long b : bounds)
    if (b < 0) return 0;
  std::vector<mpz_class> dp(static_cast<std::size_t>(target) + 1, 0);
  dp[0] = 1;
  for (long b : bounds) {
    std::vector<mpz_class> next(dp.size(), 0);
    for (long s = 0; s <= target; ++s) {
      if (dp[s] == 0) continue;
      for (long x = 0; x <= b && s + x <= target; ++x) next[s + x] += dp[s];
    }
    dp = std::move(next);
  }
  return dp[static_cast<std::size_t>(target)];
}

mpq_class two_part_top_coefficient(int r, int s, const RMonomial& mono) {
  if (r < 1 || s < 1) throw std::invalid_argument("parts must be positive");
  if (mono.weight() != r + s) throw std::invalid_argument("monomial weight must be r+s");
  const int t = mono.factor_count();
  std::vector<long> bounds;
  for (int i : mono.indices) bounds.push_back(i - 2);
  mpq_class value(mpz_class(r) * s, t);
  value.canonicalize();
  value *= orderings(mono);
  value *= count_bounded_solutions(bounds, r - t);
  return value;
}

namespace {

void weight_partitions(int w, int min_part, std::vector<int>& stack,
                       std::vector<std::vector<int>>& out) {
  if (w == 0) {
    out.push_back(stack);
    return;
  }
  for (int part = min_part; part <= w; ++part) {
    stack.push_back(part);
    weight_partitions(w - part, part, stack, out);
    stack.pop_back();
  }
}

// subdominant graded component of K_k from the closed form
RPolynomial one_part_correction(int k) {
  RPolynomial out;
  if (k < 3) return out;
  std::vector<std::vector<int>> monos;
  std::vector<int> stack;
  weight_partitions(k - 1, 2, stack, monos);
  for (auto& idx : monos) {
    RMonomial mono(std::move(idx));
    mpq_class c = top_term_coefficient(k, mono);
    if (c.get_den() != 1) throw std::logic_error("subdominant coefficient must be integral");
    out.add_term(mono, c.get_num());
  }
  return out;
}

// top graded component of K'_{r,s} from the closed form
RPolynomial pair_correction(int r, int s) {
  RPolynomial out;
  std::vector<std::vector<int>> monos;
  std::vector<int> stack;
  weight_partitions(r + s, 2, stack, monos);
  for (auto& idx : monos) {
    RMonomial mono(std::move(idx));
    mpq_class c = two_part_top_coefficient(r, s, mono);
    if (c.get_den() != 1) throw std::logic_error("pair coefficient must be integral");
    out.add_term(mono, c.get_num());
  }
  return out;
}

}  // namespace

RPolynomial subdominant_expansion(const CycleType& mu) {
  const auto& parts = mu.parts();
  const int r = mu.length();

  auto leading_product_excluding = [&](int skip1, int skip2) {
    RPolynomial prod = RPolynomial::one();
    for (int h = 0; h < r; ++h)
      if (h != skip1 && h != skip2) prod = prod * RPolynomial::generator(parts[h] + 1);
    return prod;
  };

  RPolynomial total = leading_product_excluding(-1, -1);
  for (int i = 0; i < r; ++i)
    total += leading_product_excluding(i, -1) * one_part_correction(parts[i]);
  for (int i1 = 0; i1 < r; ++i1)
    for (int i2 = i1 + 1; i2 < r; ++i2)
      total -= leading_product_excluding(i1, i2) * pair_correction(parts[i1], parts[i2]);
  return total;
}

}  // namespace kerov
