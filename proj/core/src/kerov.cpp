#include "kerov/kerov.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "kerov/bicolored_map.hpp"
#include "kerov/exact_linear.hpp"
#include "kerov/nseries.hpp"
#include "kerov/parallel.hpp"

namespace kerov {

namespace {

// Signed sum of N over factorizations of sigma; sign_offset is added to
// |C(tau)| in the sign exponent.
PQPolynomial factorization_sum(const Permutation& sigma, int truncation, int sign_offset,
                               bool transitive_only, unsigned threads) {
  const int k = sigma.degree();
  if (k == 0) return PQPolynomial::one(truncation);
  const std::uint64_t total = factorial(k);

  auto shard = [&](std::uint64_t lo, std::uint64_t hi) {
    PQPolynomial acc(truncation);
    std::vector<int> one_line = nth_permutation_lex(k, lo).images();
    for (std::uint64_t i = lo; i < hi; ++i) {
      Permutation tau{one_line};
      Permutation taubar = tau.inverse() * sigma;
      if (!transitive_only || is_transitive(tau, taubar)) {
        BicoloredMap m = build_map(tau, taubar);
        PQPolynomial n = n_of_graph(m, truncation);
        int sign = ((tau.cycle_count() + sign_offset) % 2 == 0) ? 1 : -1;
        if (sign > 0)
          acc += n;
        else
          acc -= n;
      }
      std::next_permutation(one_line.begin(), one_line.end());
    }
    return acc;
  };
  return parallel_reduce(
      std::uint64_t{0}, total, threads, PQPolynomial(truncation), shard,
      [](PQPolynomial a, PQPolynomial b) {
        a += b;
        return a;
      });
}

}  // namespace

PQPolynomial sigma_poly(const CycleType& mu, int truncation, unsigned threads) {
  return factorization_sum(canonical_of_type(mu), truncation, mu.length(), false, threads);
}

PQPolynomial sigma_prime_poly(const CycleType& mu, int truncation, unsigned threads) {
  return factorization_sum(canonical_of_type(mu), truncation, 1, true, threads);
}

PQPolynomial free_cumulant_poly(int j, int truncation, unsigned threads) {
  if (j < 2) throw std::invalid_argument("free cumulants start at R_2");
  const int l = j - 1;
  std::vector<int> cyc(static_cast<std::size_t>(l));
  std::iota(cyc.begin(), cyc.end(), 1);
  Permutation full_cycle = Permutation::from_cycles(l, {cyc});
  std::vector<NonCrossingPartition> all = enumerate_noncrossing(l);
  auto shard = [&](std::uint64_t lo, std::uint64_t hi) {
    PQPolynomial acc(truncation);
    for (std::uint64_t i = lo; i < hi; ++i) {
      const auto& pi = all[static_cast<std::size_t>(i)];
      Permutation tau = nc_to_perm(pi);
      Permutation taubar = tau.inverse() * full_cycle;
      PQPolynomial n = n_of_graph(build_map(tau, taubar), truncation);
      if (pi.block_count() % 2 == 1)
        acc += n;
      else
        acc -= n;
    }
    return acc;
  };
  return parallel_reduce(
      std::uint64_t{0}, static_cast<std::uint64_t>(all.size()), threads,
      PQPolynomial(truncation), shard, [](PQPolynomial a, PQPolynomial b) {
        a += b;
        return a;
      });
}

namespace {

// multisets of integers >= 2 summing to w, each sorted ascending
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

std::vector<RMonomial> r_monomials_of_weight(int w, int max_index) {
  std::vector<std::vector<int>> raw;
  std::vector<int> stack;
  weight_partitions(w, 2, stack, raw);
  std::vector<RMonomial> out;
  out.reserve(raw.size());
  for (auto& idx : raw) {
    if (max_index > 0 && idx.back() > max_index) continue;
    out.push_back(RMonomial(std::move(idx)));
  }
  return out;
}

// Expansions of R-monomials recur across every change of basis; keep them in
// a process-wide store with atomic get-or-compute semantics.
const PQPolynomial& expand_r_monomial(const RMonomial& mono, int truncation, unsigned threads) {
  static std::map<std::pair<std::vector<int>, int>, PQPolynomial> cache;
  static std::mutex cache_mutex;
  auto key = std::make_pair(mono.indices, truncation);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  PQPolynomial out = PQPolynomial::one(truncation);
  if (mono.indices.size() == 1) {
    out = free_cumulant_poly(mono.indices[0], truncation, threads);
  } else if (mono.indices.size() > 1) {
    // peel one factor and reuse the cached rest
    std::vector<int> rest(mono.indices.begin(), mono.indices.end() - 1);
    const PQPolynomial& head = expand_r_monomial(RMonomial(rest), truncation, threads);
    const PQPolynomial& last =
        expand_r_monomial(RMonomial({mono.indices.back()}), truncation, threads);
    out = head * last;
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

// Solve the rectangular system on a strided subsample of the rows, then
// verify the candidate against the full system; escalate to the full
// elimination only if sampling keeps hitting singular subsystems.
std::vector<mpq_class> solve_sampled(const std::vector<std::vector<mpz_class>>& a,
                                     const std::vector<mpz_class>& b) {
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  for (std::size_t factor = 4; factor * cols < rows; factor *= 4) {
    std::size_t want = factor * cols;
    std::size_t stride = rows / want;
    std::vector<std::vector<mpz_class>> sub_a;
    std::vector<mpz_class> sub_b;
    for (std::size_t i = 0; i < rows; i += stride) {
      sub_a.push_back(a[i]);
      sub_b.push_back(b[i]);
    }
    try {
      return solve_exact(std::move(sub_a), std::move(sub_b));
    } catch (const singular_system&) {
      // subsample too thin; widen
    }
  }
  return solve_exact(a, b);
}

}  // namespace

RPolynomial express_in_R(const PQPolynomial& poly, int max_weight, int max_index,
                         unsigned threads) {
  const int m = poly.truncation();
  RPolynomial result;

  for (int w : poly.degrees_present()) {
    if (w < 2 || w > max_weight) {
      std::ostringstream os;
      os << "polynomial has a homogeneous component of degree " << w
         << " outside the R-algebra range [2, " << max_weight << "]";
      throw solve_error(os.str());
    }
    PQPolynomial target = poly.homogeneous_component(w);
    std::vector<RMonomial> basis = r_monomials_of_weight(w, max_index);
    if (basis.empty()) throw solve_error("no generators available for a nonzero component");
    std::vector<const PQPolynomial*> expansions;
    expansions.reserve(basis.size());
    for (const auto& mono : basis) expansions.push_back(&expand_r_monomial(mono, m, threads));

    // row index per pq-monomial appearing anywhere
    std::map<PQMonomial, std::size_t> row_of;
    for (const auto* e : expansions)
      for (const auto& [mono, c] : e->terms()) row_of.emplace(mono, row_of.size());
    for (const auto& [mono, c] : target.terms()) row_of.emplace(mono, row_of.size());

    const std::size_t rows = row_of.size(), cols = basis.size();
    if (rows < cols)
      throw solve_error("underdetermined change of basis; increase the truncation level");
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols, 0));
    std::vector<mpz_class> b(rows, 0);
    for (std::size_t col = 0; col < cols; ++col)
      for (const auto& [mono, c] : expansions[col]->terms()) a[row_of[mono]][col] = c;
    for (const auto& [mono, c] : target.terms()) b[row_of[mono]] = c;

    std::vector<mpq_class> x;
    try {
      x = solve_sampled(a, b);
    } catch (const singular_system&) {
      std::ostringstream os;
      os << "R-monomials of weight " << w << " are not independent at truncation " << m
         << "; increase the truncation level";
      throw solve_error(os.str());
    }

    // verify residual and integrality on the full system
    PQPolynomial recombined(m);
    RPolynomial component;
    for (std::size_t col = 0; col < cols; ++col) {
      if (x[col] == 0) continue;
      if (x[col].get_den() != 1)
        throw solve_error("non-integer coefficient; input is not an integer R-polynomial");
      recombined += *expansions[col] * x[col].get_num();
      component.add_term(basis[col], x[col].get_num());
    }
    if (!(recombined == target))
      throw solve_error("nonzero residual; input does not lie in the R-algebra");
    result += component;
  }
  return result;
}

RPolynomial kerov_polynomial(int k, unsigned threads) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  CycleType mu = CycleType::of({k});
  return express_in_R(sigma_poly(mu, k, threads), k + 1, k + 1, threads);
}

RPolynomial generalized_kerov(const CycleType& mu, unsigned threads) {
  if (mu.empty()) throw std::invalid_argument("mu must be nonempty");
  int m = std::max(1, mu.weight());
  return express_in_R(sigma_poly(mu, m, threads), mu.weight() + mu.length(),
                      mu.weight() + 1, threads);
}

RPolynomial positive_kerov(const CycleType& mu, unsigned threads) {
  if (mu.empty()) throw std::invalid_argument("mu must be nonempty");
  int m = std::max(1, mu.weight());
  return express_in_R(sigma_prime_poly(mu, m, threads), mu.weight() + 2 - mu.length(),
                      mu.weight() + 1, threads);
}

namespace {

// set partitions of [n] as restricted growth strings
std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(rgs);
    int i = n - 1;
    while (i > 0) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) break;
      --i;
    }
    if (i <= 0) break;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

}  // namespace

RPolynomial sigma_from_sigma_prime(const CycleType& mu, unsigned threads) {
  if (mu.empty()) throw std::invalid_argument("mu must be nonempty");
  const auto& parts = mu.parts();
  const int l = mu.length();

  std::map<std::vector<int>, RPolynomial> prime_cache;
  auto prime_of = [&](std::vector<int> sub) -> const RPolynomial& {
    std::sort(sub.begin(), sub.end(), std::greater<int>());
    auto it = prime_cache.find(sub);
    if (it == prime_cache.end())
      it = prime_cache.emplace(sub, positive_kerov(CycleType::of(sub), threads)).first;
    return it->second;
  };

  RPolynomial total;
  for (const auto& rgs : set_partitions(l)) {
    int block_count = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(block_count));
    for (int i = 0; i < l; ++i) blocks[rgs[i]].push_back(parts[i]);
    RPolynomial product = RPolynomial::one();
    for (const auto& block : blocks) {
      RPolynomial factor = prime_of(block);
      if (block.size() % 2 == 0) factor = -factor;
      product = product * factor;
    }
    total += product;
  }
  return total;
}

}  // namespace kerov
