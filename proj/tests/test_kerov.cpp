#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kerov/json_io.hpp"
#include "kerov/kerov.hpp"
#include "kerov/nseries.hpp"
#include "kerov/oracle.hpp"
#include "testutil.hpp"

using namespace kerov;

namespace {

RPolynomial r_poly(const std::vector<std::pair<std::vector<int>, long>>& terms) {
  RPolynomial out;
  for (const auto& [indices, c] : terms) out.add_term(RMonomial(indices), c);
  return out;
}

PQPolynomial pq(int m, const std::vector<std::tuple<std::vector<int>, std::vector<int>, long>>& terms) {
  PQPolynomial out(m);
  for (const auto& [pe, qe, c] : terms) {
    PQMonomial mono;
    for (std::size_t i = 0; i < pe.size(); ++i)
      for (int rep = 0; rep < pe[i]; ++rep) mono.p_bits += PQMonomial::unit(static_cast<int>(i) + 1);
    for (std::size_t i = 0; i < qe.size(); ++i)
      for (int rep = 0; rep < qe[i]; ++rep) mono.q_bits += PQMonomial::unit(static_cast<int>(i) + 1);
    out.add_term(mono, c);
  }
  return out;
}

std::vector<mpq_class> rationals(const std::vector<long>& v, std::size_t len) {
  std::vector<mpq_class> out(len, 0);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

}  // namespace

TEST_CASE("sigma polynomials on tiny types") {
  CHECK(sigma_poly(CycleType::of({1}), 2) ==
        pq(2, {{{1, 0}, {1, 0}, 1}, {{1, 0}, {0, 1}, 1}, {{0, 1}, {0, 1}, 1}}));
  CHECK(sigma_poly(CycleType::of({2}), 1) == pq(1, {{{1}, {2}, 1}, {{2}, {1}, -1}}));
}

TEST_CASE("sigma evaluations match the character oracle on (3,1)") {
  YoungDiagram lambda = diagram_from_pq({1, 1}, {2, 1});
  REQUIRE(lambda == YoungDiagram({3, 1}));
  auto pe = rationals({1, 1}, 2), qe = rationals({2, 1}, 2);
  for (int k : {2, 3, 4}) {
    CycleType mu = CycleType::of({k});
    int m = std::max(2, k);
    auto pm = rationals({1, 1}, static_cast<std::size_t>(m));
    auto qm = rationals({2, 1}, static_cast<std::size_t>(m));
    CHECK(sigma_poly(mu, m).evaluate(pm, qm) == normalized_character(lambda, mu));
  }
  CHECK(sigma_poly(CycleType::of({4}), 4).evaluate(rationals({1, 1}, 4), rationals({2, 1}, 4)) ==
        -8);
}

TEST_CASE("sigma_prime equals sigma for one-part types") {
  for (int k = 1; k <= 4; ++k)
    CHECK(sigma_prime_poly(CycleType::of({k}), k) == sigma_poly(CycleType::of({k}), k));
}

TEST_CASE("free cumulant polynomials") {
  CHECK(free_cumulant_poly(2, 2) ==
        pq(2, {{{1, 0}, {1, 0}, 1}, {{1, 0}, {0, 1}, 1}, {{0, 1}, {0, 1}, 1}}));
  CHECK(free_cumulant_poly(3, 1) == pq(1, {{{1}, {2}, 1}, {{2}, {1}, -1}}));
  SUBCASE("numeric values at (3,1)") {
    auto pe = rationals({1, 1}, 2), qe = rationals({2, 1}, 2);
    const std::vector<long> expected{0, 0, 4, 4, -4, -28};
    for (int j = 2; j <= 5; ++j)
      CHECK(free_cumulant_poly(j, 2).evaluate(pe, qe) == expected[static_cast<std::size_t>(j)]);
  }
  SUBCASE("homogeneous of degree j") {
    for (int j = 2; j <= 6; ++j) {
      PQPolynomial r = free_cumulant_poly(j, 3);
      for (const auto& [mono, c] : r.terms()) CHECK(mono.total_degree() == j);
    }
  }
  CHECK_THROWS_AS(free_cumulant_poly(1, 2), std::invalid_argument);
}

TEST_CASE("express_in_R") {
  SUBCASE("identity on the generators") {
    for (int j = 2; j <= 5; ++j)
      CHECK(express_in_R(free_cumulant_poly(j, j), j) == RPolynomial::generator(j));
  }
  SUBCASE("the first Kerov polynomials") {
    CHECK(express_in_R(sigma_poly(CycleType::of({3}), 3), 4) == r_poly({{{4}, 1}, {{2}, 1}}));
    CHECK(express_in_R(sigma_poly(CycleType::of({5}), 5), 6) ==
          r_poly({{{6}, 1}, {{4}, 15}, {{2, 2}, 5}, {{2}, 8}}));
  }
  SUBCASE("round trip: expanding the output reproduces the input") {
    testutil::Rng rng(606);
    for (int trial = 0; trial < 5; ++trial) {
      int k = 2 + static_cast<int>(rng() % 3);
      PQPolynomial input = sigma_poly(CycleType::of({k}), k);
      RPolynomial solved = express_in_R(input, k + 1);
      PQPolynomial expanded(input.truncation());
      for (const auto& [mono, c] : solved.terms()) {
        PQPolynomial term = PQPolynomial::one(input.truncation());
        for (int j : mono.indices) term = term * free_cumulant_poly(j, input.truncation());
        expanded += term * c;
      }
      CHECK(expanded == input);
    }
  }
  SUBCASE("rejects polynomials outside the R algebra") {
    CHECK_THROWS_AS(express_in_R(PQPolynomial::p_var(1, 2), 4), solve_error);
    PQPolynomial bad = pq(2, {{{1, 0}, {1, 0}, 1}});  // p1 q1 alone
    CHECK_THROWS_AS(express_in_R(bad, 4), solve_error);
  }
  SUBCASE("scalar multiples of generators") {
    PQPolynomial r2 = free_cumulant_poly(2, 2);
    CHECK(express_in_R(r2 * mpz_class(3), 2) == RPolynomial::generator(2) * mpz_class(3));
    CHECK(express_in_R(r2 - r2, 2) == RPolynomial::zero());
  }
  SUBCASE("truncation too small to separate the basis is reported") {
    CHECK_THROWS_AS(express_in_R(sigma_poly(CycleType::of({7}), 1), 8, 8), solve_error);
    // two variables already separate every weight up to 8; the residual
    // check guarantees the solved polynomial whenever the solve succeeds
    CHECK(express_in_R(sigma_poly(CycleType::of({7}), 2), 8, 8) ==
          r_poly({{{8}, 1},
                  {{6}, 70},
                  {{3, 3}, 56},
                  {{2, 4}, 84},
                  {{2, 2, 2}, 14},
                  {{4}, 469},
                  {{2, 2}, 224},
                  {{2}, 180}}));
  }
}

TEST_CASE("Kerov polynomials, known values") {
  CHECK(kerov_polynomial(1) == r_poly({{{2}, 1}}));
  CHECK(kerov_polynomial(2) == r_poly({{{3}, 1}}));
  CHECK(kerov_polynomial(3) == r_poly({{{4}, 1}, {{2}, 1}}));
  CHECK(kerov_polynomial(4) == r_poly({{{5}, 1}, {{3}, 5}}));
  CHECK(kerov_polynomial(5) == r_poly({{{6}, 1}, {{4}, 15}, {{2, 2}, 5}, {{2}, 8}}));
  CHECK_THROWS_AS(kerov_polynomial(0), std::invalid_argument);
}

TEST_CASE("generalized Kerov polynomials, known values") {
  CHECK(generalized_kerov(CycleType::of({2, 2})) ==
        r_poly({{{3, 3}, 1}, {{4}, -4}, {{2, 2}, -2}, {{2}, -2}}));
  CHECK(generalized_kerov(CycleType::of({3, 2})) ==
        r_poly({{{3, 4}, 1}, {{2, 3}, -5}, {{5}, -6}, {{3}, -18}}));
  CHECK(generalized_kerov(CycleType::of({2, 2, 2})) ==
        r_poly({{{3, 3, 3}, 1}, {{3, 4}, -12}, {{2, 2, 3}, -6}, {{2, 3}, 58}, {{5}, 40}, {{3}, 80}}));
}

TEST_CASE("positive Kerov polynomials, known values") {
  CHECK(positive_kerov(CycleType::of({2, 2})) == r_poly({{{4}, 4}, {{2, 2}, 2}, {{2}, 2}}));
  CHECK(positive_kerov(CycleType::of({3, 2})) == r_poly({{{2, 3}, 6}, {{5}, 6}, {{3}, 18}}));
  CHECK(positive_kerov(CycleType::of({2, 2, 2})) ==
        r_poly({{{2, 3}, 64}, {{5}, 40}, {{3}, 80}}));
  SUBCASE("one-part types reduce to K_k") {
    for (int k = 1; k <= 5; ++k)
      CHECK(positive_kerov(CycleType::of({k})) == kerov_polynomial(k));
  }
}

TEST_CASE("sigma from sigma-prime") {
  SUBCASE("two equal parts") {
    RPolynomial k2 = positive_kerov(CycleType::of({2}));
    RPolynomial k22 = positive_kerov(CycleType::of({2, 2}));
    CHECK(sigma_from_sigma_prime(CycleType::of({2, 2})) == k2 * k2 - k22);
  }
  SUBCASE("single part is the identity") {
    for (int k = 1; k <= 5; ++k)
      CHECK(sigma_from_sigma_prime(CycleType::of({k})) == kerov_polynomial(k));
  }
  SUBCASE("matches the direct computation") {
    for (const auto& mu : {CycleType::of({2, 2, 2}), CycleType::of({3, 2}),
                           CycleType::of({2, 1}), CycleType::of({1, 1, 1})})
      CHECK(sigma_from_sigma_prime(mu) == generalized_kerov(mu));
  }
}

TEST_CASE("positivity verification") {
  CHECK(verify_positivity(kerov_polynomial(5)).non_negative);
  auto report = verify_positivity(generalized_kerov(CycleType::of({2, 2})));
  CHECK_FALSE(report.non_negative);
  bool found = false;
  for (const auto& [mono, c] : report.violations)
    if (mono == RMonomial({4}) && c == -4) found = true;
  CHECK(found);
  CHECK(verify_positivity(RPolynomial::zero()).non_negative);
}

TEST_CASE("structure of K_k") {
  for (int k = 1; k <= 6; ++k) {
    RPolynomial poly = kerov_polynomial(k);
    SUBCASE("top graded component is R_{k+1}") {
      CHECK(poly.weight_component(k + 1) == RPolynomial::generator(k + 1));
    }
    for (const auto& [mono, c] : poly.terms()) {
      CHECK(mono.weight() % 2 == (k + 1) % 2);  // parity gap
      CHECK(c > 0);
    }
  }
}

TEST_CASE("top weight of K'_mu is |mu| + 2 - parts") {
  for (int w = 2; w <= 5; ++w) {
    for (const auto& mu : partitions_of(w)) {
      RPolynomial prime = positive_kerov(mu);
      CHECK(prime.max_weight() == mu.weight() + 2 - mu.length());
    }
  }
}

TEST_CASE("random oracle equivalence, small") {
  testutil::Rng rng(112233);
  int checked = 0;
  while (checked < 25) {
    int len = 1 + static_cast<int>(rng() % 2);
    std::vector<long> p, q;
    for (int i = 0; i < len; ++i) {
      p.push_back(1 + static_cast<long>(rng() % 3));
      q.push_back(1 + static_cast<long>(rng() % 3));
    }
    YoungDiagram lambda = diagram_from_pq(p, q);
    int w = 1 + static_cast<int>(rng() % 4);
    if (lambda.n() < w) continue;
    auto mus = partitions_of(w);
    CycleType mu = mus[rng() % mus.size()];
    int m = std::max<int>(w, len);
    auto pe = rationals(p, static_cast<std::size_t>(m));
    auto qe = rationals(q, static_cast<std::size_t>(m));
    CHECK(sigma_poly(mu, m).evaluate(pe, qe) == normalized_character(lambda, mu));
    ++checked;
  }
}

TEST_CASE("sigma_poly does not depend on the representative of the type") {
  // recompute the signed factorization sum around a different sigma of the
  // same type and compare
  auto direct_sum = [](const Permutation& sigma, int r, int m) {
    PQPolynomial acc(m);
    for (const auto& [tau, taubar] : enumerate_factorizations(sigma)) {
      PQPolynomial n = n_of_graph(build_map(tau, taubar), m);
      if ((tau.cycle_count() + r) % 2 == 0)
        acc += n;
      else
        acc -= n;
    }
    return acc;
  };
  CHECK(direct_sum(Permutation::parse_cycles("(1 3)(2)"), 2, 3) ==
        sigma_poly(CycleType::of({2, 1}), 3));
  CHECK(direct_sum(Permutation::parse_cycles("(2 4)(1 3)"), 2, 4) ==
        sigma_poly(CycleType::of({2, 2}), 4));
  CHECK(direct_sum(Permutation::parse_cycles("(1 4 2)(3)"), 2, 4) ==
        sigma_poly(CycleType::of({3, 1}), 4));
}

TEST_CASE("threaded sums are deterministic") {
  CycleType mu = CycleType::of({3, 2});
  CHECK(sigma_poly(mu, 5, 1) == sigma_poly(mu, 5, 4));
  CHECK(sigma_prime_poly(mu, 5, 1) == sigma_prime_poly(mu, 5, 3));
  CHECK(free_cumulant_poly(6, 5, 1) == free_cumulant_poly(6, 5, 4));
}

TEST_CASE("RPolynomial rendering and JSON") {
  CHECK(kerov_polynomial(2).to_string() == "R3");
  CHECK(kerov_polynomial(5).to_string() == "R6 + 15 R4 + 5 R2^2 + 8 R2");
  CHECK(generalized_kerov(CycleType::of({2, 2})).to_string() ==
        "R3^2 - 4 R4 - 2 R2^2 - 2 R2");
  CHECK(RPolynomial::zero().to_string() == "0");
  RPolynomial k5 = kerov_polynomial(5);
  CHECK(r_polynomial_from_json(to_json(k5)) == k5);
}
