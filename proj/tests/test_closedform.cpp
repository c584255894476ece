#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kerov/closedform.hpp"
#include "kerov/kerov.hpp"
#include "testutil.hpp"

using namespace kerov;

TEST_CASE("linear coefficients, known values") {
  CHECK(linear_coefficient(CycleType::of({5}), 2) == 8);
  CHECK(linear_coefficient(CycleType::of({3}), 4) == 1);
  CHECK(linear_coefficient(CycleType::of({4}), 3) == 5);
}

TEST_CASE("linear coefficients match the solved polynomials up to k = 6") {
  for (int k = 1; k <= 6; ++k) {
    RPolynomial poly = kerov_polynomial(k);
    for (int d = 2; d <= k + 1; ++d)
      CHECK(linear_coefficient(CycleType::of({k}), d) == poly.coefficient(RMonomial({d})));
  }
}

TEST_CASE("linear coefficients match K' for two-part types") {
  for (const auto& mu : {CycleType::of({2, 2}), CycleType::of({3, 2}), CycleType::of({2, 1})}) {
    RPolynomial prime = positive_kerov(mu);
    for (int d = 2; d <= mu.weight() + 1; ++d)
      CHECK(linear_coefficient(mu, d) == prime.coefficient(RMonomial({d})));
  }
}

TEST_CASE("quadratic coefficients, known values") {
  CHECK(quadratic_coefficient(CycleType::of({5}), 2, 2) == 5);
  CHECK(quadratic_coefficient(CycleType::of({2, 2}), 2, 2) == 2);
  CHECK(quadratic_coefficient(CycleType::of({3, 2}), 2, 3) == 6);
}

TEST_CASE("quadratic coefficients match the solved polynomials up to k = 5") {
  for (int k = 2; k <= 5; ++k) {
    RPolynomial poly = kerov_polynomial(k);
    for (int j = 2; j <= k; ++j)
      for (int l = j; j + l <= k + 1; ++l)
        CHECK(quadratic_coefficient(CycleType::of({k}), j, l) ==
              mpq_class(poly.coefficient(RMonomial({j, l}))));
  }
}

TEST_CASE("top-term coefficients, known values") {
  CHECK(top_term_coefficient(5, RMonomial({4})) == 15);
  CHECK(top_term_coefficient(5, RMonomial({2, 2})) == 5);
  CHECK(top_term_coefficient(3, RMonomial({2})) == 1);
  CHECK_THROWS_AS(top_term_coefficient(5, RMonomial({2})), std::invalid_argument);
}

TEST_CASE("top-term coefficients match the solved subdominant component, k <= 6") {
  for (int k = 3; k <= 6; ++k) {
    RPolynomial poly = kerov_polynomial(k);
    RPolynomial sub = poly.weight_component(k - 1);
    for (const auto& [mono, c] : sub.terms())
      CHECK(top_term_coefficient(k, mono) == mpq_class(c));
  }
}

TEST_CASE("count_bounded_solutions") {
  CHECK(count_bounded_solutions({2}, 1) == 1);
  CHECK(count_bounded_solutions({1, 1}, 1) == 2);
  CHECK(count_bounded_solutions({0, 0, 0}, 0) == 1);
  CHECK(count_bounded_solutions({0, 0, 0}, 2) == 0);
  CHECK(count_bounded_solutions({}, 0) == 1);
  CHECK(count_bounded_solutions({3, 5}, -1) == 0);
  SUBCASE("matches brute enumeration") {
    testutil::Rng rng(8080);
    for (int trial = 0; trial < 50; ++trial) {
      int t = 1 + static_cast<int>(rng() % 4);
      std::vector<long> bounds;
      for (int i = 0; i < t; ++i) bounds.push_back(static_cast<long>(rng() % 5));
      long target = static_cast<long>(rng() % 10);
      long brute = 0;
      std::vector<long> x(static_cast<std::size_t>(t), 0);
      while (true) {
        long sum = 0;
        for (long v : x) sum += v;
        brute += sum == target;
        int i = t - 1;
        while (i >= 0 && x[i] == bounds[static_cast<std::size_t>(i)]) x[i--] = 0;
        if (i < 0) break;
        ++x[static_cast<std::size_t>(i)];
      }
      CHECK(count_bounded_solutions(bounds, target) == brute);
    }
  }
}

TEST_CASE("two-part top coefficients, known values") {
  CHECK(two_part_top_coefficient(2, 2, RMonomial({4})) == 4);
  CHECK(two_part_top_coefficient(3, 2, RMonomial({2, 3})) == 6);
  CHECK(two_part_top_coefficient(3, 2, RMonomial({5})) == 6);
  CHECK_THROWS_AS(two_part_top_coefficient(3, 2, RMonomial({2, 2})), std::invalid_argument);
}

TEST_CASE("two-part top coefficients match the solved K'_{r,s}, r+s <= 5") {
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; s <= r && r + s <= 5; ++s) {
      RPolynomial prime = positive_kerov(CycleType::of({r, s}));
      RPolynomial top = prime.weight_component(r + s);
      std::vector<std::vector<int>> monos;
      // every monomial of the top weight, including absent ones
      std::function<void(int, int, std::vector<int>&)> gen = [&](int left, int min_part,
                                                                 std::vector<int>& stack) {
        if (left == 0) {
          monos.push_back(stack);
          return;
        }
        for (int part = min_part; part <= left; ++part) {
          stack.push_back(part);
          gen(left - part, part, stack);
          stack.pop_back();
        }
      };
      std::vector<int> stack;
      gen(r + s, 2, stack);
      for (const auto& idx : monos) {
        RMonomial mono(idx);
        CHECK(two_part_top_coefficient(r, s, mono) == mpq_class(top.coefficient(mono)));
      }
    }
  }
}

TEST_CASE("subdominant expansion") {
  SUBCASE("one-part examples") {
    CHECK(subdominant_expansion(CycleType::of({5})) ==
          [] {
            RPolynomial p;
            p.add_term(RMonomial({6}), 1);
            p.add_term(RMonomial({4}), 15);
            p.add_term(RMonomial({2, 2}), 5);
            return p;
          }());
    CHECK(subdominant_expansion(CycleType::of({2})) == RPolynomial::generator(3));
  }
  SUBCASE("agreement with the solved polynomial on the top two graded degrees") {
    for (const auto& mu : {CycleType::of({3, 2}), CycleType::of({2, 2}), CycleType::of({4}),
                           CycleType::of({2, 2, 2})}) {
      RPolynomial solved = generalized_kerov(mu);
      RPolynomial expansion = subdominant_expansion(mu);
      int top = mu.weight() + mu.length();
      CHECK(expansion.weight_component(top) == solved.weight_component(top));
      CHECK(expansion.weight_component(top - 2) == solved.weight_component(top - 2));
    }
  }
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(linear_coefficient(CycleType::of({10}), 2), std::invalid_argument);
  CHECK_THROWS_AS(quadratic_coefficient(CycleType::of({10}), 2, 2), std::invalid_argument);
  CHECK(linear_coefficient(CycleType::of({4}), 3, 1, 4) == 5);  // explicit cap
}

TEST_CASE("counting loops are deterministic under threading") {
  CHECK(linear_coefficient(CycleType::of({5}), 3, 1) == linear_coefficient(CycleType::of({5}), 3, 4));
  CHECK(quadratic_coefficient(CycleType::of({5}), 2, 3, 1) ==
        quadratic_coefficient(CycleType::of({5}), 2, 3, 4));
}
