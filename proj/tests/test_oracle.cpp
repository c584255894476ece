#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kerov/json_io.hpp"
#include "kerov/kerov.hpp"
#include "kerov/oracle.hpp"
#include "testutil.hpp"

using namespace kerov;

namespace {

// hook length formula; independent of the character recursion
mpz_class hook_count(const YoungDiagram& lambda) {
  const auto& rows = lambda.rows();
  std::vector<long> cols;
  for (long r : rows) {
    if (static_cast<std::size_t>(r) > cols.size()) cols.resize(static_cast<std::size_t>(r), 0);
    for (long j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  mpz_class numerator;
  mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(lambda.n()));
  mpz_class hooks = 1;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (long j = 0; j < rows[i]; ++j)
      hooks *= (rows[i] - j) + (cols[static_cast<std::size_t>(j)] - static_cast<long>(i)) - 1;
  return numerator / hooks;
}

std::vector<YoungDiagram> diagrams_of(int n) {
  std::vector<YoungDiagram> out;
  for (const auto& mu : partitions_of(n)) {
    std::vector<long> rows(mu.parts().begin(), mu.parts().end());
    out.emplace_back(std::move(rows));
  }
  return out;
}

}  // namespace

TEST_CASE("diagram_from_pq") {
  CHECK(diagram_from_pq({2}, {2}) == YoungDiagram({2, 2}));
  CHECK(diagram_from_pq({1, 1}, {2, 1}) == YoungDiagram({3, 1}));
  CHECK(diagram_from_pq({}, {}) == YoungDiagram(std::vector<long>{}));
  CHECK_THROWS_AS(diagram_from_pq({-1}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(diagram_from_pq({1, 2}, {1}), std::invalid_argument);
}

TEST_CASE("characters at the identity count standard tableaux") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : diagrams_of(n))
      CHECK(mn_character(lambda, CycleType::of({})) == hook_count(lambda));
}

TEST_CASE("border-strip values") {
  CHECK(mn_character(YoungDiagram({2, 2}), CycleType::of({4})) == 0);
  CHECK(mn_character(YoungDiagram({3, 1}), CycleType::of({4})) == -1);
  CHECK_THROWS_AS(mn_character(YoungDiagram({2}), CycleType::of({4})), std::invalid_argument);
}

TEST_CASE("character table oracles for S(3)") {
  YoungDiagram l3({3}), l21({2, 1}), l111({1, 1, 1});
  CHECK(mn_character(l3, CycleType::of({3})) == 1);
  CHECK(mn_character(l21, CycleType::of({3})) == -1);
  CHECK(mn_character(l111, CycleType::of({3})) == 1);
  CHECK(mn_character(l21, CycleType::of({2})) == 0);
  CHECK(mn_character(l111, CycleType::of({2})) == -1);
}

TEST_CASE("normalized characters") {
  SUBCASE("Sigma_1 is n") {
    for (int n = 1; n <= 6; ++n)
      for (const auto& lambda : diagrams_of(n))
        CHECK(normalized_character(lambda, CycleType::of({1})) == n);
  }
  CHECK(normalized_character(YoungDiagram({3, 1}), CycleType::of({4})) == -8);
  CHECK(normalized_character(YoungDiagram({2, 2}), CycleType::of({4})) == 0);
}

TEST_CASE("transition measure") {
  SUBCASE("weights are positive and sum to one, n <= 10") {
    for (int n = 0; n <= 10; ++n) {
      for (const auto& lambda : diagrams_of(n)) {
        TransitionMeasure tm = transition_measure(lambda);
        mpq_class sum = 0;
        for (const auto& w : tm.weights) {
          CHECK(w > 0);
          sum += w;
        }
        CHECK(sum == 1);
      }
    }
  }
  SUBCASE("first two moments are 0 and n") {
    for (int n = 0; n <= 10; ++n) {
      for (const auto& lambda : diagrams_of(n)) {
        auto m = moments(transition_measure(lambda), 2);
        CHECK(m[1] == 0);
        CHECK(m[2] == lambda.n());
      }
    }
  }
  SUBCASE("the (3,1) measure") {
    TransitionMeasure tm = transition_measure(YoungDiagram({3, 1}));
    REQUIRE(tm.atoms.size() == 3);
    CHECK(tm.atoms == std::vector<mpq_class>{-2, 0, 3});
    CHECK(tm.weights == std::vector<mpq_class>{mpq_class(2, 5), mpq_class(1, 3), mpq_class(4, 15)});
  }
}

TEST_CASE("free cumulants") {
  SUBCASE("R_2 equals n for n <= 8") {
    for (int n = 0; n <= 8; ++n)
      for (const auto& lambda : diagrams_of(n))
        CHECK(free_cumulants_numeric(lambda, 2)[2] == lambda.n());
  }
  SUBCASE("values at (3,1)") {
    auto r = free_cumulants_numeric(YoungDiagram({3, 1}), 5);
    CHECK(r[2] == 4);
    CHECK(r[3] == 4);
    CHECK(r[4] == -4);
    CHECK(r[5] == -28);
  }
  SUBCASE("odd cumulants of squares vanish") {
    for (long side : {2L, 3L}) {
      YoungDiagram square(std::vector<long>(static_cast<std::size_t>(side), side));
      auto r = free_cumulants_numeric(square, 5);
      CHECK(r[3] == 0);
      CHECK(r[5] == 0);
    }
  }
}

TEST_CASE("pipeline consistency on random multirectangular coordinates") {
  testutil::Rng rng(1618);
  int checked = 0;
  while (checked < 30) {
    int len = 1 + static_cast<int>(rng() % 2);
    std::vector<long> p, q;
    for (int i = 0; i < len; ++i) {
      p.push_back(1 + static_cast<long>(rng() % 3));
      q.push_back(1 + static_cast<long>(rng() % 3));
    }
    YoungDiagram lambda = diagram_from_pq(p, q);
    auto numeric = free_cumulants_numeric(lambda, 5);
    for (int j = 2; j <= 5; ++j) {
      int m = std::max(j, len);
      std::vector<mpq_class> pe(static_cast<std::size_t>(m), 0), qe(pe);
      for (int i = 0; i < len; ++i) {
        pe[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
        qe[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(i)];
      }
      CHECK(free_cumulant_poly(j, m).evaluate(pe, qe) == numeric[static_cast<std::size_t>(j)]);
    }
    ++checked;
  }
}

TEST_CASE("diagram JSON round trip") {
  YoungDiagram d({4, 2, 1});
  CHECK(young_diagram_from_json(to_json(d)) == d);
}
