#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "kerov/bicolored_map.hpp"
#include "kerov/json_io.hpp"
#include "testutil.hpp"

using namespace kerov;

namespace {

// face words as a multiset of canonical cyclic words
std::multiset<std::vector<int>> face_words(const BicoloredMap& m) {
  std::multiset<std::vector<int>> out;
  for (const auto& f : faces(m)) {
    if (f.word.empty()) continue;
    // canonical rotation: smallest cyclic shift
    std::vector<int> best = f.word;
    for (std::size_t s = 1; s < f.word.size(); ++s) {
      std::vector<int> rot(f.word.begin() + static_cast<std::ptrdiff_t>(s), f.word.end());
      rot.insert(rot.end(), f.word.begin(), f.word.begin() + static_cast<std::ptrdiff_t>(s));
      best = std::min(best, rot);
    }
    out.insert(best);
  }
  return out;
}

std::multiset<std::vector<int>> cycle_words(const Permutation& p) {
  std::multiset<std::vector<int>> out;
  for (const auto& c : p.cycles()) out.insert(c);
  return out;
}

int orbit_count(const Permutation& tau, const Permutation& taubar) {
  const int k = tau.degree();
  std::vector<int> parent(static_cast<std::size_t>(k) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 1; x <= k; ++x) {
    parent[find(x)] = find(tau(x));
    parent[find(x)] = find(taubar(x));
  }
  std::set<int> roots;
  for (int x = 1; x <= k; ++x) roots.insert(find(x));
  return static_cast<int>(roots.size());
}

}  // namespace

TEST_CASE("two whites, one black: a path-shaped tree") {
  BicoloredMap m = build_map(Permutation::identity(2), Permutation::parse_cycles("(1 2)"));
  CHECK(m.num_vertices() == 3);
  CHECK(m.num_edges() == 2);
  int whites = 0;
  for (int v = 0; v < m.num_vertices(); ++v) whites += m.vertex_color(v) == Color::white;
  CHECK(whites == 2);
  CHECK(is_forest(m));
}

TEST_CASE("the example map has one face with word 12345678") {
  auto tau = Permutation::parse_cycles("(1 5)(2 7)(3)(4 8 6)");
  auto taubar = Permutation::parse_cycles("(1 7 4)(2 3 6)(5 8)");
  BicoloredMap m = build_map(tau, taubar);
  int whites = 0, blacks = 0;
  for (int v = 0; v < m.num_vertices(); ++v)
    (m.vertex_color(v) == Color::white ? whites : blacks)++;
  CHECK(whites == 4);
  CHECK(blacks == 3);
  CHECK(m.num_edges() == 8);
  auto words = face_words(m);
  REQUIRE(words.size() == 1);
  CHECK(*words.begin() == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("star maps") {
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> cyc(static_cast<std::size_t>(k));
    std::iota(cyc.begin(), cyc.end(), 1);
    BicoloredMap m =
        build_map(Permutation::from_cycles(k, {cyc}), Permutation::identity(k));
    int whites = 0, blacks = 0;
    for (int v = 0; v < m.num_vertices(); ++v)
      (m.vertex_color(v) == Color::white ? whites : blacks)++;
    CHECK(whites == 1);
    CHECK(blacks == k);
    auto words = face_words(m);
    REQUIRE(words.size() == 1);
    CHECK(*words.begin() == cyc);
  }
}

TEST_CASE("map <-> pair is a bijection for all pairs with k <= 5") {
  for (int k = 1; k <= 5; ++k) {
    std::vector<int> a(static_cast<std::size_t>(k));
    std::iota(a.begin(), a.end(), 1);
    do {
      std::vector<int> b = a;
      std::sort(b.begin(), b.end());
      do {
        Permutation tau(a), taubar(b);
        BicoloredMap m = build_map(tau, taubar);
        auto [t2, tb2] = m.to_permutation_pair();
        REQUIRE(t2 == tau);
        REQUIRE(tb2 == taubar);
        REQUIRE(static_cast<int>(connected_components(m).size()) == orbit_count(tau, taubar));
      } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
  }
}

TEST_CASE("face words are the cycles of the product, random pairs up to k = 8") {
  testutil::Rng rng(20240811);
  for (int trial = 0; trial < 1000; ++trial) {
    int k = 1 + static_cast<int>(rng() % 8);
    auto [tau, taubar] = testutil::random_pair(k, rng);
    BicoloredMap m = build_map(tau, taubar);
    CHECK(face_words(m) == cycle_words(tau * taubar));
    // total word length over faces is k
    std::size_t total = 0;
    for (const auto& f : faces(m)) total += f.word.size();
    CHECK(total == static_cast<std::size_t>(k));
  }
}

TEST_CASE("components match orbits") {
  CHECK(connected_components(build_map(Permutation::identity(3), Permutation::identity(3)))
            .size() == 3);
  CHECK(connected_components(build_map(Permutation::parse_cycles("(1 2)", 4),
                                       Permutation::identity(4)))
            .size() == 3);
  for (int k = 1; k <= 5; ++k) {
    testutil::Rng rng(77 + static_cast<unsigned>(k));
    for (int trial = 0; trial < 200; ++trial) {
      auto [tau, taubar] = testutil::random_pair(k, rng);
      auto comps = connected_components(build_map(tau, taubar));
      CHECK(static_cast<int>(comps.size()) == orbit_count(tau, taubar));
      if (is_transitive(tau, taubar)) CHECK(comps.size() == 1);
      // components partition vertices and edges
      int verts = 0, edges = 0;
      for (const auto& c : comps) {
        verts += c.num_vertices();
        edges += c.num_edges();
      }
      CHECK(verts == tau.cycle_count() + taubar.cycle_count());
      CHECK(edges == k);
    }
  }
}

TEST_CASE("is_forest") {
  CHECK(is_forest(build_map(Permutation::identity(1), Permutation::identity(1))));
  CHECK_FALSE(
      is_forest(build_map(Permutation::parse_cycles("(1 2)"), Permutation::parse_cycles("(1 2)"))));
  for (const auto& pi : enumerate_noncrossing(4)) {
    Permutation tau = nc_to_perm(pi);
    Permutation taubar = tau.inverse() * Permutation::parse_cycles("(1 2 3 4)");
    CHECK(is_forest(build_map(tau, taubar)));
  }
}

TEST_CASE("attach_external_half_edge") {
  SUBCASE("single edge: external goes to the black vertex") {
    BicoloredMap m = build_map(Permutation::identity(1), Permutation::identity(1));
    BicoloredMap ext = attach_external_half_edge(m);
    REQUIRE(ext.external_half_edge() == 3);
    CHECK(ext.vertex_color(ext.vertex_of_half(3)) == Color::black);
    CHECK(ext.next_at_vertex(BicoloredMap::black_half(1)) == 3);
  }
  SUBCASE("black-center star: inserted right after the half-edge of label 1") {
    BicoloredMap m =
        build_map(Permutation::identity(3), Permutation::parse_cycles("(1 2 3)"));
    BicoloredMap ext = attach_external_half_edge(m);
    CHECK(ext.next_at_vertex(BicoloredMap::black_half(1)) == ext.external_half_edge());
    CHECK(ext.next_at_vertex(ext.external_half_edge()) == BicoloredMap::black_half(2));
  }
  SUBCASE("attaching twice is an error") {
    BicoloredMap m = build_map(Permutation::identity(1), Permutation::identity(1));
    CHECK_THROWS_AS(attach_external_half_edge(attach_external_half_edge(m)),
                    std::invalid_argument);
  }
  SUBCASE("disconnected and edgeless maps are rejected") {
    CHECK_THROWS_AS(
        attach_external_half_edge(build_map(Permutation::identity(2), Permutation::identity(2))),
        std::invalid_argument);
    BicoloredMap vertex_only({Color::white}, {}, {}, {{}});
    CHECK_THROWS_AS(attach_external_half_edge(vertex_only), std::invalid_argument);
  }
}

TEST_CASE("faces require no external half-edge") {
  BicoloredMap m = build_map(Permutation::identity(1), Permutation::identity(1));
  CHECK_THROWS_AS(faces(attach_external_half_edge(m)), std::invalid_argument);
}

TEST_CASE("map JSON round trip") {
  testutil::Rng rng(5150);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 1 + static_cast<int>(rng() % 6);
    auto [tau, taubar] = testutil::random_pair(k, rng);
    BicoloredMap m = build_map(tau, taubar);
    CHECK(bicolored_map_from_json(to_json(m)) == m);
    if (is_transitive(tau, taubar)) {
      BicoloredMap ext = attach_external_half_edge(m);
      CHECK(bicolored_map_from_json(to_json(ext)) == ext);
    }
  }
}
