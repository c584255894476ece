#include "kerov/nseries.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace kerov {

namespace {

struct Component {
  std::vector<int> whites;                       // vertex ids
  std::vector<int> blacks;                       // vertex ids
  std::vector<std::vector<int>> black_neighbors; // per black: positions into whites
};

std::vector<Component> split_components(const BicoloredMap& m, EdgeSet edges) {
  const int V = m.num_vertices();
  std::vector<int> comp(static_cast<std::size_t>(V), -1);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(V));
  for (int e = 1; e <= m.num_edges(); ++e) {
    if (edges & (EdgeSet{1} << (e - 1))) {
      adj[m.white_end(e)].push_back(m.black_end(e));
      adj[m.black_end(e)].push_back(m.white_end(e));
    }
  }
  int count = 0;
  for (int v = 0; v < V; ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v};
    comp[v] = count;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (comp[y] == -1) {
          comp[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }

  std::vector<Component> out(static_cast<std::size_t>(count));
  std::vector<int> white_pos(static_cast<std::size_t>(V), -1);
  for (int v = 0; v < V; ++v) {
    auto& c = out[comp[v]];
    if (m.vertex_color(v) == Color::white) {
      white_pos[v] = static_cast<int>(c.whites.size());
      c.whites.push_back(v);
    } else {
      c.blacks.push_back(v);
    }
  }
  std::vector<int> black_pos(static_cast<std::size_t>(V), -1);
  for (int ci = 0; ci < count; ++ci)
    for (std::size_t i = 0; i < out[ci].blacks.size(); ++i) black_pos[out[ci].blacks[i]] = static_cast<int>(i);
  for (auto& c : out) c.black_neighbors.resize(c.blacks.size());
  for (int e = 1; e <= m.num_edges(); ++e) {
    if (edges & (EdgeSet{1} << (e - 1))) {
      auto& c = out[comp[m.white_end(e)]];
      c.black_neighbors[black_pos[m.black_end(e)]].push_back(white_pos[m.white_end(e)]);
    }
  }
  return out;
}

// N of one connected component, coefficients accumulated as machine words
// (counts are bounded by m^{#whites}, guarded below).
PQPolynomial n_of_component(const Component& comp, int m) {
  const int nw = static_cast<int>(comp.whites.size());
  const int nb = static_cast<int>(comp.blacks.size());
  if (nw * std::log2(std::max(2, m)) > 62)
    throw std::invalid_argument("component too large for exact counting");

  std::map<PQMonomial, long long> acc;
  std::vector<int> values(static_cast<std::size_t>(nw), 0);

  // scratch buffers for the product of the black linear factors
  std::vector<std::pair<std::uint64_t, long long>> cur, next;

  auto leaf = [&](std::uint64_t p_bits) {
    cur.assign(1, {0, 1});
    for (int b = 0; b < nb; ++b) {
      int threshold = 1;
      for (int wpos : comp.black_neighbors[b]) threshold = std::max(threshold, values[wpos]);
      next.clear();
      for (const auto& [bits, cnt] : cur)
        for (int v = threshold; v <= m; ++v)
          next.emplace_back(bits + PQMonomial::unit(v), cnt);
      std::sort(next.begin(), next.end());
      cur.clear();
      for (const auto& [bits, cnt] : next) {
        if (!cur.empty() && cur.back().first == bits)
          cur.back().second += cnt;
        else
          cur.emplace_back(bits, cnt);
      }
    }
    for (const auto& [bits, cnt] : cur) acc[PQMonomial{p_bits, bits}] += cnt;
  };

  // recursion over white assignments with incremental p-exponents
  auto rec = [&](auto&& self, int i, std::uint64_t p_bits) -> void {
    if (i == nw) {
      leaf(p_bits);
      return;
    }
    for (int v = 1; v <= m; ++v) {
      values[i] = v;
      self(self, i + 1, p_bits + PQMonomial::unit(v));
    }
  };
  rec(rec, 0, 0);

  PQPolynomial out(m);
  for (const auto& [mono, cnt] : acc)
    out.add_term(mono, mpz_class(static_cast<long>(cnt)));
  return out;
}

}  // namespace

PQPolynomial n_of_graph(const BicoloredMap& m, EdgeSet edges, int truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
  PQPolynomial result = PQPolynomial::one(truncation);
  for (const auto& comp : split_components(m, edges))
    result = result * n_of_component(comp, truncation);
  return result;
}

PQPolynomial n_of_graph(const BicoloredMap& m, int truncation) {
  return n_of_graph(m, m.full_edge_set(), truncation);
}

PQPolynomial n_of_sum(const FormalMapSum& s, int truncation) {
  PQPolynomial result(truncation);
  const EdgeSet full = s.parent().full_edge_set();
  for (const auto& [erased, coeff] : s.terms())
    result += n_of_graph(s.parent(), full & ~erased, truncation) * coeff;
  return result;
}

}  // namespace kerov
