#include "kerov/decompose.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace kerov {

namespace {

EdgeSet edge_bit(int e) { return EdgeSet{1} << (e - 1); }

std::vector<OrientedEdge> rotate_to_canonical(std::vector<OrientedEdge> seq) {
  if (seq.empty()) return seq;
  std::size_t best = 0;
  for (std::size_t s = 1; s < seq.size(); ++s) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const auto& a = seq[(s + i) % seq.size()];
      const auto& b = seq[(best + i) % seq.size()];
      if (a < b) {
        best = s;
        break;
      }
      if (b < a) break;
    }
  }
  std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(best), seq.end());
  return seq;
}

}  // namespace

OrientedLoop::OrientedLoop(std::vector<OrientedEdge> seq)
    : edges(rotate_to_canonical(std::move(seq))) {}

OrientedLoop OrientedLoop::reversed() const {
  std::vector<OrientedEdge> seq(edges.rbegin(), edges.rend());
  for (auto& oe : seq) oe.white_to_black = !oe.white_to_black;
  return OrientedLoop(std::move(seq));
}

EdgeSet erasable_edges(const OrientedLoop& loop) {
  EdgeSet out = 0;
  for (const auto& oe : loop.edges)
    if (oe.white_to_black) out |= edge_bit(oe.edge);
  return out;
}

namespace {

int origin_vertex(const BicoloredMap& m, const OrientedEdge& oe) {
  return oe.white_to_black ? m.white_end(oe.edge) : m.black_end(oe.edge);
}
int target_vertex(const BicoloredMap& m, const OrientedEdge& oe) {
  return oe.white_to_black ? m.black_end(oe.edge) : m.white_end(oe.edge);
}
int first_half(const OrientedEdge& oe) {
  return oe.white_to_black ? BicoloredMap::white_half(oe.edge) : BicoloredMap::black_half(oe.edge);
}
int second_half(const OrientedEdge& oe) {
  return oe.white_to_black ? BicoloredMap::black_half(oe.edge) : BicoloredMap::white_half(oe.edge);
}

std::vector<std::vector<std::pair<int, int>>> adjacency(const BicoloredMap& m, EdgeSet edges) {
  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<std::size_t>(m.num_vertices()));
  for (int e = 1; e <= m.num_edges(); ++e) {
    if (edges & edge_bit(e)) {
      adj[m.white_end(e)].emplace_back(e, m.black_end(e));
      adj[m.black_end(e)].emplace_back(e, m.white_end(e));
    }
  }
  return adj;
}

}  // namespace

bool loop_valid(const BicoloredMap& m, EdgeSet edges, const OrientedLoop& loop) {
  const auto& seq = loop.edges;
  if (seq.empty()) return false;
  EdgeSet seen_edges = 0;
  std::vector<char> seen_vertex(static_cast<std::size_t>(m.num_vertices()), 0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int e = seq[i].edge;
    if (e < 1 || e > m.num_edges()) return false;
    if (!(edges & edge_bit(e))) return false;
    if (seen_edges & edge_bit(e)) return false;
    seen_edges |= edge_bit(e);
    int v = target_vertex(m, seq[i]);
    if (seen_vertex[v]) return false;
    seen_vertex[v] = 1;
    if (v != origin_vertex(m, seq[(i + 1) % seq.size()])) return false;
  }
  return true;
}

std::vector<OrientedLoop> enumerate_loops(const BicoloredMap& m, EdgeSet edges) {
  std::vector<OrientedLoop> out;
  auto adj = adjacency(m, edges);
  std::vector<char> on_path(static_cast<std::size_t>(m.num_vertices()), 0);
  std::vector<OrientedEdge> seq;

  auto emit = [&](const std::vector<OrientedEdge>& cycle) {
    OrientedLoop fwd(cycle);
    out.push_back(fwd);
    out.push_back(fwd.reversed());
  };

  for (int root = 0; root < m.num_vertices(); ++root) {
    EdgeSet used = 0;
    std::vector<int> path_vertices{root};
    auto dfs = [&](auto&& self, int u) -> void {
      for (const auto& [e, w] : adj[u]) {
        if (used & edge_bit(e)) continue;
        OrientedEdge oe{e, m.white_end(e) == u};
        if (w == root) {
          if (seq.empty()) continue;  // a single edge cannot close a loop
          if (seq.size() == 1) {
            if (e <= seq[0].edge) continue;  // each double edge once
          } else {
            if (path_vertices[1] >= u) continue;  // one direction per cycle
          }
          std::vector<OrientedEdge> cycle = seq;
          cycle.push_back(oe);
          emit(cycle);
          continue;
        }
        if (w < root || on_path[w]) continue;
        on_path[w] = 1;
        used |= edge_bit(e);
        seq.push_back(oe);
        path_vertices.push_back(w);
        self(self, w);
        path_vertices.pop_back();
        seq.pop_back();
        used &= ~edge_bit(e);
        on_path[w] = 0;
      }
    };
    on_path[root] = 1;
    dfs(dfs, root);
    on_path[root] = 0;
  }
  return out;
}

std::vector<OrientedLoop> enumerate_loops(const BicoloredMap& m) {
  return enumerate_loops(m, m.full_edge_set());
}

FormalMapSum t_transform(const BicoloredMap& g, const OrientedLoop& loop) {
  if (!loop_valid(g, g.full_edge_set(), loop))
    throw std::invalid_argument("loop is not valid in the map");
  FormalMapSum out(g);
  EdgeSet e_l = erasable_edges(loop);
  for (EdgeSet sub = e_l; sub != 0; sub = (sub - 1) & e_l) {
    int sign = (std::popcount(sub) % 2 == 1) ? 1 : -1;
    out.add_term(sub, sign);
  }
  return out;
}

FormalMapSum t_transform(const FormalMapSum& s, const OrientedLoop& loop) {
  const BicoloredMap& parent = s.parent();
  EdgeSet loop_edges = 0;
  for (const auto& oe : loop.edges) loop_edges |= edge_bit(oe.edge);
  FormalMapSum out(parent);
  EdgeSet e_l = erasable_edges(loop);
  for (const auto& [erased, coeff] : s.terms()) {
    if (erased & loop_edges)
      throw std::invalid_argument("loop is not valid in every term of the sum");
    for (EdgeSet sub = e_l; sub != 0; sub = (sub - 1) & e_l) {
      int sign = (std::popcount(sub) % 2 == 1) ? 1 : -1;
      out.add_term(erased | sub, coeff * sign);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition machinery.  Submaps share the parent map; an external
// half-edge is tracked as a descriptor anchored in the parent's rotation
// system so it survives edge erasures:
//   at_slot(h): the external half-edge occupies the slot of half-edge h
//               (h is the parent's real external half-edge, or a half of a
//               cut edge that is absent from the submap);
//   after(h):   inserted immediately after the slot of h (rule-3 insertion).
// ---------------------------------------------------------------------------

namespace {

struct Ext {
  enum Kind : std::uint8_t { none = 0, at_slot = 1, after = 2 };
  Kind kind = none;
  int h = 0;

  bool operator==(const Ext&) const = default;
};

using Terms = std::map<EdgeSet, mpz_class>;  // keyed by PRESENT edges

class Decomposer {
public:
  explicit Decomposer(const BicoloredMap& m) : map_(m) {}

  // Rotation at v restricted to present edges, with 0 marking the external
  // half-edge's position.
  std::vector<int> rotation_items(int v, EdgeSet present, const Ext& ext) const {
    std::vector<int> items;
    for (int h : map_.rotation(v)) {
      if (h == map_.external_half_edge() && map_.external_half_edge() != 0) {
        if (ext.kind == Ext::at_slot && ext.h == h) items.push_back(0);
        continue;
      }
      int e = BicoloredMap::edge_of_half(h);
      bool here = (present & edge_bit(e)) != 0;
      if (here) items.push_back(h);
      if (ext.kind == Ext::at_slot && ext.h == h) {
        assert(!here && "a stub anchor must belong to an absent edge");
        items.push_back(0);
      }
      if (ext.kind == Ext::after && ext.h == h) items.push_back(0);
    }
    return items;
  }

  int star_vertex(const Ext& ext) const { return map_.vertex_of_half(ext.h); }

  // Directed simple loops through the marked vertex, admissible orientation
  // only.
  std::vector<OrientedLoop> admissible(EdgeSet present, const Ext& ext) const {
    const int star = star_vertex(ext);
    std::vector<OrientedLoop> out;
    auto adj = adjacency(map_, present);
    std::vector<char> on_path(static_cast<std::size_t>(map_.num_vertices()), 0);
    std::vector<OrientedEdge> seq;
    EdgeSet used = 0;

    std::vector<int> star_rotation = rotation_items(star, present, ext);

    auto admissible_close = [&](int leave_half, int enter_half) {
      // cyclic order restricted to {ext, leave, enter} must be exactly
      // (ext, leave, enter)
      auto pos = [&](int x) {
        for (std::size_t i = 0; i < star_rotation.size(); ++i)
          if (star_rotation[i] == x) return i;
        throw std::logic_error("half-edge missing from rotation");
      };
      std::size_t pe = pos(0), pl = pos(leave_half), pn = pos(enter_half);
      std::size_t n = star_rotation.size();
      auto after_ext = [&](std::size_t p) { return (p + n - pe) % n; };
      return after_ext(pl) < after_ext(pn);
    };

    auto dfs = [&](auto&& self, int u) -> void {
      for (const auto& [e, w] : adj[u]) {
        if (used & edge_bit(e)) continue;
        OrientedEdge oe{e, map_.white_end(e) == u};
        if (w == star) {
          if (seq.empty()) continue;
          std::vector<OrientedEdge> cycle = seq;
          cycle.push_back(oe);
          if (admissible_close(first_half(cycle.front()), second_half(cycle.back())))
            out.emplace_back(cycle);
          continue;
        }
        if (on_path[w]) continue;
        on_path[w] = 1;
        used |= edge_bit(e);
        seq.push_back(oe);
        self(self, w);
        seq.pop_back();
        used &= ~edge_bit(e);
        on_path[w] = 0;
      }
    };
    on_path[star] = 1;
    dfs(dfs, star);
    on_path[star] = 0;
    std::sort(out.begin(), out.end(),
              [](const OrientedLoop& a, const OrientedLoop& b) { return a.edges < b.edges; });
    return out;
  }

  const Terms& d1(EdgeSet present, const Ext& ext) {
    std::uint64_t key = memo_key(present, ext);
    if (auto it = memo_d1_.find(key); it != memo_d1_.end()) return it->second;

    Terms result;
    auto loops = admissible(present, ext);
    if (loops.empty()) {
      result.emplace(present, 1);
    } else {
      const OrientedLoop& chosen = canonical_loop(loops);
      EdgeSet e_l = erasable_edges(chosen);
      for (EdgeSet sub = e_l; sub != 0; sub = (sub - 1) & e_l) {
        mpz_class sign = (std::popcount(sub) % 2 == 1) ? 1 : -1;
        for (const auto& [present2, c] : d1(present & ~sub, ext)) {
          auto [it, inserted] = result.emplace(present2, sign * c);
          if (!inserted) {
            it->second += sign * c;
            if (it->second == 0) result.erase(it);
          }
        }
      }
    }
    return memo_d1_.emplace(key, std::move(result)).first->second;
  }

  // Full decomposition of an arbitrary submap; ext (if any) belongs to the
  // component containing its anchor vertex.
  Terms d_all(EdgeSet present, const Ext& ext) {
    std::vector<EdgeSet> comp_masks = edge_components(present);
    int star = ext.kind == Ext::none ? -1 : star_vertex(ext);

    Terms combined;
    combined.emplace(0, 1);
    for (EdgeSet comp : comp_masks) {
      bool owns_ext = false;
      if (star >= 0) {
        for (int e = 1; e <= map_.num_edges(); ++e) {
          if ((comp & edge_bit(e)) &&
              (map_.white_end(e) == star || map_.black_end(e) == star)) {
            owns_ext = true;
            break;
          }
        }
      }
      const Terms& part = d_component(comp, owns_ext ? ext : Ext{});
      combined = tensor(combined, part);
    }
    return combined;
  }

  const Terms& d_component(EdgeSet comp, Ext ext) {
    assert(comp != 0);
    if (ext.kind == Ext::none) {
      // rule 3: attach after the black half-edge of the lowest labeled edge
      int min_edge = 0;
      for (int e = 1; e <= map_.num_edges(); ++e) {
        if ((comp & edge_bit(e)) && (min_edge == 0 || map_.label(e) < map_.label(min_edge)))
          min_edge = e;
      }
      ext = Ext{Ext::after, BicoloredMap::black_half(min_edge)};
    }
    std::uint64_t key = memo_key(comp, ext);
    if (auto it = memo_d_.find(key); it != memo_d_.end()) return it->second;

    Terms result;
    auto loops = admissible(comp, ext);
    if (!loops.empty()) {
      // rule 5: D(M) = D(D1(M))
      for (const auto& [present2, c] : Terms(d1(comp, ext))) {
        Terms rest = d_all(present2, ext);
        for (const auto& [p3, c3] : rest) {
          auto [it, inserted] = result.emplace(p3, c * c3);
          if (!inserted) {
            it->second += c * c3;
            if (it->second == 0) result.erase(it);
          }
        }
      }
    } else {
      // rule 4: split into legs at the marked vertex
      const int star = star_vertex(ext);
      std::vector<int> items = rotation_items(star, comp, ext);
      std::size_t ext_pos = 0;
      while (items[ext_pos] != 0) ++ext_pos;
      std::vector<int> star_halves;
      for (std::size_t i = 1; i < items.size(); ++i)
        star_halves.push_back(items[(ext_pos + i) % items.size()]);

      EdgeSet cut = 0;
      for (int h : star_halves) cut |= edge_bit(BicoloredMap::edge_of_half(h));
      EdgeSet rest = comp & ~cut;
      std::vector<EdgeSet> rest_comps = edge_components(rest);

      Terms combined;
      combined.emplace(0, 1);
      EdgeSet claimed = 0;
      for (int h : star_halves) {
        int e = BicoloredMap::edge_of_half(h);
        int other_half = BicoloredMap::is_white_half(h) ? BicoloredMap::black_half(e)
                                                        : BicoloredMap::white_half(e);
        int v = map_.vertex_of_half(other_half);
        EdgeSet leg = 0;
        for (EdgeSet cm : rest_comps) {
          if (component_contains_vertex(cm, v)) {
            leg = cm;
            break;
          }
        }
        if (leg != 0) {
          assert((claimed & leg) == 0 && "legs must be distinct components");
          claimed |= leg;
          combined = tensor(combined, d_component(leg, Ext{Ext::at_slot, other_half}));
        }
      }
      assert(claimed == rest && "legs must cover the remaining edges");
      result = std::move(combined);
      Terms shifted;
      for (auto& [p, c] : result) shifted.emplace(p | cut, std::move(c));
      result = std::move(shifted);
    }
    return memo_d_.emplace(key, std::move(result)).first->second;
  }

private:
  static std::uint64_t memo_key(EdgeSet present, const Ext& ext) {
    return static_cast<std::uint64_t>(present) |
           (static_cast<std::uint64_t>(ext.kind) << 32) |
           (static_cast<std::uint64_t>(ext.h) << 40);
  }

  // the admissible loop whose sorted edge-label sequence is smallest
  const OrientedLoop& canonical_loop(const std::vector<OrientedLoop>& loops) const {
    std::size_t best = 0;
    std::vector<int> best_seq, seq;
    auto sorted_labels = [this](const OrientedLoop& l, std::vector<int>& v) {
      v.clear();
      for (const auto& oe : l.edges) v.push_back(map_.label(oe.edge));
      std::sort(v.begin(), v.end());
    };
    sorted_labels(loops[0], best_seq);
    for (std::size_t i = 1; i < loops.size(); ++i) {
      sorted_labels(loops[i], seq);
      if (seq < best_seq) {
        best = i;
        best_seq = seq;
      }
    }
    return loops[best];
  }

  bool component_contains_vertex(EdgeSet comp, int v) const {
    for (int e = 1; e <= map_.num_edges(); ++e)
      if ((comp & edge_bit(e)) && (map_.white_end(e) == v || map_.black_end(e) == v))
        return true;
    return false;
  }

  std::vector<EdgeSet> edge_components(EdgeSet present) const {
    std::vector<EdgeSet> out;
    EdgeSet remaining = present;
    auto adj = adjacency(map_, present);
    while (remaining) {
      int first = std::countr_zero(remaining) + 1;
      EdgeSet comp = 0;
      std::vector<int> stack{map_.white_end(first)};
      std::vector<char> seen(static_cast<std::size_t>(map_.num_vertices()), 0);
      seen[map_.white_end(first)] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [e, w] : adj[u]) {
          comp |= edge_bit(e);
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
      out.push_back(comp);
      remaining &= ~comp;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  static Terms tensor(const Terms& a, const Terms& b) {
    Terms out;
    for (const auto& [pa, ca] : a) {
      for (const auto& [pb, cb] : b) {
        auto [it, inserted] = out.emplace(pa | pb, ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    }
    return out;
  }

  const BicoloredMap& map_;
  std::map<std::uint64_t, Terms> memo_d1_;
  std::map<std::uint64_t, Terms> memo_d_;
};

FormalMapSum terms_to_sum(const BicoloredMap& m, const Terms& terms) {
  FormalMapSum out(m);
  const EdgeSet full = m.full_edge_set();
  for (const auto& [present, c] : terms) out.add_term(full & ~present, c);
  return out;
}

void require_one_external(const BicoloredMap& m) {
  if (m.external_half_edge() == 0)
    throw std::invalid_argument("map must carry exactly one external half-edge");
}

}  // namespace

std::vector<OrientedLoop> admissible_loops(const BicoloredMap& m) {
  require_one_external(m);
  if (component_count(m, m.full_edge_set()) != 1)
    throw std::invalid_argument("map must be connected");
  Decomposer dec(m);
  return dec.admissible(m.full_edge_set(), Ext{Ext::at_slot, m.external_half_edge()});
}

FormalMapSum d1(const BicoloredMap& m) {
  require_one_external(m);
  if (component_count(m, m.full_edge_set()) != 1)
    throw std::invalid_argument("map must be connected");
  Decomposer dec(m);
  return terms_to_sum(m, dec.d1(m.full_edge_set(), Ext{Ext::at_slot, m.external_half_edge()}));
}

FormalMapSum d1(const FormalMapSum& s) {
  require_one_external(s.parent());
  Decomposer dec(s.parent());
  const EdgeSet full = s.parent().full_edge_set();
  Terms total;
  Ext ext{Ext::at_slot, s.parent().external_half_edge()};
  for (const auto& [erased, c] : s.terms()) {
    for (const auto& [present, c2] : dec.d1(full & ~erased, ext)) {
      auto [it, inserted] = total.emplace(present, c * c2);
      if (!inserted) {
        it->second += c * c2;
        if (it->second == 0) total.erase(it);
      }
    }
  }
  return terms_to_sum(s.parent(), total);
}

FormalMapSum d_full(const BicoloredMap& m) {
  Decomposer dec(m);
  Ext ext = m.external_half_edge() ? Ext{Ext::at_slot, m.external_half_edge()} : Ext{};
  return terms_to_sum(m, dec.d_all(m.full_edge_set(), ext));
}

mpz_class forest_coefficient(const BicoloredMap& m, EdgeSet forest) {
  if (!is_covering_forest_no_trivial_trees(m, forest))
    throw std::invalid_argument("not a covering forest without trivial trees");
  FormalMapSum d = d_full(m);
  return d.coefficient(m.full_edge_set() & ~forest);
}

mpz_class cumulant_multiplicity(const BicoloredMap& m, EdgeSet forest) {
  if (component_count(m, m.full_edge_set()) != 1)
    throw std::invalid_argument("cumulant multiplicity requires a connected map");
  mpz_class coeff = forest_coefficient(m, forest);
  int trees = component_count(m, forest);
  mpz_class value = (trees % 2 == 1) ? coeff : -coeff;
  if (value < 0)
    throw std::logic_error("multiplicity of a connected map must be non-negative");
  return value;
}

}  // namespace kerov
