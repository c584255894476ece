#include "kerov/bicolored_map.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kerov {

BicoloredMap::BicoloredMap(std::vector<Color> colors,
                           std::vector<std::pair<int, int>> endpoints,
                           std::vector<int> labels,
                           std::vector<std::vector<int>> rotations,
                           int external_half_edge)
    : colors_(std::move(colors)),
      endpoints_(std::move(endpoints)),
      labels_(std::move(labels)),
      rotations_(std::move(rotations)),
      external_half_edge_(external_half_edge) {
  validate_and_index();
}

void BicoloredMap::validate_and_index() {
  const int E = num_edges();
  const int V = num_vertices();
  if (E > 32) throw std::invalid_argument("maps with more than 32 edges are not supported");
  if (static_cast<int>(labels_.size()) != E) throw std::invalid_argument("one label per edge");
  if (static_cast<int>(rotations_.size()) != V)
    throw std::invalid_argument("one rotation per vertex");
  {
    std::vector<int> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("edge labels must be distinct");
    for (int l : sorted)
      if (l <= 0) throw std::invalid_argument("edge labels must be positive");
  }
  if (external_half_edge_ != 0 && external_half_edge_ != 2 * E + 1)
    throw std::invalid_argument("external half-edge must have index 2E+1");

  const int H = num_half_edges();
  vertex_of_.assign(static_cast<std::size_t>(H) + 1, -1);
  next_at_vertex_.assign(static_cast<std::size_t>(H) + 1, 0);

  for (int e = 1; e <= E; ++e) {
    auto [w, b] = endpoints_[e - 1];
    if (w < 0 || w >= V || b < 0 || b >= V)
      throw std::invalid_argument("edge endpoint out of range");
    if (colors_[w] != Color::white || colors_[b] != Color::black)
      throw std::invalid_argument("each edge joins a white and a black vertex");
    vertex_of_[white_half(e)] = w;
    vertex_of_[black_half(e)] = b;
  }

  std::vector<char> placed(static_cast<std::size_t>(H) + 1, 0);
  for (int v = 0; v < V; ++v) {
    const auto& rot = rotations_[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      int h = rot[i];
      if (h < 1 || h > H) throw std::invalid_argument("rotation mentions unknown half-edge");
      if (h == external_half_edge_) {
        if (vertex_of_[h] != -1 && vertex_of_[h] != v)
          throw std::invalid_argument("external half-edge at two vertices");
        vertex_of_[h] = v;
      } else if (vertex_of_[h] != v) {
        throw std::invalid_argument("rotation places half-edge at the wrong vertex");
      }
      if (placed[h]) throw std::invalid_argument("half-edge repeated in rotations");
      placed[h] = 1;
      next_at_vertex_[h] = rot[(i + 1) % rot.size()];
    }
  }
  for (int h = 1; h <= H; ++h)
    if (!placed[h]) throw std::invalid_argument("half-edge missing from rotations");
}

BicoloredMap BicoloredMap::from_permutation_pair(const Permutation& tau,
                                                 const Permutation& taubar) {
  if (tau.degree() != taubar.degree())
    throw std::invalid_argument("degree mismatch in map construction");
  const int k = tau.degree();
  auto white_cycles = tau.cycles();
  auto black_cycles = taubar.cycles();
  const int nw = static_cast<int>(white_cycles.size());

  std::vector<Color> colors;
  std::vector<std::vector<int>> rotations;
  std::vector<std::pair<int, int>> endpoints(static_cast<std::size_t>(k), {-1, -1});
  std::vector<int> labels(static_cast<std::size_t>(k));
  std::iota(labels.begin(), labels.end(), 1);

  for (int v = 0; v < nw; ++v) {
    colors.push_back(Color::white);
    std::vector<int> rot;
    for (int i : white_cycles[v]) {
      rot.push_back(white_half(i));
      endpoints[i - 1].first = v;
    }
    rotations.push_back(std::move(rot));
  }
  for (std::size_t c = 0; c < black_cycles.size(); ++c) {
    colors.push_back(Color::black);
    std::vector<int> rot;
    for (int i : black_cycles[c]) {
      rot.push_back(black_half(i));
      endpoints[i - 1].second = nw + static_cast<int>(c);
    }
    rotations.push_back(std::move(rot));
  }
  return BicoloredMap(std::move(colors), std::move(endpoints), std::move(labels),
                      std::move(rotations));
}

std::pair<Permutation, Permutation> BicoloredMap::to_permutation_pair() const {
  if (external_half_edge_ != 0)
    throw std::invalid_argument("map with external half-edge has no permutation pair");
  const int k = num_edges();
  for (int e = 1; e <= k; ++e)
    if (labels_[e - 1] > k) throw std::invalid_argument("map is not well-labeled");
  std::vector<int> tau_img(static_cast<std::size_t>(k)), taubar_img(static_cast<std::size_t>(k));
  for (int e = 1; e <= k; ++e) {
    int i = label(e);
    tau_img[i - 1] = label(edge_of_half(next_at_vertex(white_half(e))));
    taubar_img[i - 1] = label(edge_of_half(next_at_vertex(black_half(e))));
  }
  return {Permutation(std::move(tau_img)), Permutation(std::move(taubar_img))};
}

int BicoloredMap::edge_with_label(int label) const {
  for (int e = 1; e <= num_edges(); ++e)
    if (labels_[e - 1] == label) return e;
  throw std::invalid_argument("no edge with that label");
}

std::vector<int> BicoloredMap::labels_of(EdgeSet edges) const {
  std::vector<int> out;
  for (int e = 1; e <= num_edges(); ++e)
    if (edges & (EdgeSet{1} << (e - 1))) out.push_back(label(e));
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet BicoloredMap::edges_with_labels(const std::vector<int>& labels) const {
  EdgeSet out = 0;
  for (int l : labels) out |= EdgeSet{1} << (edge_with_label(l) - 1);
  return out;
}

std::vector<Face> faces(const BicoloredMap& m) {
  if (m.external_half_edge() != 0)
    throw std::invalid_argument("faces are defined for maps without external half-edges");
  const int E = m.num_edges();
  // oriented edge id: 2*(e-1) for white->black, 2*(e-1)+1 for black->white,
  // visited in increasing (label, orientation) order
  std::vector<int> order(static_cast<std::size_t>(E));
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return m.label(a) < m.label(b); });

  std::vector<char> used(static_cast<std::size_t>(2 * E), 0);
  std::vector<Face> out;
  for (int e0 : order) {
    for (int dir0 = 0; dir0 < 2; ++dir0) {
      if (used[2 * (e0 - 1) + dir0]) continue;
      Face face;
      int e = e0, dir = dir0;
      do {
        used[2 * (e - 1) + dir] = 1;
        face.oriented_edges.push_back({e, dir == 0});
        if (dir == 0) face.word.push_back(m.label(e));
        int second = dir == 0 ? BicoloredMap::black_half(e) : BicoloredMap::white_half(e);
        int next = m.next_at_vertex(second);
        e = BicoloredMap::edge_of_half(next);
        dir = BicoloredMap::is_white_half(next) ? 0 : 1;
      } while (!(e == e0 && dir == dir0));
      out.push_back(std::move(face));
    }
  }
  return out;
}

namespace {

// union-find over vertices along present edges
std::vector<int> component_ids(const BicoloredMap& m, EdgeSet edges) {
  std::vector<int> parent(static_cast<std::size_t>(m.num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 1; e <= m.num_edges(); ++e)
    if (edges & (EdgeSet{1} << (e - 1))) parent[find(m.white_end(e))] = find(m.black_end(e));
  std::vector<int> id(parent.size());
  std::map<int, int> remap;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    int root = find(static_cast<int>(v));
    auto [it, _] = remap.emplace(root, static_cast<int>(remap.size()));
    id[v] = it->second;
  }
  return id;
}

}  // namespace

int component_count(const BicoloredMap& m, EdgeSet edges) {
  auto id = component_ids(m, edges);
  return id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
}

std::vector<BicoloredMap> connected_components(const BicoloredMap& m) {
  auto id = component_ids(m, m.full_edge_set());
  int count = m.num_vertices() == 0 ? 0 : *std::max_element(id.begin(), id.end()) + 1;

  std::vector<BicoloredMap> out;
  for (int c = 0; c < count; ++c) {
    std::vector<int> vmap(static_cast<std::size_t>(m.num_vertices()), -1);
    std::vector<Color> colors;
    for (int v = 0; v < m.num_vertices(); ++v) {
      if (id[v] == c) {
        vmap[v] = static_cast<int>(colors.size());
        colors.push_back(m.vertex_color(v));
      }
    }
    std::vector<int> emap(static_cast<std::size_t>(m.num_edges()) + 1, 0);
    std::vector<std::pair<int, int>> endpoints;
    std::vector<int> labels;
    for (int e = 1; e <= m.num_edges(); ++e) {
      if (id[m.white_end(e)] == c) {
        emap[e] = static_cast<int>(endpoints.size()) + 1;
        endpoints.emplace_back(vmap[m.white_end(e)], vmap[m.black_end(e)]);
        labels.push_back(m.label(e));
      }
    }
    int new_ext = 0;
    int ext_vertex = m.external_half_edge() ? m.vertex_of_half(m.external_half_edge()) : -1;
    if (ext_vertex >= 0 && id[ext_vertex] == c)
      new_ext = 2 * static_cast<int>(endpoints.size()) + 1;
    std::vector<std::vector<int>> rotations(colors.size());
    for (int v = 0; v < m.num_vertices(); ++v) {
      if (id[v] != c) continue;
      for (int h : m.rotation(v)) {
        if (h == m.external_half_edge()) {
          rotations[vmap[v]].push_back(new_ext);
        } else {
          int e = BicoloredMap::edge_of_half(h);
          rotations[vmap[v]].push_back(BicoloredMap::is_white_half(h)
                                           ? BicoloredMap::white_half(emap[e])
                                           : BicoloredMap::black_half(emap[e]));
        }
      }
    }
    out.emplace_back(std::move(colors), std::move(endpoints), std::move(labels),
                     std::move(rotations), new_ext);
  }
  return out;
}

bool is_forest(const BicoloredMap& m) {
  auto id = component_ids(m, m.full_edge_set());
  int count = m.num_vertices() == 0 ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  std::vector<int> verts(static_cast<std::size_t>(count), 0), edges(static_cast<std::size_t>(count), 0);
  for (int v = 0; v < m.num_vertices(); ++v) ++verts[id[v]];
  for (int e = 1; e <= m.num_edges(); ++e) ++edges[id[m.white_end(e)]];
  for (int c = 0; c < count; ++c)
    if (verts[c] != edges[c] + 1) return false;
  return true;
}

bool is_covering_forest_no_trivial_trees(const BicoloredMap& m, EdgeSet edges) {
  std::vector<int> degree(static_cast<std::size_t>(m.num_vertices()), 0);
  int edge_count = 0;
  for (int e = 1; e <= m.num_edges(); ++e) {
    if (edges & (EdgeSet{1} << (e - 1))) {
      ++edge_count;
      ++degree[m.white_end(e)];
      ++degree[m.black_end(e)];
    }
  }
  for (int v = 0; v < m.num_vertices(); ++v)
    if (degree[v] == 0) return false;
  // acyclic <=> every component is a tree <=> V = E + components
  return m.num_vertices() == edge_count + component_count(m, edges);
}

BicoloredMap attach_external_half_edge(const BicoloredMap& m) {
  if (m.external_half_edge() != 0)
    throw std::invalid_argument("map already has an external half-edge");
  if (m.num_edges() == 0) throw std::invalid_argument("cannot attach to an edgeless map");
  if (component_count(m, m.full_edge_set()) != 1)
    throw std::invalid_argument("map must be connected");

  int min_edge = 1;
  for (int e = 2; e <= m.num_edges(); ++e)
    if (m.label(e) < m.label(min_edge)) min_edge = e;
  const int h = BicoloredMap::black_half(min_edge);
  const int ext = 2 * m.num_edges() + 1;

  std::vector<Color> colors;
  std::vector<std::pair<int, int>> endpoints;
  std::vector<int> labels;
  for (int v = 0; v < m.num_vertices(); ++v) colors.push_back(m.vertex_color(v));
  for (int e = 1; e <= m.num_edges(); ++e) {
    endpoints.emplace_back(m.white_end(e), m.black_end(e));
    labels.push_back(m.label(e));
  }
  std::vector<std::vector<int>> rotations;
  for (int v = 0; v < m.num_vertices(); ++v) {
    std::vector<int> rot;
    for (int x : m.rotation(v)) {
      rot.push_back(x);
      if (x == h) rot.push_back(ext);
    }
    rotations.push_back(std::move(rot));
  }
  return BicoloredMap(std::move(colors), std::move(endpoints), std::move(labels),
                      std::move(rotations), ext);
}

}  // namespace kerov
