#include "kerov/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace kerov {

namespace {

using nlohmann::json;

json permutation_json(const Permutation& p) { return json(p.images()); }

json pq_json(const PQPolynomial& p) {
  json terms = json::array();
  for (const auto& [mono, c] : p.terms()) {
    json t;
    std::vector<int> pe, qe;
    for (int v = 1; v <= p.truncation(); ++v) {
      pe.push_back(mono.p_exp(v));
      qe.push_back(mono.q_exp(v));
    }
    t["p_exponents"] = pe;
    t["q_exponents"] = qe;
    t["coefficient"] = c.get_str();
    terms.push_back(std::move(t));
  }
  return json{{"m", p.truncation()}, {"terms", std::move(terms)}};
}

json r_json(const RPolynomial& p) {
  json terms = json::array();
  for (const auto& [mono, c] : p.terms()) {
    terms.push_back(json{{"indices", mono.indices}, {"coefficient", c.get_str()}});
  }
  return json{{"terms", std::move(terms)}};
}

json map_json(const BicoloredMap& m) {
  json vertices = json::array();
  for (int v = 0; v < m.num_vertices(); ++v)
    vertices.push_back(json{{"color", m.vertex_color(v) == Color::white ? "white" : "black"}});
  json edges = json::array();
  for (int e = 1; e <= m.num_edges(); ++e)
    edges.push_back(json{{"white", m.white_end(e)}, {"black", m.black_end(e)}, {"label", m.label(e)}});
  json rotations = json::array();
  for (int v = 0; v < m.num_vertices(); ++v) rotations.push_back(m.rotation(v));
  return json{{"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"rotations", std::move(rotations)},
              {"external_half_edge", m.external_half_edge()}};
}

BicoloredMap map_from(const json& j) {
  std::vector<Color> colors;
  for (const auto& v : j.at("vertices"))
    colors.push_back(v.at("color").get<std::string>() == "white" ? Color::white : Color::black);
  std::vector<std::pair<int, int>> endpoints;
  std::vector<int> labels;
  for (const auto& e : j.at("edges")) {
    endpoints.emplace_back(e.at("white").get<int>(), e.at("black").get<int>());
    labels.push_back(e.at("label").get<int>());
  }
  std::vector<std::vector<int>> rotations;
  for (const auto& r : j.at("rotations")) rotations.push_back(r.get<std::vector<int>>());
  int ext = j.value("external_half_edge", 0);
  return BicoloredMap(std::move(colors), std::move(endpoints), std::move(labels),
                      std::move(rotations), ext);
}

mpz_class mpz_from(const json& j) { return mpz_class(j.get<std::string>()); }

}  // namespace

std::string to_json(const Permutation& p) { return permutation_json(p).dump(); }

std::string to_json(const CycleType& t) { return json(t.parts()).dump(); }

std::string to_json(const YoungDiagram& d) { return json(d.rows()).dump(); }

std::string to_json(const PQPolynomial& p) { return pq_json(p).dump(); }

std::string to_json(const RPolynomial& p) { return r_json(p).dump(); }

std::string to_json(const BicoloredMap& m) { return map_json(m).dump(); }

std::string to_json(const FormalMapSum& s) {
  json terms = json::array();
  for (const auto& [erased, c] : s.terms()) {
    terms.push_back(json{{"erased_edge_labels", s.erased_labels(erased)}, {"coefficient", c.get_str()}});
  }
  return json{{"parent", map_json(s.parent())}, {"terms", std::move(terms)}}.dump();
}

Permutation permutation_from_json(const std::string& text) {
  return Permutation(json::parse(text).get<std::vector<int>>());
}

CycleType cycle_type_from_json(const std::string& text) {
  return CycleType::of(json::parse(text).get<std::vector<int>>());
}

YoungDiagram young_diagram_from_json(const std::string& text) {
  return YoungDiagram(json::parse(text).get<std::vector<long>>());
}

PQPolynomial pq_polynomial_from_json(const std::string& text) {
  json j = json::parse(text);
  PQPolynomial out(j.at("m").get<int>());
  for (const auto& t : j.at("terms")) {
    auto pe = t.at("p_exponents").get<std::vector<int>>();
    auto qe = t.at("q_exponents").get<std::vector<int>>();
    if (static_cast<int>(pe.size()) != out.truncation() ||
        static_cast<int>(qe.size()) != out.truncation())
      throw std::invalid_argument("exponent vectors must have length m");
    PQMonomial mono;
    for (int v = 1; v <= out.truncation(); ++v) {
      for (int i = 0; i < pe[v - 1]; ++i) mono.p_bits += PQMonomial::unit(v);
      for (int i = 0; i < qe[v - 1]; ++i) mono.q_bits += PQMonomial::unit(v);
    }
    out.add_term(mono, mpz_from(t.at("coefficient")));
  }
  return out;
}

RPolynomial r_polynomial_from_json(const std::string& text) {
  json j = json::parse(text);
  RPolynomial out;
  for (const auto& t : j.at("terms"))
    out.add_term(RMonomial(t.at("indices").get<std::vector<int>>()), mpz_from(t.at("coefficient")));
  return out;
}

BicoloredMap bicolored_map_from_json(const std::string& text) {
  return map_from(json::parse(text));
}

FormalMapSum formal_map_sum_from_json(const std::string& text) {
  json j = json::parse(text);
  FormalMapSum out(map_from(j.at("parent")));
  for (const auto& t : j.at("terms")) {
    auto labels = t.at("erased_edge_labels").get<std::vector<int>>();
    out.add_term(out.parent().edges_with_labels(labels), mpz_from(t.at("coefficient")));
  }
  return out;
}

}  // namespace kerov
