#include "eil/serialize.hpp"

namespace eil {

namespace {

Json edge_list(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

template <class T>
Json optional_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::vector<Edge> edges_from_json(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw InputError("expected an edge [u, v]");
    out.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return out;
}

}  // namespace

Json to_json(const Matching& m) { return edge_list(m.edges); }

Json to_json(const HSubgraph& h) {
  Json c5 = Json::array();
  for (const auto& c : h.c5) c5.push_back(c);
  return {{"k2", edge_list(h.k2)}, {"c5", c5}, {"match_number", h.match_number()}};
}

Json to_json(const CochordalCover& c) {
  Json parts = Json::array();
  for (const auto& p : c.parts) parts.push_back(edge_list(p));
  return {{"parts", parts}};
}

Json to_json(const PCDecomposition& d) {
  Json pairs = Json::array();
  for (const auto& [s, l] : d.pendant_pairs) pairs.push_back({s, l});
  Json cycles = Json::array();
  for (const auto& c : d.basic_cycles) cycles.push_back(c);
  return {{"pendant_pairs", pairs}, {"basic_cycles", cycles}};
}

Json to_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [ij, b] : t.entries) entries.push_back({ij.first, ij.second, b});
  return {{"field", field_name(t.field)},
          {"entries", entries},
          {"reg_quotient", t.reg_quotient()},
          {"reg_ideal", t.reg_ideal()}};
}

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const Monomial& m : ideal.generators) {
    Json g = Json::object();
    for (const auto& [x, e] : m.terms()) g[ideal.variables.at(x)] = e;
    gens.push_back(g);
  }
  return {{"variables", ideal.variables}, {"generators", gens}};
}

Json to_json(const Girth& g) { return g.length ? Json(*g.length) : Json("infinite"); }

Json to_json(const Invariants& inv) {
  Json j = {{"order", inv.order},
            {"edges", inv.edges},
            {"match", optional_value(inv.match)},
            {"min_match", optional_value(inv.min_match)},
            {"ind_match", optional_value(inv.ind_match)},
            {"ind_match_k2c5", optional_value(inv.ind_match_k2c5)},
            {"min_match_k2c5", optional_value(inv.min_match_k2c5)},
            {"cochord", optional_value(inv.cochord)},
            {"girth", to_json(inv.girth)},
            {"independence_number", optional_value(inv.independence_number)},
            {"is_cm_girth5", optional_value(inv.is_cm_girth5)}};
  Json w = Json::object();
  if (inv.maximum_matching) w["match"] = to_json(*inv.maximum_matching);
  if (inv.minimum_maximal_matching) w["min_match"] = to_json(*inv.minimum_maximal_matching);
  if (inv.maximum_induced_matching) w["ind_match"] = to_json(*inv.maximum_induced_matching);
  if (inv.ind_match_k2c5_witness) w["ind_match_k2c5"] = to_json(*inv.ind_match_k2c5_witness);
  if (inv.min_match_k2c5_witness) w["min_match_k2c5"] = to_json(*inv.min_match_k2c5_witness);
  if (inv.cochord_witness) w["cochord"] = to_json(*inv.cochord_witness);
  j["witnesses"] = w;
  if (!inv.skipped.empty()) j["skipped"] = inv.skipped;
  return j;
}

Json to_json(const Check& c) {
  Json j = {{"id", c.id},
            {"statement", c.statement},
            {"lhs", optional_value(c.lhs)},
            {"relation", c.relation},
            {"rhs", optional_value(c.rhs)}};
  if (c.rhs_alt) j["rhs_alt"] = *c.rhs_alt;
  j["status"] = status_name(c.status);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const BoundsReport& r) {
  Json checks = Json::array();
  for (const Check& c : r.checks) checks.push_back(to_json(c));
  Json j = {{"name", r.name},
            {"graph6", r.graph6},
            {"s", r.s},
            {"field", field_name(r.field)},
            {"invariants", to_json(r.invariants)},
            {"reg_ideal", optional_value(r.reg_ideal)},
            {"reg_quotient", optional_value(r.reg_quotient)},
            {"polarized_variables", optional_value(r.polarized_variables)}};
  if (r.betti) j["betti"] = to_json(*r.betti);
  j["checks"] = checks;
  j["strict_gap"] = r.strict_gap;
  return j;
}

Json to_json(const WitnessRecord& w) {
  Json j = {{"invariant", invariant_name(w.invariant)},
            {"found", w.found},
            {"w", w.found ? Json(w.w) : Json(nullptr)},
            {"f_G", w.f_g}};
  if (w.found) {
    j["f_G_minus_w"] = w.f_minus_w;
    j["f_G_minus_closed_neighborhood"] = w.f_minus_closed;
    j["strict"] = w.strict;
  }
  if (w.constructed_w) {
    j["constructed_w"] = *w.constructed_w;
    j["constructed_strict"] = optional_value(w.constructed_strict);
  }
  return j;
}

Json to_json(const UnionCheck& u) {
  return {{"reg_union_s", u.reg_union_s}, {"reg_a_s", u.reg_a_s}, {"reg_b", u.reg_b},
          {"rhs", u.reg_a_s + u.reg_b - 1}, {"holds", u.holds}};
}

Json to_json(const ScanSummary& s) {
  return {{"summary", true},
          {"config", s.config},
          {"graphs", s.graphs},
          {"reports", s.reports},
          {"holds", s.holds},
          {"violated", s.violated},
          {"skipped", s.skipped},
          {"regularity_skipped", s.regularity_skipped},
          {"violations", s.violations},
          {"strict_gaps", s.strict_gaps}};
}

BettiTable betti_from_json(const Json& j) {
  BettiTable t;
  t.field = parse_field(j.at("field").get<std::string>());
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw InputError("betti entry must be [i, j, value]");
    const auto v = e[2].get<std::uint64_t>();
    if (v != 0) t.entries[{e[0].get<int>(), e[1].get<int>()}] = v;
  }
  return t;
}

HSubgraph hsubgraph_from_json(const Json& j) {
  HSubgraph h;
  h.k2 = edges_from_json(j.at("k2"));
  for (const auto& c : j.at("c5")) h.c5.push_back(c.get<std::array<Vertex, 5>>());
  return h;
}

CochordalCover cover_from_json(const Json& j) {
  CochordalCover c;
  for (const auto& p : j.at("parts")) c.parts.push_back(edges_from_json(p));
  return c;
}

}  // namespace eil
