#include "ohtsuki/io.hpp"

#include <stdexcept>

namespace ohtsuki {

Json to_json(const ChordDiagram& c) {
  Json slots = Json::array();
  for (const auto& s : c.slots()) slots.push_back({s.chord, s.polarity == Polarity::Outgoing ? "out" : "in"});
  return {{"m", c.chords()}, {"slots", std::move(slots)}};
}

ChordDiagram diagram_from_json(const Json& j) {
  std::vector<Slot> slots;
  for (const auto& s : j.at("slots")) {
    const auto pol = s.at(1).get<std::string>();
    if (pol != "out" && pol != "in") throw std::invalid_argument("slot polarity must be \"out\" or \"in\"");
    slots.push_back({s.at(0).get<int>(), pol == "out" ? Polarity::Outgoing : Polarity::Incoming});
  }
  ChordDiagram c(std::move(slots));
  if (j.contains("m") && j.at("m").get<int>() != c.chords()) throw std::invalid_argument("chord count mismatch");
  return c;
}

namespace {

Json terms_json(const std::map<GraphKey, Rational>& terms) {
  Json out = Json::array();
  for (const auto& [k, c] : terms) out.push_back({{"key", k.hex()}, {"name", graph_name(k)}, {"coeff", to_string(c)}});
  return out;
}

}  // namespace

Json to_json(const GraphVector& v) {
  Json j = {{"terms", terms_json(v.terms())}};
  if (!v.tagged().empty()) j["case2"] = terms_json(v.tagged());
  return j;
}

GraphVector graph_vector_from_json(const Json& j) {
  GraphVector v(true);
  for (const auto& t : j.at("terms"))
    v.add(GraphKey::from_hex(t.at("key").get<std::string>()), parse_rational(t.at("coeff").get<std::string>()));
  if (j.contains("case2"))
    for (const auto& t : j.at("case2"))
      v.add_tagged(GraphKey::from_hex(t.at("key").get<std::string>()), parse_rational(t.at("coeff").get<std::string>()));
  return v;
}

Json to_json(const MuCollection& mc) {
  Json triples = Json::array();
  for (const auto& [t, v] : mc.entries()) triples.push_back({{"c", t}, {"v", v}});
  return {{"ambient", mc.ambient()}, {"triples", std::move(triples)}};
}

MuCollection mu_from_json(const Json& j) {
  MuCollection mc(j.at("ambient").get<ComponentSet>());
  for (const auto& t : j.at("triples")) {
    const auto c = t.at("c").get<std::vector<Component>>();
    if (c.size() != 3) throw std::invalid_argument("triple must have three indices");
    mc.add(c[0], c[1], c[2], t.at("v").get<int>());
  }
  return mc;
}

Json to_json(const EvalResult& r, const std::string& input, bool with_trace) {
  Json j = {{"input", input}, {"vector", to_json(r.vector)}, {"case2", terms_json(r.case2_terms())}};
  if (with_trace) {
    Json trace = Json::array();
    for (const auto& t : r.trace) {
      Json e = {{"kind", t.pair ? "pair" : "single"}};
      e["circles"] = t.pair ? Json::array({t.i, t.j}) : Json::array({t.i});
      if (t.pair) e["case"] = to_string(t.pair_case);
      e["coeff"] = to_string(t.coefficient);
      e["outcome"] = t.outcome;
      trace.push_back(std::move(e));
    }
    j["trace"] = std::move(trace);
  }
  return j;
}

Json to_json(const SolveResult& s, const RelationSystem& rs) {
  return {{"rank", s.rank},
          {"forced_zero", s.forced_zero},
          {"unknowns", rs.unknowns()},
          {"rows", rs.rows().size()},
          {"conjectural_rows", rs.conjectural_rows()}};
}

Json to_json(const DiagramRelation& rel) {
  Json terms = Json::array();
  for (const auto& [d, c] : rel.terms) terms.push_back({{"diagram", format_diagram(d)}, {"coeff", to_string(c)}});
  return {{"terms", std::move(terms)}};
}

}  // namespace ohtsuki
