#pragma once

// JSON emission and parsing for the public value types. Fractions are strings.

#include <json.hpp>

#include "ohtsuki/chord_diagram.hpp"
#include "ohtsuki/engine.hpp"
#include "ohtsuki/filtration.hpp"
#include "ohtsuki/graph.hpp"
#include "ohtsuki/mu.hpp"

namespace ohtsuki {

using Json = nlohmann::ordered_json;

/// {"m":3,"slots":[[1,"out"],[2,"out"],...]}
Json to_json(const ChordDiagram& c);
ChordDiagram diagram_from_json(const Json& j);

/// {"terms":[{"key":"<hex>","name":"bubble","coeff":"3"}],"case2":[...]}
Json to_json(const GraphVector& v);
GraphVector graph_vector_from_json(const Json& j);

/// {"ambient":[0,1,2],"triples":[{"c":[0,1,2],"v":1}]}
Json to_json(const MuCollection& mc);
MuCollection mu_from_json(const Json& j);

/// {"input":...,"vector":{...},"case2":[...],"trace":[...]}; trace only when requested.
Json to_json(const EvalResult& r, const std::string& input, bool with_trace);

/// {"rank":r,"forced_zero":[...],"unknowns":[...],"rows":n,"conjectural_rows":c}
Json to_json(const SolveResult& s, const RelationSystem& rs);

Json to_json(const DiagramRelation& rel);

}  // namespace ohtsuki
