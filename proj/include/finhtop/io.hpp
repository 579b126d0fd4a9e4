#pragma once

#include <string>

#include <json.hpp>

#include "finhtop/diagram.hpp"
#include "finhtop/homology.hpp"
#include "finhtop/poset.hpp"
#include "finhtop/reduction.hpp"
#include "finhtop/simplicial.hpp"
#include "finhtop/verify.hpp"

namespace finhtop {

using Json = nlohmann::json;

/// Parses JSON text; throws ParseError.
Json parse_json(const std::string& text);
/// Reads and parses a file; throws ParseError.
Json read_json_file(const std::string& path);
/// Two-space indented, keys sorted; stable across runs.
std::string dump_json(const Json& value);

/// {"elements": [...], "relations": [[x, y], ...]} with covers sorted.
Json to_json(const FinitePoset& poset);
FinitePoset poset_from_json(const Json& json);

/// {"source": <poset>, "target": <poset>, "map": {"x": "y", ...}}.
Json to_json(const PosetMap& map);
PosetMap poset_map_from_json(const Json& json);

/// {"vertices": [...], "facets": [[...], ...]}.
Json to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const Json& json);

/// {"source": <complex>, "target": <complex>, "map": {...}}.
Json to_json(const SimplicialMap& map);
SimplicialMap simplicial_map_from_json(const Json& json);

/// {"index": <poset>, "fibers": {"p": ...}, "transitions": {"p->q": {...}}}, covers only.
Json to_json(const PosetDiagram& diagram);
PosetDiagram poset_diagram_from_json(const Json& json);
Json to_json(const ComplexDiagram& diagram);
ComplexDiagram complex_diagram_from_json(const Json& json);
/// True when the fibers are complexes (objects with "vertices").
bool is_complex_diagram_json(const Json& json);

/// {"source": <diagram>, "target": <diagram>, "components": {"p": {...}}}.
Json to_json(const DiagramMorphism& morphism);
DiagramMorphism morphism_from_json(const Json& json);

/// [{"element": ..., "kind": ...}, ...].
Json to_json(const RemovalSequence& sequence);
RemovalSequence sequence_from_json(const Json& json);

/// [{"degree": k, "betti": b, "torsion": [...]}, ...].
Json to_json(const HomologyProfile& profile);
HomologyProfile profile_from_json(const Json& json);

Json to_json(const Triviality& triviality);

Json to_json(const CheckReport& report);
CheckReport report_from_json(const Json& json);

/// Hasse diagram in DOT, one rank per height, covers as edges pointing up.
std::string to_dot(const FinitePoset& poset, const std::string& name = "P");

}  // namespace finhtop
