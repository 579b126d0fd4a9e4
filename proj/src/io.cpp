#include "finhtop/io.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "finhtop/errors.hpp"

namespace finhtop {

namespace {

const Json& field(const Json& json, const char* key)
{
    if (!json.is_object())
        throw ParseError(std::string("expected an object with key '") + key + "'");
    auto it = json.find(key);
    if (it == json.end())
        throw ParseError(std::string("missing key '") + key + "'");
    return *it;
}

std::vector<std::string> string_array(const Json& json, const char* what)
{
    if (!json.is_array())
        throw ParseError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& item : json) {
        if (!item.is_string())
            throw ParseError(std::string(what) + " must contain strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::map<std::string, std::string> string_map(const Json& json, const char* what)
{
    if (!json.is_object())
        throw ParseError(std::string(what) + " must be an object");
    std::map<std::string, std::string> out;
    for (auto it = json.begin(); it != json.end(); ++it) {
        if (!it.value().is_string())
            throw ParseError(std::string(what) + " values must be strings");
        out.emplace(it.key(), it.value().get<std::string>());
    }
    return out;
}

Json string_map_json(const std::map<std::string, std::string>& map)
{
    Json out = Json::object();
    for (const auto& [k, v] : map)
        out[k] = v;
    return out;
}

/// Splits "p->q" into two index elements; the split must be unique.
std::pair<std::string, std::string> split_transition_key(const std::string& key, const FinitePoset& index)
{
    std::optional<std::pair<std::string, std::string>> found;
    for (auto pos = key.find("->"); pos != std::string::npos; pos = key.find("->", pos + 1)) {
        std::string p = key.substr(0, pos), q = key.substr(pos + 2);
        if (index.contains(p) && index.contains(q)) {
            if (found)
                throw ParseError("ambiguous transition key '" + key + "'");
            found.emplace(std::move(p), std::move(q));
        }
    }
    if (!found)
        throw ParseError("transition key '" + key + "' does not name two index elements");
    return *found;
}

Json bigint_json(const BigInt& value)
{
    if (value <= std::numeric_limits<long long>::max() && value >= std::numeric_limits<long long>::min())
        return static_cast<long long>(value);
    return value.str();
}

BigInt bigint_from_json(const Json& json)
{
    if (json.is_number_integer())
        return BigInt(json.get<long long>());
    if (json.is_string())
        return BigInt(json.get<std::string>());
    throw ParseError("torsion coefficients must be integers");
}

template <class T>
T parse_enum(const std::string& text, std::initializer_list<T> values, const char* what)
{
    for (T v : values)
        if (to_string(v) == text)
            return v;
    throw ParseError(std::string("unknown ") + what + " '" + text + "'");
}

}  // namespace

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str());
}

std::string dump_json(const Json& value) { return value.dump(2) + "\n"; }

Json to_json(const FinitePoset& poset)
{
    Json relations = Json::array();
    for (const auto& [x, y] : poset.covers())
        relations.push_back(Json::array({x, y}));
    return Json{{"elements", poset.elements()}, {"relations", relations}};
}

FinitePoset poset_from_json(const Json& json)
{
    auto elements = string_array(field(json, "elements"), "elements");
    std::vector<Relation> relations;
    const Json& rel = field(json, "relations");
    if (!rel.is_array())
        throw ParseError("relations must be an array");
    for (const auto& pair : rel) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw ParseError("each relation must be a pair of strings");
        relations.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return FinitePoset(std::move(elements), relations);
}

Json to_json(const PosetMap& map)
{
    return Json{{"source", to_json(map.source())}, {"target", to_json(map.target())},
                {"map", string_map_json(map.as_map())}};
}

PosetMap poset_map_from_json(const Json& json)
{
    return PosetMap::from_assignment(poset_from_json(field(json, "source")), poset_from_json(field(json, "target")),
                                     string_map(field(json, "map"), "map"));
}

Json to_json(const SimplicialComplex& complex)
{
    Json facets = Json::array();
    for (const auto& facet : complex.facets()) {
        Json names = Json::array();
        for (std::size_t v : facet)
            names.push_back(complex.vertex(v));
        facets.push_back(std::move(names));
    }
    return Json{{"vertices", complex.vertices()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const Json& json)
{
    auto vertices = string_array(field(json, "vertices"), "vertices");
    const Json& facets = field(json, "facets");
    if (!facets.is_array())
        throw ParseError("facets must be an array");
    std::vector<std::vector<std::string>> simplices;
    for (const auto& facet : facets)
        simplices.push_back(string_array(facet, "facet"));
    return SimplicialComplex(std::move(vertices), simplices);
}

Json to_json(const SimplicialMap& map)
{
    return Json{{"source", to_json(map.source())}, {"target", to_json(map.target())},
                {"map", string_map_json(map.as_map())}};
}

SimplicialMap simplicial_map_from_json(const Json& json)
{
    return SimplicialMap::from_assignment(complex_from_json(field(json, "source")),
                                          complex_from_json(field(json, "target")),
                                          string_map(field(json, "map"), "map"));
}

namespace {

template <class Diagram, class FiberToJson>
Json diagram_json(const Diagram& diagram, FiberToJson fiber_json)
{
    const FinitePoset& index = diagram.index();
    Json fibers = Json::object();
    for (std::size_t p = 0; p < index.size(); ++p)
        fibers[index.element(p)] = fiber_json(diagram.fiber(p));
    Json transitions = Json::object();
    for (const auto& [p, q] : index.covers())
        transitions[p + "->" + q] = string_map_json(diagram.transition(p, q).as_map());
    return Json{{"index", to_json(index)}, {"fibers", fibers}, {"transitions", transitions}};
}

template <class Fiber, class Map, class FiberFromJson>
std::pair<std::map<std::string, Fiber>, std::map<std::pair<std::string, std::string>, Map>>
diagram_parts(const FinitePoset& index, const Json& json, FiberFromJson fiber_from_json)
{
    std::map<std::string, Fiber> fibers;
    const Json& fj = field(json, "fibers");
    if (!fj.is_object())
        throw ParseError("fibers must be an object");
    for (auto it = fj.begin(); it != fj.end(); ++it) {
        if (!index.contains(it.key()))
            throw UnknownElement(it.key());
        fibers.emplace(it.key(), fiber_from_json(it.value()));
    }
    std::map<std::pair<std::string, std::string>, Map> maps;
    const Json& tj = field(json, "transitions");
    if (!tj.is_object())
        throw ParseError("transitions must be an object");
    for (auto it = tj.begin(); it != tj.end(); ++it) {
        auto key = split_transition_key(it.key(), index);
        auto fp = fibers.find(key.first), fq = fibers.find(key.second);
        if (fp == fibers.end())
            throw MissingFiber("no fiber for '" + key.first + "'");
        if (fq == fibers.end())
            throw MissingFiber("no fiber for '" + key.second + "'");
        maps.emplace(key, Map::from_assignment(fp->second, fq->second, string_map(it.value(), "transition")));
    }
    return {std::move(fibers), std::move(maps)};
}

}  // namespace

Json to_json(const PosetDiagram& diagram)
{
    return diagram_json(diagram, [](const FinitePoset& f) { return to_json(f); });
}

PosetDiagram poset_diagram_from_json(const Json& json)
{
    FinitePoset index = poset_from_json(field(json, "index"));
    auto [fibers, maps] = diagram_parts<FinitePoset, PosetMap>(index, json, poset_from_json);
    return PosetDiagram(std::move(index), fibers, maps);
}

Json to_json(const ComplexDiagram& diagram)
{
    return diagram_json(diagram, [](const SimplicialComplex& c) { return to_json(c); });
}

ComplexDiagram complex_diagram_from_json(const Json& json)
{
    FinitePoset index = poset_from_json(field(json, "index"));
    auto [fibers, maps] = diagram_parts<SimplicialComplex, SimplicialMap>(index, json, complex_from_json);
    return ComplexDiagram(std::move(index), fibers, maps);
}

bool is_complex_diagram_json(const Json& json)
{
    if (!json.is_object() || !json.contains("fibers") || !json["fibers"].is_object())
        return false;
    for (const auto& fiber : json["fibers"])
        return fiber.is_object() && fiber.contains("vertices");
    return false;
}

Json to_json(const DiagramMorphism& morphism)
{
    const FinitePoset& index = morphism.source().index();
    Json components = Json::object();
    for (std::size_t p = 0; p < index.size(); ++p)
        components[index.element(p)] = string_map_json(morphism.component(p).as_map());
    return Json{{"source", to_json(morphism.source())},
                {"target", to_json(morphism.target())},
                {"components", components}};
}

DiagramMorphism morphism_from_json(const Json& json)
{
    PosetDiagram source = poset_diagram_from_json(field(json, "source"));
    PosetDiagram target = poset_diagram_from_json(field(json, "target"));
    const Json& cj = field(json, "components");
    std::vector<PosetMap> components;
    for (std::size_t p = 0; p < source.index().size(); ++p) {
        const std::string& id = source.index().element(p);
        if (!cj.contains(id))
            throw ParseError("missing component for '" + id + "'");
        components.push_back(PosetMap::from_assignment(source.fiber(p), target.fiber(p), string_map(cj[id], "component")));
    }
    return DiagramMorphism(std::move(source), std::move(target), std::move(components));
}

Json to_json(const RemovalSequence& sequence)
{
    Json out = Json::array();
    for (const auto& step : sequence)
        out.push_back(Json{{"element", step.element}, {"kind", to_string(step.kind)}});
    return out;
}

RemovalSequence sequence_from_json(const Json& json)
{
    if (!json.is_array())
        throw ParseError("a removal sequence must be an array");
    RemovalSequence out;
    for (const auto& item : json) {
        const Json& element = field(item, "element");
        const Json& kind = field(item, "kind");
        if (!element.is_string() || !kind.is_string())
            throw ParseError("removal steps need string element and kind");
        auto parsed = parse_removal_kind(kind.get<std::string>());
        if (!parsed)
            throw ParseError("unknown removal kind '" + kind.get<std::string>() + "'");
        out.push_back({element.get<std::string>(), *parsed});
    }
    return out;
}

Json to_json(const HomologyProfile& profile)
{
    Json out = Json::array();
    for (std::size_t k = 0; k < profile.degrees.size(); ++k) {
        Json torsion = Json::array();
        for (const auto& d : profile.degrees[k].torsion)
            torsion.push_back(bigint_json(d));
        out.push_back(Json{{"degree", k}, {"betti", profile.degrees[k].betti}, {"torsion", torsion}});
    }
    return out;
}

HomologyProfile profile_from_json(const Json& json)
{
    if (!json.is_array())
        throw ParseError("a homology profile must be an array");
    HomologyProfile out;
    for (const auto& item : json) {
        const Json& degree = field(item, "degree");
        if (!degree.is_number_unsigned() || degree.get<std::size_t>() != out.degrees.size())
            throw ParseError("profile degrees must be consecutive from 0");
        HomologyDegree d;
        const Json& betti = field(item, "betti");
        if (!betti.is_number_unsigned())
            throw ParseError("betti numbers must be nonnegative integers");
        d.betti = betti.get<std::size_t>();
        const Json& torsion = field(item, "torsion");
        if (!torsion.is_array())
            throw ParseError("torsion must be an array");
        for (const auto& t : torsion)
            d.torsion.push_back(bigint_from_json(t));
        out.degrees.push_back(std::move(d));
    }
    return out;
}

Json to_json(const Triviality& triviality)
{
    Json out{{"verdict", to_string(triviality.verdict)}, {"reason", triviality.reason},
             {"reduction", to_json(triviality.reduction)}};
    if (triviality.certificate)
        out["certificate"] = to_json(*triviality.certificate);
    return out;
}

Json to_json(const CheckReport& report)
{
    Json sequences = Json::array();
    for (const auto& [name, seq] : report.sequences)
        sequences.push_back(Json{{"name", name}, {"steps", to_json(seq)}});
    Json profiles = Json::array();
    for (const auto& [name, profile] : report.profiles)
        profiles.push_back(Json{{"name", name}, {"profile", to_json(profile)}});
    Json out{
        {"theorem", report.theorem},
        {"hypothesis",
         {{"status", to_string(report.hypothesis)},
          {"reason", report.hypothesis_reason},
          {"evidence", to_string(report.hypothesis_evidence)}}},
        {"conclusion", {{"status", to_string(report.conclusion)}, {"evidence", to_string(report.conclusion_evidence)}}},
        {"necessary_condition", report.necessary_condition()},
        {"sequences", sequences},
        {"profiles", profiles},
        {"notes", report.notes},
    };
    if (report.counterexample)
        out["counterexample"] = parse_json(*report.counterexample);
    return out;
}

CheckReport report_from_json(const Json& json)
{
    CheckReport report;
    try {
        report.theorem = field(json, "theorem").get<std::string>();
        const Json& h = field(json, "hypothesis");
        report.hypothesis = parse_enum(field(h, "status").get<std::string>(),
                                       {HypothesisStatus::Established, HypothesisStatus::NotEstablished,
                                        HypothesisStatus::OracleUnknown},
                                       "hypothesis status");
        report.hypothesis_reason = field(h, "reason").get<std::string>();
        const std::initializer_list<Evidence> evidences = {Evidence::Structural, Evidence::Certified,
                                                           Evidence::Constructive, Evidence::Homology};
        report.hypothesis_evidence = parse_enum(field(h, "evidence").get<std::string>(), evidences, "evidence");
        const Json& c = field(json, "conclusion");
        report.conclusion = parse_enum(field(c, "status").get<std::string>(),
                                       {ConclusionStatus::Verified, ConclusionStatus::Refuted, ConclusionStatus::Skipped},
                                       "conclusion status");
        report.conclusion_evidence = parse_enum(field(c, "evidence").get<std::string>(), evidences, "evidence");
        for (const auto& s : field(json, "sequences"))
            report.sequences.emplace_back(field(s, "name").get<std::string>(), sequence_from_json(field(s, "steps")));
        for (const auto& p : field(json, "profiles"))
            report.profiles.emplace_back(field(p, "name").get<std::string>(), profile_from_json(field(p, "profile")));
        report.notes = string_array(field(json, "notes"), "notes");
        if (json.contains("counterexample"))
            report.counterexample = json["counterexample"].dump();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
    return report;
}

namespace {

std::string dot_quote(const std::string& id)
{
    std::string out = "\"";
    for (char c : id) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const FinitePoset& poset, const std::string& name)
{
    std::ostringstream out;
    out << "digraph " << dot_quote(name) << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=plaintext];\n";
    const auto h = heights(poset);
    std::size_t top = 0;
    for (std::size_t v : h)
        top = std::max(top, v);
    for (std::size_t level = 0; level <= top && !poset.empty(); ++level) {
        out << "  { rank=same;";
        for (std::size_t i = 0; i < poset.size(); ++i)
            if (h[i] == level)
                out << ' ' << dot_quote(poset.element(i)) << ';';
        out << " }\n";
    }
    for (const auto& [x, y] : poset.covers())
        out << "  " << dot_quote(x) << " -> " << dot_quote(y) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace finhtop
