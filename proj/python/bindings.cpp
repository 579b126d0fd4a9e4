#include <algorithm>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "finhtop/errors.hpp"
#include "finhtop/homology.hpp"
#include "finhtop/io.hpp"
#include "finhtop/reduction.hpp"
#include "finhtop/verify.hpp"

namespace py = pybind11;
using namespace finhtop;

// Objects cross the boundary as JSON text in the file formats of the library;
// the Python package converts to and from dicts.

namespace {

ReductionBudget budget_of(std::size_t states)
{
    ReductionBudget b;
    b.states = states;
    return b;
}

FinitePoset poset_arg(const std::string& text) { return poset_from_json(parse_json(text)); }

std::string check(const std::string& theorem, const std::string& input, const std::string& p, const std::string& q,
                  std::size_t states)
{
    const Json j = parse_json(input);
    const ReductionBudget budget = budget_of(states);
    const Json& diagram = j.contains("diagram") ? j["diagram"] : j;
    CheckReport r;
    if (theorem == "ubp")
        r = check_ubp(poset_diagram_from_json(diagram), p);
    else if (theorem == "maximum")
        r = check_maximum(poset_diagram_from_json(diagram));
    else if (theorem == "homotopy")
        r = check_homotopy_lemma(morphism_from_json(j), budget);
    else if (theorem == "dbp")
        r = check_dbp(poset_diagram_from_json(diagram), p, q);
    else if (theorem == "dbpgen")
        r = check_dbpgen(poset_diagram_from_json(diagram), p, q, budget);
    else if (theorem == "up-wp")
        r = check_up_wp(poset_diagram_from_json(diagram), p, budget);
    else if (theorem == "cofinality")
        r = check_cofinality(poset_map_from_json(j.at("phi")), poset_diagram_from_json(diagram), budget);
    else if (theorem == "thomason")
        r = check_thomason_roundtrip(poset_diagram_from_json(diagram));
    else if (theorem == "barycentric")
        r = check_barycentric(complex_diagram_from_json(diagram));
    else if (theorem == "index-contractible")
        r = check_index_contractible(complex_diagram_from_json(diagram), budget);
    else if (theorem == "gamma-index")
        r = check_gamma_index(complex_diagram_from_json(diagram), budget);
    else
        throw ParseError("unknown theorem '" + theorem + "'");
    return to_json(r).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Finite posets as finite spaces: homotopy colimits, reductions, homology and theorem checks";

    py::register_exception<Error>(m, "FinhtopError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Json::exception& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    m.def("default_budget", [] { return kDefaultStateBudget; });
    m.def("theorem_ids", [] { return theorem_ids(); });

    m.def("core", [](const std::string& poset) {
        const CoreResult c = core(poset_arg(poset));
        return Json{{"core", to_json(c.core)}, {"steps", to_json(c.steps)}}.dump();
    });
    m.def("is_contractible", [](const std::string& poset) { return is_contractible(poset_arg(poset)); });
    m.def("poset_homology", [](const std::string& poset) { return to_json(poset_homology(poset_arg(poset))).dump(); });
    m.def("order_complex", [](const std::string& poset) { return to_json(order_complex(poset_arg(poset))).dump(); });
    m.def("to_dot", [](const std::string& poset) { return to_dot(poset_arg(poset)); });
    m.def("collapse", [](const std::string& poset, std::size_t states) {
        const CollapseResult c = collapse_search(poset_arg(poset), states);
        Json j{{"found", c.found()}, {"exhausted", c.exhausted}, {"states", c.states}};
        if (c.sequence)
            j["sequence"] = to_json(*c.sequence);
        return j.dump();
    });
    m.def("triviality", [](const std::string& poset, std::size_t states) {
        return to_json(triviality_oracle(poset_arg(poset), budget_of(states))).dump();
    });

    m.def("complex_homology",
          [](const std::string& complex) { return to_json(homology_profile(complex_from_json(parse_json(complex)))).dump(); });
    m.def("face_poset",
          [](const std::string& complex) { return to_json(face_poset(complex_from_json(parse_json(complex)))).dump(); });
    m.def("barycentric",
          [](const std::string& complex) { return to_json(barycentric(complex_from_json(parse_json(complex)))).dump(); });

    m.def("hocolim",
          [](const std::string& diagram) { return to_json(hocolim(poset_diagram_from_json(parse_json(diagram)))).dump(); });
    m.def("mapping_cylinder",
          [](const std::string& map) { return to_json(mapping_cylinder(poset_map_from_json(parse_json(map)))).dump(); });

    m.def("check", &check, py::arg("theorem"), py::arg("input"), py::arg("p") = "", py::arg("q") = "",
          py::arg("budget") = kDefaultStateBudget, py::call_guard<py::gil_scoped_release>());
    m.def(
        "random_checks",
        [](const std::string& theorem, std::size_t count, std::uint64_t seed, std::size_t states, std::size_t jobs) {
            if (std::find(theorem_ids().begin(), theorem_ids().end(), theorem) == theorem_ids().end())
                throw ParseError("unknown theorem '" + theorem + "'");
            Json all = Json::array();
            for (const auto& r : run_random_checks(theorem, count, seed, budget_of(states), jobs))
                all.push_back(to_json(r));
            return all.dump();
        },
        py::arg("theorem"), py::arg("count"), py::arg("seed") = 0, py::arg("budget") = kDefaultStateBudget,
        py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());
}
