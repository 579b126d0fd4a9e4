#include "finhtop/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "finhtop/errors.hpp"
#include "finhtop/io.hpp"
#include "finhtop/random.hpp"
#include "finhtop/verify.hpp"

namespace finhtop {

namespace {

struct Config {
    std::string format = "text";
    std::uint64_t seed = 0;
    std::optional<std::size_t> budget;
    std::string input;
    std::string theorem;
    std::size_t random = 0;
    std::size_t jobs = 1;
    std::string p, q;
    std::vector<std::string> keep;
    bool opposite = false;
};

std::size_t resolve_budget(const Config& config)
{
    if (config.budget)
        return *config.budget;
    if (const char* env = std::getenv(kBudgetEnv)) {
        try {
            std::size_t used = 0;
            const unsigned long long value = std::stoull(env, &used);
            if (used == std::string(env).size())
                return value;
        } catch (const std::exception&) {
        }
        throw ParseError(std::string(kBudgetEnv) + " must be a nonnegative integer");
    }
    return kDefaultStateBudget;
}

void require_format(const Config& config, std::initializer_list<const char*> allowed)
{
    for (const char* f : allowed)
        if (config.format == f)
            return;
    throw ParseError("format '" + config.format + "' is not available for this command");
}

void write_poset(std::ostream& out, const Config& config, const FinitePoset& poset)
{
    if (config.format == "json")
        out << dump_json(to_json(poset));
    else if (config.format == "dot")
        out << to_dot(poset);
    else {
        out << "elements:";
        for (const auto& x : poset.elements())
            out << ' ' << x;
        out << "\ncovers:\n";
        for (const auto& [x, y] : poset.covers())
            out << "  " << x << " < " << y << '\n';
    }
}

void write_complex(std::ostream& out, const Config& config, const SimplicialComplex& complex)
{
    require_format(config, {"text", "json"});
    if (config.format == "json") {
        out << dump_json(to_json(complex));
        return;
    }
    out << "vertices: " << complex.vertex_count() << ", dimension: " << complex.dimension() << "\nfacets:\n";
    for (const auto& facet : complex.facets())
        out << "  " << complex.simplex_name(facet) << '\n';
}

void write_profile(std::ostream& out, const Config& config, const HomologyProfile& profile)
{
    require_format(config, {"text", "json"});
    if (config.format == "json")
        out << dump_json(to_json(profile));
    else
        out << format_profile(profile);
}

void write_sequence_text(std::ostream& out, const RemovalSequence& sequence)
{
    for (const auto& step : sequence)
        out << "  " << step.element << " (" << to_string(step.kind) << ")\n";
}

void write_report_text(std::ostream& out, const CheckReport& r)
{
    out << r.theorem << ": " << to_string(r.conclusion) << '\n';
    out << "  hypothesis: " << to_string(r.hypothesis) << " [" << to_string(r.hypothesis_evidence) << "] "
        << r.hypothesis_reason << '\n';
    out << "  conclusion evidence: " << to_string(r.conclusion_evidence)
        << (r.necessary_condition() ? " (necessary-condition regime)" : "") << '\n';
    for (const auto& [name, seq] : r.sequences)
        out << "  sequence " << name << ": " << seq.size() << " steps\n";
    for (const auto& [name, profile] : r.profiles) {
        out << "  profile " << name << ":";
        for (std::size_t k = 0; k < profile.degrees.size(); ++k)
            out << " b" << k << "=" << profile.betti(k);
        out << '\n';
    }
    for (const auto& note : r.notes)
        out << "  note: " << note << '\n';
}

int write_reports(std::ostream& out, const Config& config, const std::vector<CheckReport>& reports, bool single)
{
    require_format(config, {"text", "json"});
    if (config.format == "json") {
        if (single && reports.size() == 1) {
            out << dump_json(to_json(reports.front()));
        } else {
            Json all = Json::array();
            for (const auto& r : reports)
                all.push_back(to_json(r));
            out << dump_json(all);
        }
    } else {
        std::size_t counts[3] = {0, 0, 0};
        for (const auto& r : reports) {
            write_report_text(out, r);
            ++counts[static_cast<int>(r.conclusion)];
        }
        if (reports.size() > 1)
            out << "summary: " << counts[0] << " verified, " << counts[1] << " refuted, " << counts[2]
                << " skipped\n";
    }
    for (const auto& r : reports)
        if (r.conclusion == ConclusionStatus::Refuted)
            return 1;
    return 0;
}

/// The diagram inside a check input, which is either the bundle or the diagram itself.
const Json& diagram_part(const Json& input) { return input.contains("diagram") ? input["diagram"] : input; }

std::string point_argument(const Json& input, const std::string& flag, const char* key)
{
    if (!flag.empty())
        return flag;
    if (input.contains(key) && input[key].is_string())
        return input[key].get<std::string>();
    throw ParseError(std::string("missing '") + key + "': pass --" + key + " or include it in the input");
}

CheckReport check_from_input(const Config& config, const Json& input, const ReductionBudget& budget)
{
    const std::string& id = config.theorem;
    if (id == "ubp")
        return check_ubp(poset_diagram_from_json(diagram_part(input)), point_argument(input, config.p, "p"));
    if (id == "maximum")
        return check_maximum(poset_diagram_from_json(diagram_part(input)));
    if (id == "homotopy")
        return check_homotopy_lemma(morphism_from_json(input), budget);
    if (id == "dbp" || id == "dbpgen") {
        const std::string p = point_argument(input, config.p, "p");
        const std::string q = point_argument(input, config.q, "q");
        const PosetDiagram diagram = poset_diagram_from_json(diagram_part(input));
        return id == "dbp" ? check_dbp(diagram, p, q) : check_dbpgen(diagram, p, q, budget);
    }
    if (id == "up-wp")
        return check_up_wp(poset_diagram_from_json(diagram_part(input)), point_argument(input, config.p, "p"),
                           budget);
    if (id == "cofinality") {
        if (!input.contains("phi"))
            throw ParseError("cofinality input needs 'phi' and 'diagram'");
        return check_cofinality(poset_map_from_json(input["phi"]), poset_diagram_from_json(diagram_part(input)),
                                budget);
    }
    if (id == "thomason")
        return check_thomason_roundtrip(poset_diagram_from_json(diagram_part(input)));
    if (id == "barycentric")
        return check_barycentric(complex_diagram_from_json(diagram_part(input)));
    if (id == "index-contractible")
        return check_index_contractible(complex_diagram_from_json(diagram_part(input)), budget);
    if (id == "gamma-index")
        return check_gamma_index(complex_diagram_from_json(diagram_part(input)), budget);
    throw ParseError("unknown theorem '" + id + "'");
}

int run_check(std::ostream& out, const Config& config)
{
    ReductionBudget budget;
    budget.states = resolve_budget(config);
    const auto& ids = theorem_ids();
    if (config.theorem != "all" && std::find(ids.begin(), ids.end(), config.theorem) == ids.end())
        throw ParseError("unknown theorem '" + config.theorem + "'");

    if (!config.input.empty()) {
        if (config.theorem == "all")
            throw ParseError("'check all' does not take an input file");
        return write_reports(out, config, {check_from_input(config, read_json_file(config.input), budget)}, true);
    }

    std::vector<CheckReport> reports;
    if (config.theorem == "all" || config.random == 0)
        for (auto& r : example_checks(budget))
            if (config.theorem == "all" || r.theorem == config.theorem)
                reports.push_back(std::move(r));
    if (config.theorem == "all") {
        const std::size_t count = config.random == 0 ? 10 : config.random;
        for (std::size_t k = 0; k < ids.size(); ++k)
            for (auto& r : run_random_checks(ids[k], count, derive_seed(config.seed, k), budget, config.jobs))
                reports.push_back(std::move(r));
    } else if (config.random > 0) {
        reports = run_random_checks(config.theorem, config.random, config.seed, budget, config.jobs);
    }
    return write_reports(out, config, reports, false);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config config;
    CLI::App app{"Finite spaces, homotopy colimits of poset diagrams, and theorem checks", "finhtop"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--seed", config.seed, "Seed for random instances (default 0)");
    app.add_option("--budget", config.budget, "Search budget in states (default 100000, or $FINHTOP_BUDGET)");

    int code = 0;
    auto guarded = [&](auto body) {
        return [&, body] {
            std::ostringstream buffer;
            code = body(buffer);
            out << buffer.str();
        };
    };

    auto* poset = app.add_subcommand("poset", "Operations on a single poset")->require_subcommand(1);
    auto add_poset_cmd = [&](const char* name, const char* help, auto action) {
        auto* cmd = poset->add_subcommand(name, help);
        cmd->add_option("file", config.input, "Poset JSON file")->required();
        cmd->callback(guarded([&, action](std::ostream& o) { return action(o, poset_from_json(read_json_file(config.input))); }));
        return cmd;
    };
    add_poset_cmd("core", "Stong core and the beat points removed", [&](std::ostream& o, const FinitePoset& p) {
        const CoreResult result = core(p);
        if (config.format == "json") {
            o << dump_json(Json{{"core", to_json(result.core)}, {"steps", to_json(result.steps)}});
        } else if (config.format == "dot") {
            o << to_dot(result.core);
        } else {
            write_poset(o, config, result.core);
            o << "removed:\n";
            write_sequence_text(o, result.steps);
        }
        return 0;
    });
    add_poset_cmd("contractible", "Whether the poset is dismantlable", [&](std::ostream& o, const FinitePoset& p) {
        require_format(config, {"text", "json"});
        const bool c = is_contractible(p);
        if (config.format == "json")
            o << dump_json(Json{{"contractible", c}});
        else
            o << (c ? "true" : "false") << '\n';
        return 0;
    });
    add_poset_cmd("ordercomplex", "Order complex K(P)", [&](std::ostream& o, const FinitePoset& p) {
        write_complex(o, config, order_complex(p));
        return 0;
    });
    add_poset_cmd("homology", "Integral homology of K(P)", [&](std::ostream& o, const FinitePoset& p) {
        write_profile(o, config, poset_homology(p));
        return 0;
    });
    add_poset_cmd("export-dot", "Hasse diagram in DOT", [&](std::ostream& o, const FinitePoset& p) {
        o << to_dot(p);
        return 0;
    });
    add_poset_cmd("collapse", "Search for a collapse to a point", [&](std::ostream& o, const FinitePoset& p) {
        require_format(config, {"text", "json"});
        const CollapseResult result = collapse_search(p, resolve_budget(config));
        if (config.format == "json") {
            Json j{{"found", result.found()}, {"exhausted", result.exhausted}, {"states", result.states}};
            if (result.sequence)
                j["sequence"] = to_json(*result.sequence);
            o << dump_json(j);
        } else {
            o << (result.found() ? "collapsible" : result.exhausted ? "not collapsible" : "undecided (budget)") << '\n';
            if (result.sequence)
                write_sequence_text(o, *result.sequence);
        }
        return 0;
    });
    add_poset_cmd("trivial", "Three-valued homotopical triviality", [&](std::ostream& o, const FinitePoset& p) {
        require_format(config, {"text", "json"});
        ReductionBudget budget;
        budget.states = resolve_budget(config);
        const Triviality t = triviality_oracle(p, budget);
        if (config.format == "json") {
            o << dump_json(to_json(t));
        } else {
            o << to_string(t.verdict) << " (" << t.reason << ")\n";
            write_sequence_text(o, t.reduction);
            if (t.certificate)
                o << format_profile(*t.certificate);
        }
        return 0;
    });

    auto* complex = app.add_subcommand("complex", "Operations on a simplicial complex")->require_subcommand(1);
    auto add_complex_cmd = [&](const char* name, const char* help, auto action) {
        auto* cmd = complex->add_subcommand(name, help);
        cmd->add_option("file", config.input, "Complex JSON file")->required();
        cmd->callback(
            guarded([&, action](std::ostream& o) { return action(o, complex_from_json(read_json_file(config.input))); }));
        return cmd;
    };
    add_complex_cmd("faceposet", "Face poset X(K)", [&](std::ostream& o, const SimplicialComplex& k) {
        write_poset(o, config, config.opposite ? face_poset_op(k) : face_poset(k));
        return 0;
    })->add_flag("--op", config.opposite, "Opposite order");
    add_complex_cmd("sd", "Barycentric subdivision K(X(K))", [&](std::ostream& o, const SimplicialComplex& k) {
        write_complex(o, config, barycentric(k));
        return 0;
    });
    add_complex_cmd("homology", "Integral homology", [&](std::ostream& o, const SimplicialComplex& k) {
        write_profile(o, config, homology_profile(k));
        return 0;
    });

    auto* diagram = app.add_subcommand("diagram", "Operations on poset diagrams")->require_subcommand(1);
    auto* hoc = diagram->add_subcommand("hocolim", "Grothendieck construction of a diagram");
    hoc->add_option("file", config.input, "Diagram JSON file")->required();
    hoc->callback(guarded([&](std::ostream& o) {
        write_poset(o, config, hocolim(poset_diagram_from_json(read_json_file(config.input))));
        return 0;
    }));
    auto* cyl = diagram->add_subcommand("cylinder", "Non-Hausdorff mapping cylinder of a map");
    cyl->add_option("file", config.input, "Map JSON file {source, target, map}")->required();
    cyl->callback(guarded([&](std::ostream& o) {
        write_poset(o, config, mapping_cylinder(poset_map_from_json(read_json_file(config.input))));
        return 0;
    }));
    auto* res = diagram->add_subcommand("restrict", "Restriction to a subposet of the index");
    res->add_option("file", config.input, "Diagram JSON file")->required();
    res->add_option("--keep", config.keep, "Index elements to keep")->required()->delimiter(',');
    res->callback(guarded([&](std::ostream& o) {
        require_format(config, {"text", "json"});
        const PosetDiagram d = restrict(poset_diagram_from_json(read_json_file(config.input)), config.keep);
        if (config.format == "json") {
            o << dump_json(to_json(d));
        } else {
            write_poset(o, config, d.index());
            for (std::size_t p = 0; p < d.index().size(); ++p)
                o << "fiber " << d.index().element(p) << ": " << d.fiber(p).size() << " elements\n";
        }
        return 0;
    }));

    auto* check = app.add_subcommand("check", "Run theorem checks");
    std::string ids_help = "Theorem id or 'all':";
    for (const auto& id : theorem_ids())
        ids_help += " " + id;
    check->add_option("theorem", config.theorem, ids_help)->required();
    check->add_option("--input", config.input, "Input file for a single instance");
    check->add_option("--random", config.random, "Number of seeded random instances");
    check->add_option("--jobs", config.jobs, "Worker threads for random instances")->check(CLI::PositiveNumber);
    check->add_option("--p", config.p, "Index element p");
    check->add_option("--q", config.q, "Index element q");
    check->callback(guarded([&](std::ostream& o) { return run_check(o, config); }));

    std::vector<std::string> argv_storage{"finhtop"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return code;
}

}  // namespace finhtop
