// Command-line front end: permutation, graph and matrix operations, counting
// tables and the oracle verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "cdslab/convert.hpp"
#include "cdslab/enumerate.hpp"
#include "cdslab/errors.hpp"
#include "cdslab/f2linalg.hpp"
#include "cdslab/graph.hpp"
#include "cdslab/oracle.hpp"
#include "cdslab/parallel.hpp"
#include "cdslab/permutation.hpp"
#include "cdslab/text_io.hpp"
#include "cdslab/verify.hpp"

using nlohmann::json;
using namespace cdslab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Options {
    bool json = false;
    int threads = 0;

    std::string input;  // permutation text or a file path; "-" or empty means stdin
    std::string action;
    std::size_t p = 0, q = 0;  // 1-based
    std::string flavor = "generalized";
    std::size_t n = 0;
    bool eulerian = false;
    std::string method = "closed";
    std::size_t max_n = 10;
    std::size_t brute_max = 0;
    std::string suite;
    std::size_t suite_max_n = 0;
};

std::string read_source(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw ContractViolation("cannot open input file '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string permutation_text(const Options& o) {
    if (o.input.empty() || o.input == "-") return read_source("-");
    return o.input;
}

json matrix_json(const F2Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).to_string());
    return rows;
}

json context_json(const Context& c) { return json::array({c.first.value, c.second.value}); }

std::string context_text(const Context& c) {
    auto name = [](Pointer x) { return "(" + std::to_string(x.value) + "," + std::to_string(x.value + 1) + ")"; };
    return name(c.first) + " " + name(c.second);
}

std::size_t to_index(std::size_t one_based, std::size_t size, const char* what) {
    if (one_based < 1 || one_based > size)
        throw ContractViolation(std::string(what) + " must lie in 1.." + std::to_string(size));
    return one_based - 1;
}

// ---------------------------------------------------------------- perm

int run_perm(const Options& o) {
    const Permutation pi = parse_permutation(permutation_text(o));
    if (o.action == "check") {
        const StrategicPile sp = strategic_pile(pi);
        if (o.json) {
            std::cout << json{{"permutation", pi.elements()}, {"sortable", sp.empty()}, {"strategic_pile", sp.ordered}}.dump()
                      << "\n";
        } else {
            std::cout << (sp.empty() ? "SORTABLE" : "UNSORTABLE SP=" + sp.to_string()) << "\n";
        }
        return kExitOk;
    }
    if (o.action == "cycles") {
        const CycleNotation c = cycle_notation(pi);
        if (o.json) std::cout << json{{"cycles", c.cycles}, {"map", c.map}}.dump() << "\n";
        else std::cout << c.to_string() << "\n";
        return kExitOk;
    }
    if (o.action == "pile") {
        const StrategicPile sp = strategic_pile(pi);
        if (o.json) std::cout << json{{"ordered", sp.ordered}, {"set", sp.as_set()}}.dump() << "\n";
        else std::cout << sp.to_string() << "\n";
        return kExitOk;
    }
    // sort
    const auto moves = cds_sort_sequence(pi);
    if (!moves) {
        const StrategicPile sp = strategic_pile(pi);
        if (o.json) std::cout << json{{"sortable", false}, {"strategic_pile", sp.ordered}}.dump() << "\n";
        else std::cout << "UNSORTABLE SP=" << sp.to_string() << "\n";
        std::cerr << "cdslab: " << pi.to_string() << " cannot be sorted by cds\n";
        return kExitDomain;
    }
    Permutation cur = pi;
    json steps = json::array();
    if (!o.json) std::cout << cur.to_string() << "\n";
    for (const auto& m : *moves) {
        cur = apply_cds(cur, m.first, m.second);
        if (o.json) steps.push_back({{"context", context_json(m)}, {"result", cur.elements()}});
        else std::cout << "cds " << context_text(m) << " -> " << cur.to_string() << "\n";
    }
    if (o.json) std::cout << json{{"sortable", true}, {"moves", steps}}.dump() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- graph

int run_graph(const Options& o) {
    const RootedGraph g = parse_graph(read_source(o.input));
    if (o.action == "check") {
        const bool sortable = is_gcds_sortable(g);
        const bool eulerian = is_eulerian(g);
        const std::size_t distance = mcds_distance(g.adjacency());
        if (o.json) {
            std::cout << json{{"vertices", g.size()}, {"edges", g.edge_count()}, {"sortable", sortable},
                              {"eulerian", eulerian}, {"distance", distance}}.dump()
                      << "\n";
        } else {
            std::cout << (sortable ? "SORTABLE" : "UNSORTABLE") << " eulerian=" << (eulerian ? "yes" : "no")
                      << " distance=" << distance << "\n";
        }
        return kExitOk;
    }
    if (o.action == "gcds") {
        const std::size_t p = to_index(o.p, g.size(), "--p"), q = to_index(o.q, g.size(), "--q");
        const RootedGraph h = gcds(g, p, q);
        const bool differ = gcds_readings_differ(g, p, q);
        if (o.json) {
            std::cout << json{{"adjacency", matrix_json(h.adjacency())}, {"literal_reading_differs", differ}}.dump() << "\n";
        } else {
            std::cout << format_graph(h);
            if (differ) std::cerr << "note: reading the edge rule as 'sum == 1' instead of mod 2 gives a different graph\n";
        }
        return kExitOk;
    }
    if (o.action == "cuts") {
        CutFlavor flavor = CutFlavor::generalized;
        if (o.flavor == "two-sided") flavor = CutFlavor::two_sided_root_even;
        else if (o.flavor == "two-sided-general") flavor = CutFlavor::two_sided_general;
        const auto cuts = parity_cuts(g, flavor);
        if (o.json) {
            json list = json::array();
            for (const auto& c : cuts) list.push_back(c.members.to_string());
            std::cout << json{{"flavor", o.flavor}, {"cuts", list}}.dump() << "\n";
        } else {
            for (const auto& c : cuts) std::cout << c.members.to_string() << "\n";
        }
        return kExitOk;
    }
    // props
    const bool a = has_property(g, Property::a), b = has_property(g, Property::b), c = has_property(g, Property::c);
    if (o.json) std::cout << json{{"a", a}, {"b", b}, {"c", c}}.dump() << "\n";
    else std::cout << "a=" << a << " b=" << b << " c=" << c << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- matrix / convert / realize

int run_matrix(const Options& o) {
    const F2Matrix m = parse_matrix(read_source(o.input));
    if (o.action == "rank") {
        const std::size_t r = rank(m);
        if (o.json) std::cout << json{{"rank", r}}.dump() << "\n";
        else std::cout << r << "\n";
        return kExitOk;
    }
    if (o.action == "kernel") {
        const auto basis = kernel_basis(m);
        if (o.json) {
            json list = json::array();
            for (const auto& v : basis) list.push_back(v.to_string());
            std::cout << json{{"kernel_basis", list}}.dump() << "\n";
        } else {
            for (const auto& v : basis) std::cout << v.to_string() << "\n";
        }
        return kExitOk;
    }
    // mcds
    const F2Matrix out = mcds(m, to_index(o.p, m.rows(), "--p"), to_index(o.q, m.rows(), "--q"));
    if (o.json) std::cout << json{{"matrix", matrix_json(out)}}.dump() << "\n";
    else std::cout << format_matrix(out);
    return kExitOk;
}

int run_convert(const Options& o) {
    const F2Matrix m = parse_matrix(read_source(o.input));
    const F2Matrix out = o.action == "adj2prec" ? adjacency_to_precedence(m) : precedence_to_adjacency(m);
    if (o.json) std::cout << json{{"matrix", matrix_json(out)}}.dump() << "\n";
    else std::cout << format_matrix(out);
    return kExitOk;
}

int run_realize(const Options& o) {
    const MoveGraphInstance inst(parse_matrix(read_source(o.input)));
    const auto witness = realize_labeled_move_graph(inst);
    if (o.json) {
        std::cout << (witness ? json{{"realizable", true}, {"witness", witness->elements()}}
                              : json{{"realizable", false}})
                         .dump()
                  << "\n";
    } else {
        std::cout << (witness ? witness->to_string() : std::string("UNREALIZABLE")) << "\n";
    }
    return witness ? kExitOk : kExitDomain;
}

// ---------------------------------------------------------------- counting

int run_count(const Options& o) {
    CountReport rep;
    if (o.method == "closed") {
        rep = count_sortable(o.n, o.eulerian);
    } else if (o.method == "ranksum") {
        rep = count_sortable_rank_sum(o.n, o.eulerian);
    } else {
        rep.n = o.n;
        rep.method = CountMethod::brute_force;
        rep.eulerian = o.eulerian;
        rep.count = oracle::census_bruteforce(o.n, o.eulerian);
        rep.total = total_rooted_graphs(o.n);
        rep.ratio = mpq_class(rep.count, rep.total);
        rep.ratio.canonicalize();
    }
    if (o.json) {
        std::cout << json{{"n", rep.n}, {"method", to_string(rep.method)}, {"eulerian", rep.eulerian},
                          {"count", rep.count.get_str()}, {"total", rep.total.get_str()},
                          {"ratio", rep.ratio.get_str()}}.dump()
                  << "\n";
    } else {
        std::cout << rep.count.get_str() << "\n";
    }
    return kExitOk;
}

int run_table(const Options& o) {
    if (o.max_n < 3) throw ContractViolation("--max-n must be at least 3");
    json rows = json::array();
    std::ostringstream text;
    auto cell = [&](const std::string& s, int width) {
        text << std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), ' ') << s;
    };
    const int w_n = 3, w_total = 16, w_sort = 15, w_ratio = 7, w_eul = 12, w_rank = 12, w_brute = 12;
    cell("n", w_n); cell("total", w_total); cell("sortable", w_sort); cell("ratio", w_ratio);
    cell("eulerian", w_eul); cell("eul_ranksum", w_rank);
    if (o.brute_max) { cell("brute", w_brute); cell("brute_eul", w_brute); }
    text << "\n";
    for (std::size_t n = 3; n <= o.max_n; ++n) {
        const CountReport general = count_sortable(n, false);
        std::string printed;
        try {
            printed = count_sortable(n, true).count.get_str();
        } catch (const InvariantViolation&) {
            printed = "non-integer";
        }
        const std::string ranksum = count_sortable_rank_sum(n, true).count.get_str();
        const std::string ratio = format_ratio(general.ratio, 3);
        json row{{"n", n}, {"total", general.total.get_str()}, {"sortable", general.count.get_str()},
                 {"ratio", ratio}, {"eulerian_sortable_formula", printed}, {"eulerian_sortable_ranksum", ranksum}};
        cell(std::to_string(n), w_n); cell(general.total.get_str(), w_total); cell(general.count.get_str(), w_sort);
        cell(ratio, w_ratio); cell(printed, w_eul); cell(ranksum, w_rank);
        if (n <= o.brute_max) {
            const auto c = oracle::census_parallel(n);
            row["brute_force"] = {{"sortable", std::to_string(c.sortable)},
                                  {"eulerian_sortable", std::to_string(c.eulerian_sortable)}};
            cell(std::to_string(c.sortable), w_brute); cell(std::to_string(c.eulerian_sortable), w_brute);
        }
        text << "\n";
        rows.push_back(row);
    }
    if (o.json) std::cout << rows.dump(2) << "\n";
    else std::cout << text.str();
    return kExitOk;
}

// ---------------------------------------------------------------- verify

int run_verify(const Options& o) {
    std::vector<const verify::SuiteInfo*> chosen;
    if (o.suite == "all") {
        for (const auto& s : verify::suites()) chosen.push_back(&s);
    } else {
        const auto* s = verify::find_suite(o.suite);
        if (!s) {
            std::string names;
            for (const auto& x : verify::suites()) names += " " + x.name;
            throw ContractViolation("unknown suite '" + o.suite + "'; available: all" + names);
        }
        chosen.push_back(s);
    }
    bool ok = true;
    json report = json::array();
    for (const auto* s : chosen) {
        const std::size_t max_n = o.suite_max_n ? o.suite_max_n : s->default_max_n;
        const verify::SuiteResult r = s->run(max_n);
        ok = ok && r.passed;
        if (o.json) {
            json notes = json::object();
            for (const auto& [k, v] : r.notes) notes[k] = v;
            report.push_back({{"suite", r.name}, {"max_n", max_n}, {"status", r.passed ? "pass" : "fail"},
                              {"checks", r.checks}, {"seconds", r.seconds}, {"notes", notes},
                              {"failures", r.failures}});
        } else {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " max_n=" << max_n << " checks=" << r.checks
                      << " time=" << r.seconds << "s\n";
            for (const auto& [k, v] : r.notes) std::cout << "  " << k << ": " << v << "\n";
            for (const auto& f : r.failures) std::cout << "  failure: " << f << "\n";
        }
    }
    if (o.json) std::cout << report.dump(2) << "\n";
    return ok ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cdslab: context-directed swaps on permutations, graphs and GF(2) matrices"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Emit JSON instead of text");
    app.add_option("--threads", o.threads, "Worker threads for parallel kernels (default: CDSLAB_THREADS or all cores)")
        ->check(CLI::PositiveNumber);

    auto* perm = app.add_subcommand("perm", "Permutation queries");
    perm->add_option("action", o.action, "sort | check | cycles | pile")
        ->required()->check(CLI::IsMember({"sort", "check", "cycles", "pile"}));
    perm->add_option("permutation", o.input, "e.g. \"[3,2,5,1,4]\" or \"3 2 5 1 4\" (stdin if omitted)");

    auto* graph = app.add_subcommand("graph", "Two-rooted graph queries");
    graph->add_option("action", o.action, "check | gcds | cuts | props")
        ->required()->check(CLI::IsMember({"check", "gcds", "cuts", "props"}));
    graph->add_option("file", o.input, "Graph file (stdin if omitted)");
    graph->add_option("--p", o.p, "First move vertex (1-based)");
    graph->add_option("--q", o.q, "Second move vertex (1-based)");
    graph->add_option("--flavor", o.flavor, "Cut flavor for 'cuts'")
        ->check(CLI::IsMember({"generalized", "two-sided", "two-sided-general"}));

    auto* matrix = app.add_subcommand("matrix", "GF(2) matrix operations");
    matrix->add_option("action", o.action, "mcds | rank | kernel")
        ->required()->check(CLI::IsMember({"mcds", "rank", "kernel"}));
    matrix->add_option("file", o.input, "Matrix file (stdin if omitted)");
    matrix->add_option("--p", o.p, "Pivot row (1-based)");
    matrix->add_option("--q", o.q, "Pivot column (1-based)");

    auto* convert = app.add_subcommand("convert", "Adjacency/precedence conversion");
    convert->add_option("action", o.action, "adj2prec | prec2adj")
        ->required()->check(CLI::IsMember({"adj2prec", "prec2adj"}));
    convert->add_option("file", o.input, "Matrix file (stdin if omitted)");

    auto* realize = app.add_subcommand("realize", "Find a permutation with the given labeled move graph");
    realize->add_option("file", o.input, "Move-graph matrix file (stdin if omitted)");

    auto* count = app.add_subcommand("count", "Count sortable two-rooted graphs");
    count->add_option("--n", o.n, "Number of vertices")->required()->check(CLI::Range(3, 100000));
    count->add_flag("--eulerian", o.eulerian, "Count Eulerian sortable graphs");
    count->add_option("--method", o.method, "closed | ranksum | brute")
        ->check(CLI::IsMember({"closed", "ranksum", "brute"}));

    auto* table = app.add_subcommand("table", "Sortable-graph table for n = 3..max-n");
    table->add_option("--max-n", o.max_n, "Largest n")->check(CLI::Range(3, 100000));
    table->add_option("--brute-force-max", o.brute_max, "Add brute-force census columns up to this n (<= 7)")
        ->check(CLI::Range(0, 7));

    auto* ver = app.add_subcommand("verify", "Run oracle-vs-analytic verification suites");
    ver->add_option("--suite", o.suite, "Suite name or 'all'")->required();
    ver->add_option("--max-n", o.suite_max_n, "Sweep bound (suite default if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (o.threads > 0) set_thread_count(o.threads);
        else if (const auto env = threads_from_env()) set_thread_count(*env);

        if (*perm) return run_perm(o);
        if (*graph) {
            if (o.action == "gcds" && (o.p == 0 || o.q == 0)) throw ContractViolation("graph gcds needs --p and --q");
            return run_graph(o);
        }
        if (*matrix) {
            if (o.action == "mcds" && (o.p == 0 || o.q == 0)) throw ContractViolation("matrix mcds needs --p and --q");
            return run_matrix(o);
        }
        if (*convert) return run_convert(o);
        if (*realize) return run_realize(o);
        if (*count) return run_count(o);
        if (*table) return run_table(o);
        if (*ver) return run_verify(o);
    } catch (const ContractViolation& e) {
        std::cerr << "cdslab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "cdslab: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
