// Acceptance run: one PASS/FAIL line per criterion, runtime limits enforced.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cdslab/convert.hpp"
#include "cdslab/enumerate.hpp"
#include "cdslab/oracle.hpp"
#include "cdslab/parallel.hpp"
#include "cdslab/permutation.hpp"
#include "cdslab/text_io.hpp"
#include "cdslab/verify.hpp"

using namespace cdslab;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool passed = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            details.push_back(what);
        }
    }
    void absorb(const verify::SuiteResult& r) {
        require(r.passed, "suite " + r.name + " reported " + std::to_string(r.failures.size()) + " failure(s)");
        for (const auto& f : r.failures) details.push_back("  " + f);
    }
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

F2Matrix golden(const std::string& name) { return parse_matrix(slurp(std::filesystem::path(CDSLAB_GOLDEN_DIR) / name)); }

verify::SuiteResult run(const std::string& name, std::size_t max_n) { return verify::find_suite(name)->run(max_n); }

std::string note_of(const verify::SuiteResult& r, const std::string& key) {
    for (const auto& [k, v] : r.notes)
        if (k == key) return v;
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::string artifact_dir = ".";
    app.add_option("--artifact-dir", artifact_dir, "Where to write the Eulerian adjudication report");
    CLI11_PARSE(app, argc, argv);
    if (const auto env = threads_from_env()) set_thread_count(*env);

    struct Criterion {
        int id;
        std::string title;
        double limit_seconds;
        std::function<Outcome()> body;
    };

    const std::vector<Criterion> criteria{
        {1, "published table reproduced exactly", 1.0,
         [] {
             Outcome o;
             o.absorb(run("table", 10));
             for (const auto& row : verify::published_table()) {
                 const CountReport r = count_sortable(row.n, false);
                 o.require(r.total.get_str() == row.total && r.count.get_str() == row.sortable &&
                               count_sortable(row.n, true).count.get_str() == row.eulerian_printed &&
                               format_ratio(r.ratio, 3) == row.ratio,
                           "row n=" + std::to_string(row.n));
             }
             return o;
         }},
        {2, "brute-force census equals the general count, n = 3..6", 10.0,
         [] {
             Outcome o;
             set_thread_count(1);
             const std::uint64_t expected[] = {1, 17, 113, 7729};
             for (std::size_t n = 3; n <= 6; ++n) {
                 const auto c = oracle::census_serial(n);
                 o.require(c.sortable == expected[n - 3], "n=" + std::to_string(n) + " serial census " + std::to_string(c.sortable));
                 o.require(mpz_class(c.sortable) == count_sortable(n, false).count, "n=" + std::to_string(n) + " vs formula");
             }
             if (const auto env = threads_from_env()) set_thread_count(*env);
             o.absorb(run("census", 6));
             return o;
         }},
        {3, "Eulerian census adjudication, n = 3..6", 10.0,
         [&artifact_dir] {
             Outcome o;
             const auto r = run("eulerian", 6);
             o.absorb(r);
             nlohmann::json report = nlohmann::json::array();
             for (std::size_t n = 3; n <= 6; ++n) {
                 const auto c = oracle::census_parallel(n);
                 const std::string printed = count_sortable(n, true).count.get_str();
                 const std::string ranksum = count_sortable_rank_sum(n, true).count.get_str();
                 const std::string brute = std::to_string(c.eulerian_sortable);
                 if (n <= 5) o.require(brute == printed && brute == ranksum, "n=" + std::to_string(n) + " methods disagree");
                 report.push_back({{"n", n}, {"brute_force", brute}, {"printed_formula", printed}, {"rank_sum", ranksum},
                                   {"eulerian_graphs", std::to_string(c.eulerian)},
                                   {"brute_force_matches_printed_formula", brute == printed},
                                   {"brute_force_matches_rank_sum", brute == ranksum}});
                 std::cout << "    n=" << n << ": brute_force=" << brute << " printed_formula=" << printed
                           << " rank_sum=" << ranksum << "\n";
             }
             const auto path = std::filesystem::path(artifact_dir) / "eulerian_adjudication.json";
             std::ofstream(path) << report.dump(2) << "\n";
             o.require(std::filesystem::exists(path), "could not write " + path.string());
             std::cout << "    report written to " << path.string() << "\n";
             return o;
         }},
        {4, "four sortability criteria agree on every permutation, n <= 7", 60.0,
         [] {
             Outcome o;
             const auto r = run("sortability", 7);
             o.absorb(r);
             std::cout << "    permutations checked: " << note_of(r, "permutations") << "\n";
             return o;
         }},
        {5, "cds, gcds and mcds commute with the overlap map, n <= 6", 60.0,
         [] {
             Outcome o;
             o.absorb(run("commuting", 6));
             return o;
         }},
        {6, "every maximal gcds sequence has length rank/2 and sortable graphs end edgeless, n <= 6", 300.0,
         [] {
             Outcome o;
             o.absorb(run("distance", 6));
             return o;
         }},
        {7, "adjacency/precedence round trips, n <= 7, worked examples pinned", 30.0,
         [] {
             Outcome o;
             o.absorb(run("conversion", 7));
             const Permutation pi3({4, 5, 2, 6, 1, 7, 3, 8});
             const F2Matrix a = golden("a_pi3.txt"), p = golden("p_pi3.txt");
             o.require(overlap_graph(pi3).adjacency() == a, "overlap matrix golden");
             o.require(precedence_matrix(pi3) == p, "precedence matrix golden");
             o.require(adjacency_to_precedence(a) == p, "adjacency -> precedence golden");
             o.require(precedence_to_adjacency(p) == a, "precedence -> adjacency golden");
             const F2Matrix in = golden("zfs_input.txt");
             o.require(z_embed(in) == golden("z_example.txt"), "Z golden");
             o.require(f_transform(in) == golden("f_example.txt"), "F golden");
             o.require(s_prefix(in) == golden("s_example.txt"), "S golden");
             o.require(central_submatrix(a, CentralMode::rows) == golden("cent_r.txt") &&
                           central_submatrix(a, CentralMode::cols) == golden("cent_c.txt") &&
                           central_submatrix(a, CentralMode::both) == golden("cent_rc.txt"),
                       "central submatrix goldens");
             return o;
         }},
        {8, "move-graph realization agrees with the n! scan", 300.0,
         [] {
             Outcome o;
             const auto r = run("realize", 6);
             o.absorb(r);
             for (const auto& [k, v] : r.notes) std::cout << "    " << k << ": " << v << "\n";
             return o;
         }},
        {9, "kernel and parity-cut equivalences, graphs n <= 6, permutations n <= 7", 300.0,
         [] {
             Outcome o;
             o.absorb(run("kernel", 7));
             o.absorb(run("cuts", 6));
             return o;
         }},
        {10, "MacWilliams N0 formula against enumeration, t <= 5", 5.0,
         [] {
             Outcome o;
             o.absorb(run("macwilliams", 5));
             return o;
         }},
        {11, "block-construction laws and decomposition", 300.0,
         [] {
             Outcome o;
             o.absorb(run("block", 8));
             return o;
         }},
        {12, "convergence bounds in exact arithmetic", 120.0,
         [] {
             Outcome o;
             const auto r = run("convergence", 100);
             o.absorb(r);
             std::cout << "    x_100 = " << note_of(r, "x_100") << ", tail lower bound = " << note_of(r, "tail_lower_bound")
                       << "\n";
             return o;
         }},
        {13, "randomized move invariants, 10^4 instances, n <= 16", 60.0,
         [] {
             Outcome o;
             o.absorb(run("property", 16));
             return o;
         }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        std::ostringstream captured;
        auto* saved = std::cout.rdbuf(captured.rdbuf());
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::cout.rdbuf(saved);
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::ostringstream limit;
        limit << secs << "s of " << c.limit_seconds << "s";
        o.require(secs < c.limit_seconds, "runtime limit exceeded (" + limit.str() + ")");
        all = all && o.passed;
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << limit.str()
                  << "]\n";
        std::cout << captured.str();
        for (const auto& d : o.details) std::cout << "    " << d << "\n";
    }
    return all ? 0 : 1;
}
