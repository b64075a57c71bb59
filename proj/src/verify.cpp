#include "cdslab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "cdslab/convert.hpp"
#include "cdslab/enumerate.hpp"
#include "cdslab/errors.hpp"
#include "cdslab/f2linalg.hpp"
#include "cdslab/graph.hpp"
#include "cdslab/oracle.hpp"
#include "cdslab/permutation.hpp"

namespace cdslab::verify {

namespace {

constexpr std::size_t kMaxRecordedFailures = 25;

// Thread-safe collector for one suite run.
class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    template <class Msg>
    bool check(bool ok, Msg&& describe) {
        checks_.fetch_add(1, std::memory_order_relaxed);
        if (!ok) fail(describe());
        return ok;
    }

    void fail(const std::string& msg) {
        std::lock_guard lock(mu_);
        result_.passed = false;
        if (result_.failures.size() < kMaxRecordedFailures) result_.failures.push_back(msg);
    }

    void note(std::string key, std::string value) {
        std::lock_guard lock(mu_);
        result_.notes.emplace_back(std::move(key), std::move(value));
    }

    // Runs body(i) for i in [0, count) on the OpenMP team, turning exceptions into failures.
    template <class Body>
    void sweep(std::int64_t count, Body&& body) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                body(i);
            } catch (const std::exception& e) {
                fail(std::string("exception: ") + e.what());
            }
        }
    }

    SuiteResult finish(std::chrono::steady_clock::time_point start) {
        result_.checks = checks_.load();
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::move(result_);
    }

private:
    SuiteResult result_;
    std::atomic<std::size_t> checks_{0};
    std::mutex mu_;
};

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(a);
    while (std::next_permutation(a.begin(), a.end()));
    return out;
}

std::int64_t graph_count(std::size_t n) { return std::int64_t{1} << (n * (n - 1) / 2); }

F2Matrix symmetric_from_mask(std::size_t n, std::uint64_t mask) {
    F2Matrix m(n, n);
    std::size_t bit = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1U) {
                m.set(u, v, true);
                m.set(v, u, true);
            }
    return m;
}

RootedGraph graph_from_mask(std::size_t n, std::uint64_t mask) { return RootedGraph(symmetric_from_mask(n, mask)); }

F2Vector vector_from_mask(std::size_t n, std::uint64_t mask) {
    F2Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, mask >> i & 1U);
    return v;
}

std::string str(const mpz_class& z) { return z.get_str(); }
template <class T>
std::string str(const T& v) { return std::to_string(v); }

std::vector<F2Vector> cut_members(const std::vector<ParityCut>& cuts) {
    std::vector<F2Vector> out;
    for (const auto& c : cuts) out.push_back(c.members);
    return out;
}

// A cut of `after` exists that agrees with `x` off {p,q}.
bool has_matching_cut(const RootedGraph& after, const F2Vector& x, std::size_t p, std::size_t q, CutFlavor flavor) {
    for (int bits = 0; bits < 4; ++bits) {
        F2Vector y = x;
        y.set(p, bits & 1);
        y.set(q, bits & 2);
        if (is_parity_cut(after, y, flavor)) return true;
    }
    return false;
}

std::vector<std::pair<std::size_t, std::size_t>> valid_moves(const RootedGraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t p = 1; p + 1 < g.size(); ++p)
        for (std::size_t q = p + 1; q + 1 < g.size(); ++q)
            if (g.has_edge(p, q)) out.emplace_back(p, q);
    return out;
}

std::vector<F2Vector> span_of(const std::vector<F2Vector>& basis, std::size_t len) {
    std::vector<F2Vector> out{F2Vector(len)};
    for (const auto& b : basis) {
        const std::size_t k = out.size();
        for (std::size_t i = 0; i < k; ++i) out.push_back(out[i] + b);
    }
    return out;
}

using Clock = std::chrono::steady_clock;

}  // namespace

// ---------------------------------------------------------------- published values

const std::vector<TableRow>& published_table() {
    static const std::vector<TableRow> rows{
        {3, "8", "1", "1", ".125"},
        {4, "64", "17", "5", ".266"},
        {5, "1024", "113", "29", ".110"},
        {6, "32768", "7729", "365", ".236"},
        {7, "2097152", "224689", "7565", ".107"},
        {8, "268435456", "61562033", "259533", ".229"},
        {9, "68719476736", "7309130417", "16766541", ".106"},
        {10, "35184372088832", "8013328398001", "1695913805", ".228"},
    };
    return rows;
}

// ---------------------------------------------------------------- counting suites

SuiteResult table_suite(std::size_t max_n) {
    const auto start = Clock::now();
    Recorder rec("table");
    for (std::size_t n = 3; n <= max_n; ++n) {
        const CountReport general = count_sortable(n, false);
        const CountReport rank_sum = count_sortable_rank_sum(n, false);
        rec.check(general.count == rank_sum.count, [&] { return "n=" + str(n) + ": closed formula != rank sum"; });
        const auto row = std::find_if(published_table().begin(), published_table().end(),
                                      [&](const TableRow& r) { return r.n == n; });
        if (row == published_table().end()) continue;
        const CountReport eulerian = count_sortable(n, true);
        rec.check(str(general.total) == row->total, [&] { return "n=" + str(n) + ": total " + str(general.total); });
        rec.check(str(general.count) == row->sortable, [&] { return "n=" + str(n) + ": sortable " + str(general.count); });
        rec.check(str(eulerian.count) == row->eulerian_printed,
                  [&] { return "n=" + str(n) + ": eulerian " + str(eulerian.count); });
        const std::string ratio = format_ratio(general.ratio, 3);
        rec.check(ratio == row->ratio, [&] { return "n=" + str(n) + ": ratio " + ratio; });
    }
    return rec.finish(start);
}

SuiteResult census_suite(std::size_t max_n) {
    const auto start = Clock::now();
    Recorder rec("census");
    for (std::size_t n = 3; n <= max_n; ++n) {
        const oracle::CensusCounts counts = oracle::census_parallel(n);
        if (n <= 6) {
            rec.check(oracle::census_serial(n) == counts, [&] { return "n=" + str(n) + ": serial and parallel census differ"; });
        }
        const CountReport closed = count_sortable(n, false);
        const CountReport rank_sum = count_sortable_rank_sum(n, false);
        rec.check(mpz_class(str(counts.total)) == closed.total, [&] { return "n=" + str(n) + ": graph total"; });
        rec.check(mpz_class(str(counts.sortable)) == closed.count,
                  [&] { return "n=" + str(n) + ": census " + str(counts.sortable) + " vs closed formula " + str(closed.count); });
        rec.check(mpz_class(str(counts.sortable)) == rank_sum.count,
                  [&] { return "n=" + str(n) + ": census " + str(counts.sortable) + " vs rank sum " + str(rank_sum.count); });
        rec.note("n=" + str(n), str(counts.sortable) + " of " + str(counts.total));
    }
    return rec.finish(start);
}

SuiteResult eulerian_suite(std::size_t max_n) {
    const auto start = Clock::now();
    Recorder rec("eulerian");
    for (std::size_t n = 3; n <= max_n; ++n) {
        const oracle::CensusCounts counts = oracle::census_parallel(n);
        const mpz_class brute(str(counts.eulerian_sortable));
        const mpz_class printed = count_sortable(n, true).count;
        const mpz_class ranksum = count_sortable_rank_sum(n, true).count;
        if (n <= 5) {
            rec.check(brute == printed && brute == ranksum, [&] {
                return "n=" + str(n) + ": brute " + str(brute) + ", printed " + str(printed) + ", rank sum " + str(ranksum);
            });
        }
        std::string verdict = brute == printed && brute == ranksum ? "both"
                              : brute == printed                  ? "printed_formula"
                              : brute == ranksum                  ? "rank_sum"
                                                                  : "neither";
        rec.note("n=" + str(n), "brute_force=" + str(brute) + " printed_formula=" + str(printed) +
                                    " rank_sum=" + str(ranksum) + " eulerian_graphs=" + str(counts.eulerian) +
                                    " matches=" + verdict);
    }
    return rec.finish(start);
}

SuiteResult macwilliams_suite(std::size_t max_n) {
    const auto start = Clock::now();
    Recorder rec("macwilliams");
    for (std::size_t t = 0; t <= max_n; ++t) {
        mpz_class column = 0;
        for (std::size_t r = 0; r <= t; ++r) {
            const mpz_class formula = macwilliams_count(t, r);
            const mpz_class brute = oracle::n0_bruteforce(t, r);
            column += brute;
            rec.check(formula == brute, [&] {
                return "N0(" + str(t) + "," + str(r) + "): formula " + str(formula) + " vs enumeration " + str(brute);
            });
        }
        rec.check(column == total_rooted_graphs(t), [&] { return "t=" + str(t) + ": column sum " + str(column); });
    }
    return rec.finish(start);
}

SuiteResult convergence_suite(std::size_t max_n) {
    const auto start = Clock::now();
    Recorder rec("convergence");
    const ConvergenceReport rep = convergence_report(max_n);
    rec.check(rep.x[100] > mpq_class(1, 5), [] { return std::string("x_100 is not above 0.2"); });
    rec.check(rep.tail_lower_bound >= mpq_class(4, 25), [] { return std::string("tail bound below 0.16"); });
    rec.check(rep.c.lo > 1 && rep.t_const.lo > 0, [] { return std::string("constants out of range"); });
    rec.check(rep.ratio_bounds_hold, [] { return std::string("ratio bounds fail"); });
    rec.check(rep.term_bounds_hold, [] { return std::string("term bounds fail"); });
    rec.check(rep.step_bounds_hold, [] { return std::string("3n k^-n step bounds fail"); });
    rec.check(rep.geometric_steps_hold, [] { return std::string("T c^-n step bounds fail"); });
    for (const auto& f : rep.failures) rec.fail(f);
    const char* expected[] = {".236", ".229", ".228"};
    for (std::size_t i = 0; i < 3; ++i) {
        const std::string got = format_ratio(rep.x[3 + i], 3);
        rec.check(got == expected[i], [&] { return "x_" + str(3 + i) + " = " + got; });
    }
    rec.note("x_100", format_ratio(rep.x[100], 12));
    rec.note("tail_lower_bound", format_ratio(rep.tail_lower_bound, 12));
    rec.note("ratio_checks", str(rep.ratio_checks));
    rec.note("term_checks", str(rep.term_checks));
    rec.note("step_checks", str(rep.step_checks));
    rec.note("geometric_checks", str(rep.geometric_checks));
    return rec.finish(start);
}

// ---------------------------------------------------------------- permutation suites

SuiteResult sortability_suite(std::size_t max_n) {
    const auto start = Clock::now();
    Recorder rec("sortability");
    std::atomic<std::size_t> total{0};
    for (int n = 1; n <= static_cast<int>(max_n); ++n) {
        const auto perms = all_permutations(n);
        total += perms.size();
        rec.sweep(static_cast<std::int64_t>(perms.size()), [&](std::int64_t i) {
            const Permutation& pi = perms[static_cast<std::size_t>(i)];
            const F2Matrix a = overlap_graph(pi).adjacency();
            const bool by_pile = is_cds_sortable(pi);
            const oracle::SearchStats search = oracle::cds_search(pi);
            const bool by_graph = is_gcds_sortable(RootedGraph(a));
            const bool by_matrix = is_mcds_sortable(a);
            rec.check(by_pile == search.result && by_pile == by_graph && by_pile == by_matrix, [&] {
                return pi.to_string() + ": pile " + str(by_pile) + ", search " + str(search.result) + ", graph " +
                       str(by_graph) + ", matrix " + str(by_matrix);
            });
            rec.check(search.max_depth == mcds_distance(a),
                      [&] { return pi.to_string() + ": longest cds sequence differs from the rank distance"; });
            if (by_pile) {
                Permutation cur = pi;
                const auto moves = cds_sort_sequence(pi);
                for (const auto& [p, q] : *moves) cur = apply_cds(cur, p, q);
                rec.check(cur.is_identity(), [&] { return pi.to_string() + ": witness sequence does not sort"; });
            }
        });
    }
    rec.note("permutations", str(total.load()));
    return rec.finish(start);
}

SuiteResult commuting_suite(std::size_t max_n) {
    const auto start = Clock::now();
    Recorder rec("commuting");
    std::atomic<std::size_t> moves{0};
    for (int n = 1; n <= static_cast<int>(max_n); ++n) {
        const auto perms = all_permutations(n);
        rec.sweep(static_cast<std::int64_t>(perms.size()), [&](std::int64_t i) {
            const Permutation& pi = perms[static_cast<std::size_t>(i)];
            const RootedGraph og = overlap_graph(pi);
            rec.check(og.adjacency() == oracle::overlap_reference(pi),
                      [&] { return pi.to_string() + ": overlap graph differs from the reference scan"; });
            std::size_t listed = 0;
            for (const auto& [p, q] : cds_contexts(pi)) {
                ++listed;
                rec.check(og.has_edge(static_cast<std::size_t>(p.value), static_cast<std::size_t>(q.value)),
                          [&] { return pi.to_string() + ": context without overlap edge"; });
            }
            std::size_t edges = 0;
            for (int p = 1; p < n; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const bool cds_ok = is_cds_context(pi, Pointer{p}, Pointer{q});
                    const bool gcds_ok = og.has_edge(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
                    edges += gcds_ok;
                    rec.check(cds_ok == gcds_ok, [&] { return pi.to_string() + ": validity differs at " + str(p) + "," + str(q); });
                    if (!cds_ok) continue;
                    ++moves;
                    const Permutation after = apply_cds(pi, Pointer{p}, Pointer{q});
                    rec.check(oracle::cds_reference(pi, p, q) == after,
                              [&] { return pi.to_string() + ": cds differs from the reference"; });
                    const RootedGraph g2 = gcds(og, static_cast<std::size_t>(p), static_cast<std::size_t>(q));
                    rec.check(overlap_graph(after) == g2, [&] {
                        return pi.to_string() + ": overlap(cds) != gcds(overlap) at " + str(p) + "," + str(q);
                    });
                    rec.check(g2.adjacency() == mcds(og.adjacency(), static_cast<std::size_t>(p), static_cast<std::size_t>(q)),
                              [&] { return pi.to_string() + ": gcds != mcds"; });
                }
            }
            rec.check(listed == edges, [&] { return pi.to_string() + ": context list size differs from edge count"; });
        });
    }
    const std::size_t graph_n = std::min<std::size_t>(max_n, 6);
    for (std::size_t n = 2; n <= graph_n; ++n) {
        rec.sweep(graph_count(n), [&](std::int64_t mask) {
            const RootedGraph g = graph_from_mask(n, static_cast<std::uint64_t>(mask));
            for (auto [p, q] : valid_moves(g)) {
                rec.check(gcds(g, p, q).adjacency() == mcds(g.adjacency(), p, q),
                          [&] { return "graph mask " + str(mask) + ": gcds != mcds"; });
            }
        });
    }
    rec.note("permutation_moves", str(moves.load()));
    return rec.finish(start);
}

SuiteResult conversion_suite(std::size_t max_n) {
    const auto start = Clock::now();
    Recorder rec("conversion");
    for (int n = 1; n <= static_cast<int>(max_n); ++n) {
        const auto perms = all_permutations(n);
        rec.sweep(static_cast<std::int64_t>(perms.size()), [&](std::int64_t i) {
            const Permutation& pi = perms[static_cast<std::size_t>(i)];
            const F2Matrix a = overlap_graph(pi).adjacency();
            const F2Matrix p = precedence_matrix(pi);
            const F2Matrix p_from_a = adjacency_to_precedence(a);
            rec.check(p_from_a == p, [&] { return pi.to_string() + ": S(Z(A)+B) != P"; });
            rec.check(precedence_to_adjacency(p_from_a) == a, [&] { return pi.to_string() + ": roundtrip lost A"; });
            const auto sz = static_cast<std::size_t>(n);
            bool elementwise = true;
            for (std::size_t r = 0; r <= sz; ++r)
                for (std::size_t c = 0; c <= sz; ++c) {
                    const bool rhs = p.get(r, c) ^ p.get(r + 1, c) ^ p.get(r, c + 1) ^ p.get(r + 1, c + 1) ^ (r == c) ^ (r + 1 == c);
                    elementwise = elementwise && a.get(r, c) == rhs;
                }
            rec.check(elementwise, [&] { return pi.to_string() + ": elementwise identity fails"; });
            bool framing = true;
            for (std::size_t j = 0; j < sz + 2; ++j) framing = framing && !p.get(j, 0) && (j == 0 || p.get(0, j));
            rec.check(framing, [&] { return pi.to_string() + ": first row/column of P wrong"; });
            const F2Matrix center = central_submatrix(p, CentralMode::both);
            rec.check(is_central_precedence(center), [&] { return pi.to_string() + ": central block not in T_n"; });
            rec.check(permutation_from_central_precedence(center) == pi,
                      [&] { return pi.to_string() + ": reconstruction from row sums failed"; });
        });
    }
    // |T_n| = n! over all tournaments, n <= 6.
    for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 6); ++n) {
        std::atomic<std::uint64_t> members{0};
        rec.sweep(graph_count(n), [&](std::int64_t mask) {
            F2Matrix c(n, n);
            std::size_t bit = 0;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v, ++bit) {
                    const bool forward = static_cast<std::uint64_t>(mask) >> bit & 1U;
                    c.set(u, v, forward);
                    c.set(v, u, !forward);
                }
            if (is_central_precedence(c)) ++members;
        });
        std::uint64_t fact = 1;
        for (std::size_t k = 2; k <= n; ++k) fact *= k;
        rec.check(members.load() == fact, [&] { return "|T_" + str(n) + "| = " + str(members.load()); });
    }
    return rec.finish(start);
}

SuiteResult realize_suite(std::size_t max_n) {
    const auto start = Clock::now();
    Recorder rec("realize");
    for (int n = 1; n <= static_cast<int>(max_n); ++n) {
        const auto m = static_cast<std::size_t>(n - 1);
        std::atomic<std::uint64_t> realizable{0};
        rec.sweep(graph_count(std::max<std::size_t>(m, 1)), [&](std::int64_t mask) {
            const MoveGraphInstance inst(symmetric_from_mask(m, static_cast<std::uint64_t>(mask)));
            const auto fast = realize_labeled_move_graph(inst);
            const auto slow = oracle::realizable_bruteforce(inst);
            rec.check(fast.has_value() == slow.has_value(),
                      [&] { return "n=" + str(n) + " mask " + str(mask) + ": realize disagrees with the scan"; });
            if (fast) {
                ++realizable;
                const F2Matrix ref = central_submatrix(oracle::overlap_reference(*fast), CentralMode::both);
                rec.check(ref == inst.adjacency(), [&] { return "n=" + str(n) + ": witness fails verification"; });
            }
        });
        rec.note("n=" + str(n), str(realizable.load()) + " of " + str(graph_count(std::max<std::size_t>(m, 1))) +
                                    " labeled instances realizable");
        const auto perms = all_permutations(n);
        rec.sweep(static_cast<std::int64_t>(perms.size()), [&](std::int64_t i) {
            const Permutation& pi = perms[static_cast<std::size_t>(i)];
            const auto w = realize_labeled_move_graph(move_graph(pi));
            rec.check(w.has_value() && realizes(*w, move_graph(pi)),
                      [&] { return pi.to_string() + ": own move graph not realized"; });
        });
    }
    return rec.finish(start);
}

// ---------------------------------------------------------------- kernel and cut suites

SuiteResult kernel_suite(std::size_t max_n) {
    const auto start = Clock::now();
    Recorder rec("kernel");
    const std::size_t graph_n = std::min<std::size_t>(max_n, 6);
    for (std::size_t n = 2; n <= graph_n; ++n) {
        rec.sweep(graph_count(n), [&](std::int64_t mask) {
            const RootedGraph g = graph_from_mask(n, static_cast<std::uint64_t>(mask));
            const auto kernel_cuts = cut_members(generalized_parity_cuts(g));
            rec.check(kernel_cuts == oracle::parity_cuts_bruteforce(g, CutFlavor::generalized),
                      [&] { return "mask " + str(mask) + ": generalized cuts differ from the scan"; });
            if (is_eulerian(g)) {
                rec.check(kernel_cuts == oracle::parity_cuts_bruteforce(g, CutFlavor::two_sided_root_even),
                          [&] { return "mask " + str(mask) + ": Eulerian parity-cut space differs from the kernel"; });
            }
        });
    }
    for (int n = 1; n <= static_cast<int>(max_n); ++n) {
        const auto perms = all_permutations(n);
        rec.sweep(static_cast<std::int64_t>(perms.size()), [&](std::int64_t i) {
            const Permutation& pi = perms[static_cast<std::size_t>(i)];
            const RootedGraph og = overlap_graph(pi);
            const F2Matrix& a = og.adjacency();
            const auto cycles = alternating_cycles(pi);
            bool orthogonal = true, in_kernel = true;
            for (std::size_t x = 0; x < cycles.size(); ++x) {
                in_kernel = in_kernel && (a * cycles[x]).is_zero();
                for (std::size_t y = x + 1; y < cycles.size(); ++y) orthogonal = orthogonal && !cycles[x].dot(cycles[y]);
            }
            rec.check(orthogonal && in_kernel, [&] { return pi.to_string() + ": cycle vectors not orthogonal kernel elements"; });
            rec.check(cycles.size() == a.cols() - rank(a), [&] { return pi.to_string() + ": cycles do not span the kernel"; });
            for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cycles.size()); ++pick) {
                F2Vector side(a.cols());
                for (std::size_t k = 0; k < cycles.size(); ++k) if (pick >> k & 1U) side += cycles[k];
                rec.check(is_parity_cut(og, side, CutFlavor::two_sided_root_even),
                          [&] { return pi.to_string() + ": union of alternating cycles is not a parity cut"; });
            }
            const F2Matrix cent_r = central_submatrix(a, CentralMode::rows);
            if (is_cds_sortable(pi)) {
                rec.check(rank(cent_r) == rank(a), [&] { return pi.to_string() + ": ker(cent_r(A)) != ker(A)"; });
            } else {
                const F2Vector x = strategic_pile_vector(pi);
                rec.check((cent_r * x).is_zero() && !x.get(0) && !x.get(static_cast<std::size_t>(n)) && !(a * x).is_zero(),
                          [&] { return pi.to_string() + ": strategic pile vector outside the central kernel"; });
            }
            rec.check(!has_property(og, Property::b), [&] { return pi.to_string() + ": overlap graph has property b"; });
        });
    }
    return rec.finish(start);
}

SuiteResult cuts_suite(std::size_t max_n) {
    const auto start = Clock::now();
    Recorder rec("cuts");
    std::atomic<std::uint64_t> differing_readings{0};
    for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 6); ++n) {
        rec.sweep(graph_count(n), [&](std::int64_t mask) {
            const RootedGraph g = graph_from_mask(n, static_cast<std::uint64_t>(mask));
            const bool eulerian = is_eulerian(g);
            const bool pa = has_property(g, Property::a), pb = has_property(g, Property::b), pc = has_property(g, Property::c);

            // Properties against the definitional scan.
            const auto general = oracle::parity_cuts_bruteforce(g, CutFlavor::two_sided_general);
            bool sa = false, sb = false, sc = false;
            for (const auto& x : general) {
                auto across = [&](std::size_t v) {
                    const std::size_t into = g.degree_into(v, x);
                    return (x.get(v) ? g.degree(v) - into : into) % 2;
                };
                const bool split = x.get(0) != x.get(n - 1);
                const std::size_t r1 = across(0), r2 = across(n - 1);
                sa = sa || (split && r1 == 0 && r2 == 0);
                sb = sb || (split && r1 == 1 && r2 == 1);
                sc = sc || (!split && r1 == 1 && r2 == 1);
            }
            rec.check(pa == sa && pb == sb && pc == sc, [&] { return "mask " + str(mask) + ": properties differ from the scan"; });
            if (eulerian) {
                rec.check(pa != pc, [&] { return "mask " + str(mask) + ": Eulerian graph without exactly one of a, c"; });
                rec.check(pa == is_gcds_sortable(g), [&] { return "mask " + str(mask) + ": property a != sortability"; });
            }

            const auto root_even = oracle::parity_cuts_bruteforce(g, CutFlavor::two_sided_root_even);
            const auto generalized = oracle::parity_cuts_bruteforce(g, CutFlavor::generalized);
            for (auto [p, q] : valid_moves(g)) {
                const RootedGraph h = gcds(g, p, q);
                if (gcds_readings_differ(g, p, q)) ++differing_readings;
                rec.check(!eulerian || is_eulerian(h), [&] { return "mask " + str(mask) + ": gcds broke the Eulerian property"; });
                if (eulerian) {
                    rec.check(has_property(h, Property::a) == pa, [&] { return "mask " + str(mask) + ": property a not preserved"; });
                    for (const auto& x : root_even)
                        rec.check(has_matching_cut(h, x, p, q, CutFlavor::two_sided_root_even),
                                  [&] { return "mask " + str(mask) + ": parity cut lost under gcds"; });
                    for (const auto& y : oracle::parity_cuts_bruteforce(h, CutFlavor::two_sided_root_even))
                        rec.check(has_matching_cut(g, y, p, q, CutFlavor::two_sided_root_even),
                                  [&] { return "mask " + str(mask) + ": parity cut appeared under gcds"; });
                }
                for (const auto& x : generalized)
                    rec.check(has_matching_cut(h, x, p, q, CutFlavor::generalized),
                              [&] { return "mask " + str(mask) + ": generalized cut lost under gcds"; });
                for (const auto& y : cut_members(generalized_parity_cuts(h)))
                    rec.check(has_matching_cut(g, y, p, q, CutFlavor::generalized),
                              [&] { return "mask " + str(mask) + ": generalized cut appeared under gcds"; });
            }
        });
    }
    rec.note("moves_where_literal_reading_differs", str(differing_readings.load()));
    return rec.finish(start);
}

SuiteResult distance_suite(std::size_t max_n) {
    const auto start = Clock::now();
    Recorder rec("distance");
    for (std::size_t n = 2; n <= max_n; ++n) {
        std::atomic<std::uint64_t> sortable{0};
        rec.sweep(graph_count(n), [&](std::int64_t mask) {
            const RootedGraph g = graph_from_mask(n, static_cast<std::uint64_t>(mask));
            const oracle::SequenceProfile prof = oracle::gcds_sequence_profile(g);
            const std::size_t d = mcds_distance(g.adjacency());
            rec.check(prof.min_length == d && prof.max_length == d, [&] {
                return "mask " + str(mask) + ": sequence lengths " + str(prof.min_length) + ".." + str(prof.max_length) +
                       " vs distance " + str(d);
            });
            rec.check(prof.max_length <= n / 2, [&] { return "mask " + str(mask) + ": search deeper than n/2"; });
            const bool s = is_gcds_sortable(g);
            sortable += s;
            rec.check(s == prof.any_end_edgeless, [&] { return "mask " + str(mask) + ": kernel criterion != search"; });
            rec.check(s ? prof.all_end_edgeless : !prof.any_end_edgeless,
                      [&] { return "mask " + str(mask) + ": some maximal sequence ends elsewhere"; });
            bool cut01 = false, cut10 = false;
            for (const auto& c : generalized_parity_cuts(g)) {
                cut01 = cut01 || (!c.members.get(0) && c.members.get(n - 1));
                cut10 = cut10 || (c.members.get(0) && !c.members.get(n - 1));
            }
            rec.check(s == (cut01 && cut10), [&] { return "mask " + str(mask) + ": generalized-cut criterion differs"; });
            if (is_eulerian(g))
                rec.check(s == has_property(g, Property::a), [&] { return "mask " + str(mask) + ": property a differs"; });
        });
        rec.note("n=" + str(n), str(sortable.load()) + " sortable of " + str(graph_count(n)));
    }
    return rec.finish(start);
}

// ---------------------------------------------------------------- block construction

SuiteResult block_suite(std::size_t max_n) {
    const auto start = Clock::now();
    Recorder rec("block");

    // Laws over small centers with every choice of u-vectors.
    for (std::size_t m = 1; m <= 3; ++m) {
        const std::uint64_t vecs = std::uint64_t{1} << m;
        for (std::int64_t cm = 0; cm < graph_count(m); ++cm) {
            const F2Matrix a = symmetric_from_mask(m, static_cast<std::uint64_t>(cm));
            const auto ker = span_of(kernel_basis(a), m);
            auto in_kernel = [&](const F2Vector& v) { return std::find(ker.begin(), ker.end(), v) != ker.end(); };
            for (std::uint64_t x = 0; x < vecs; ++x) {
                const F2Vector u = vector_from_mask(m, x);
                rec.check(!(a * u).dot(u), [&] { return "center " + str(cm) + ": (Au).u != 0"; });
                for (std::uint64_t y = 0; y < vecs; ++y) {
                    const F2Vector v = vector_from_mask(m, y);
                    rec.check((a * u).dot(v) == (a * v).dot(u), [&] { return "center " + str(cm) + ": (Au).v != (Av).u"; });
                    const F2Matrix built = block_construct(a, u, v);
                    rec.check(is_mcds_sortable(built) && oracle::gcds_sortable_bruteforce(RootedGraph(built)),
                              [&] { return "center " + str(cm) + ": block construction not sortable"; });
                    if (v == ones_complement(u))
                        rec.check(built.is_eulerian_rows(), [&] { return "center " + str(cm) + ": complement block not Eulerian"; });
                    for (std::uint64_t x2 = 0; x2 < vecs; ++x2)
                        for (std::uint64_t y2 = 0; y2 < vecs; ++y2) {
                            const F2Vector u2 = vector_from_mask(m, x2), v2 = vector_from_mask(m, y2);
                            const bool same = built == block_construct(a, u2, v2);
                            rec.check(same == (in_kernel(u + u2) && in_kernel(v + v2)),
                                      [&] { return "center " + str(cm) + ": block equality law fails"; });
                        }
                }
            }
        }
    }

    // Extension counts per center, by exhaustive bordering.
    for (std::size_t m = 1; m <= std::min<std::size_t>(4, max_n >= 2 ? max_n - 2 : 0); ++m) {
        const std::size_t n = m + 2;
        for (std::int64_t cm = 0; cm < graph_count(m); ++cm) {
            const F2Matrix a = symmetric_from_mask(m, static_cast<std::uint64_t>(cm));
            std::uint64_t sortable = 0, eulerian_sortable = 0;
            for (std::uint64_t border = 0; border < (std::uint64_t{1} << (2 * m + 1)); ++border) {
                F2Matrix g(n, n);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) g.set(i + 1, j + 1, a.get(i, j));
                for (std::size_t i = 0; i < m; ++i) {
                    const bool b0 = border >> i & 1U, b1 = border >> (m + i) & 1U;
                    g.set(0, i + 1, b0); g.set(i + 1, 0, b0);
                    g.set(n - 1, i + 1, b1); g.set(i + 1, n - 1, b1);
                }
                const bool corner = border >> (2 * m) & 1U;
                g.set(0, n - 1, corner); g.set(n - 1, 0, corner);
                if (is_mcds_sortable(g)) {
                    ++sortable;
                    eulerian_sortable += g.is_eulerian_rows();
                }
            }
            rec.check(mpz_class(str(sortable)) == sortable_extensions_count(a, false) &&
                          mpz_class(str(eulerian_sortable)) == sortable_extensions_count(a, true),
                      [&] {
                          return "center " + str(cm) + " (m=" + str(m) + "): " + str(sortable) + " sortable, " +
                                 str(eulerian_sortable) + " Eulerian sortable extensions";
                      });
        }
    }

    // Decomposition of sortable graphs; exhaustive to 6, sampled beyond.
    auto decompose = [&](const F2Matrix& a, const std::string& label) {
        const std::size_t n = a.rows();
        const F2Matrix cent_c = central_submatrix(a, CentralMode::cols);
        const F2Matrix center = central_submatrix(a, CentralMode::both);
        const auto u1 = solve_linear(cent_c, a.column(0));
        const auto u2 = solve_linear(cent_c, a.column(n - 1));
        if (!rec.check(u1 && u2, [&] { return label + ": sortable matrix without border solutions"; })) return;
        rec.check(block_construct(center, *u1, *u2) == a, [&] { return label + ": not a block construction"; });
        if (a.is_eulerian_rows()) {
            rec.check(block_construct(center, *u1, ones_complement(*u1)) == a,
                      [&] { return label + ": complement border does not rebuild an Eulerian matrix"; });
            for (const auto& k : span_of(kernel_basis(cent_c), n - 2))
                rec.check(cent_c * ones_complement(*u1 + k) == a.column(n - 1),
                          [&] { return label + ": complement of a first-column solution misses the last column"; });
        }
    };
    for (std::size_t n = 3; n <= std::min<std::size_t>(max_n, 6); ++n) {
        rec.sweep(graph_count(n), [&](std::int64_t mask) {
            const F2Matrix a = symmetric_from_mask(n, static_cast<std::uint64_t>(mask));
            if (is_mcds_sortable(a)) decompose(a, "n=" + str(n) + " mask " + str(mask));
        });
    }
    std::mt19937_64 rng(0x5eed0fb10cULL);
    for (std::size_t n = 7; n <= max_n; ++n) {
        std::size_t sampled = 0;
        for (std::size_t tries = 0; tries < 40000 && sampled < 1000; ++tries) {
            const std::uint64_t mask = rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1);
            const F2Matrix a = symmetric_from_mask(n, mask);
            if (!is_mcds_sortable(a)) continue;
            ++sampled;
            decompose(a, "n=" + str(n) + " mask " + str(mask));
        }
        rec.note("sampled_sortable_n=" + str(n), str(sampled));
    }
    return rec.finish(start);
}

// ---------------------------------------------------------------- randomized invariants

SuiteResult property_suite(std::size_t max_n) {
    const auto start = Clock::now();
    Recorder rec("property");
    constexpr int kInstances = 10000;
    const std::size_t top = std::max<std::size_t>(max_n, 3);
    std::mt19937_64 rng(20240611ULL);
    for (int it = 0; it < kInstances; ++it) {
        // Permutation move.
        const int n = static_cast<int>(rng() % top) + 1;
        std::vector<int> a(static_cast<std::size_t>(n));
        std::iota(a.begin(), a.end(), 1);
        std::shuffle(a.begin(), a.end(), rng);
        const Permutation pi(a);
        const auto ctx = cds_contexts(pi);
        if (!ctx.empty()) {
            const auto [p, q] = ctx[rng() % ctx.size()];
            const Permutation after = apply_cds(pi, p, q);
            std::vector<int> sorted = after.elements();
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> expect(static_cast<std::size_t>(n));
            std::iota(expect.begin(), expect.end(), 1);
            rec.check(sorted == expect, [&] { return pi.to_string() + ": cds produced an invalid permutation"; });
            rec.check(oracle::cds_reference(pi, p.value, q.value) == after,
                      [&] { return pi.to_string() + ": cds differs from the reference"; });
        }

        // Graph and matrix moves.
        const std::size_t gn = static_cast<std::size_t>(rng() % (top - 1)) + 2;
        F2Matrix m(gn, gn);
        for (std::size_t u = 0; u < gn; ++u)
            for (std::size_t v = u + 1; v < gn; ++v)
                if (rng() & 1U) { m.set(u, v, true); m.set(v, u, true); }
        const RootedGraph g(m);
        const auto moves = valid_moves(g);
        if (moves.empty()) continue;
        const auto [p, q] = moves[rng() % moves.size()];
        const RootedGraph h = gcds(g, p, q);
        rec.check(h.adjacency().is_symmetric() && h.adjacency().is_zero_diagonal() && h.size() == gn &&
                      h.degree(p) == 0 && h.degree(q) == 0,
                  [&] { return "graph of size " + str(gn) + ": gcds result malformed"; });
        const F2Matrix mm = mcds(m, p, q);
        rec.check(mm.is_symmetric() && mm.is_zero_diagonal(), [&] { return "mcds broke symmetry or the diagonal"; });
        for (const auto& x : kernel_basis(m)) rec.check((mm * x).is_zero(), [&] { return "ker(M) not inside ker(mcds(M))"; });
        rec.check(mcds_distance(mm) + 1 == mcds_distance(m), [&] { return "central rank did not drop by 2"; });
    }
    rec.note("instances", str(kInstances));
    return rec.finish(start);
}

// ---------------------------------------------------------------- registry

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> all{
        {"table", "closed-formula counts against the published table", 10, table_suite},
        {"census", "brute-force census against both counting methods", 6, census_suite},
        {"eulerian", "Eulerian census against printed formula and rank sum", 6, eulerian_suite},
        {"sortability", "strategic pile, search, graph and matrix criteria agree", 7, sortability_suite},
        {"commuting", "cds, gcds and mcds commute with the overlap map", 6, commuting_suite},
        {"distance", "every maximal gcds sequence has length rank(center)/2", 6, distance_suite},
        {"conversion", "adjacency and precedence matrices convert both ways", 7, conversion_suite},
        {"realize", "move-graph realization against an n! scan", 6, realize_suite},
        {"kernel", "kernel, alternating cycles and strategic pile facts", 7, kernel_suite},
        {"cuts", "parity cuts and properties a/b/c under gcds", 6, cuts_suite},
        {"macwilliams", "N0 product formula against enumeration", 5, macwilliams_suite},
        {"block", "block construction laws and decomposition", 8, block_suite},
        {"convergence", "exact convergence bounds", 100, convergence_suite},
        {"property", "randomized move invariants", 16, property_suite},
    };
    return all;
}

const SuiteInfo* find_suite(const std::string& name) {
    for (const auto& s : suites())
        if (s.name == name) return &s;
    return nullptr;
}

}  // namespace cdslab::verify
