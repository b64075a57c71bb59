#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace cdslab::verify {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    std::vector<std::string> failures;                       // capped
    std::vector<std::pair<std::string, std::string>> notes;  // reported facts, in order
    double seconds = 0.0;
};

struct SuiteInfo {
    std::string name;
    std::string description;
    std::size_t default_max_n;
    std::function<SuiteResult(std::size_t max_n)> run;
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo* find_suite(const std::string& name);

// Convenience wrappers; max_n bounds the exhaustive sweep of each suite.
SuiteResult table_suite(std::size_t max_n);        // closed-formula counts against the published table
SuiteResult census_suite(std::size_t max_n);       // brute-force census against both counting methods
SuiteResult eulerian_suite(std::size_t max_n);     // Eulerian census adjudication
SuiteResult sortability_suite(std::size_t max_n);  // four sortability criteria on permutations
SuiteResult commuting_suite(std::size_t max_n);    // cds / gcds / mcds commute
SuiteResult distance_suite(std::size_t max_n);     // fixed-point distance and inevitability
SuiteResult conversion_suite(std::size_t max_n);   // adjacency <-> precedence
SuiteResult realize_suite(std::size_t max_n);      // move-graph realization vs n! scan
SuiteResult kernel_suite(std::size_t max_n);       // kernel / alternating-cycle / pile facts
SuiteResult cuts_suite(std::size_t max_n);         // parity cuts and properties a/b/c under gcds
SuiteResult macwilliams_suite(std::size_t max_n);  // N0 formula vs enumeration
SuiteResult block_suite(std::size_t max_n);        // block construction laws
SuiteResult convergence_suite(std::size_t max_n);  // exact convergence bounds
SuiteResult property_suite(std::size_t max_n);     // randomized invariants

// Published reference values, n = 3..10.
struct TableRow {
    std::size_t n;
    const char* total;
    const char* sortable;
    const char* eulerian_printed;
    const char* ratio;
};
const std::vector<TableRow>& published_table();

}  // namespace cdslab::verify
