#include "cdslab/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

#include "cdslab/errors.hpp"

namespace cdslab {

void set_thread_count(int threads) {
    if (threads < 1) throw ContractViolation("thread count must be at least 1");
    omp_set_num_threads(threads);
}

int thread_count() { return omp_get_max_threads(); }

std::optional<int> threads_from_env() {
    const char* raw = std::getenv("CDSLAB_THREADS");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    try {
        std::size_t used = 0;
        const int value = std::stoi(raw, &used);
        if (used != std::string(raw).size() || value < 1) throw ContractViolation("");
        return value;
    } catch (const std::exception&) {
        throw ContractViolation(std::string("CDSLAB_THREADS must be a positive integer, got '") + raw + "'");
    }
}

}  // namespace cdslab
