#pragma once

#include <optional>

namespace cdslab {

// Thread count used by the OpenMP kernels. Values < 1 are rejected.
void set_thread_count(int threads);
int thread_count();

// Parses CDSLAB_THREADS; empty when unset, throws ContractViolation when malformed.
std::optional<int> threads_from_env();

}  // namespace cdslab
