#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace afkit {

/// Selects the evaluation path of a kernel. `serial` is the reference
/// implementation; `parallel` splits the outer sum across OpenMP threads and
/// reduces partial sums in thread-index order, so results are identical.
enum class Exec { serial, parallel };

/// Worker count for parallel kernels: AFKIT_THREADS when set to a positive
/// integer, otherwise the OpenMP default.
int worker_count();

/// Applies worker_count() to the OpenMP runtime. Called once by the CLI.
void configure_threads();

/// Splits [0, total) into `parts` contiguous ranges of near-equal size.
std::vector<std::pair<std::uint64_t, std::uint64_t>> chunk_ranges(std::uint64_t total,
                                                                   std::size_t parts);

} // namespace afkit
