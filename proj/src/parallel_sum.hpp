#pragma once

#include "afkit/parallel.hpp"

#include <omp.h>

#include <cstdint>
#include <exception>
#include <vector>

namespace afkit::detail {

// Sum of term(i) for i in [0, total). The parallel path gives each thread one
// contiguous chunk and adds the partial sums in chunk order. With exact
// scalars both paths return the same value.
template <class T, class Term>
T indexed_sum(std::uint64_t total, Exec exec, const Term& term) {
  if (exec == Exec::serial || total < 2 || omp_in_parallel()) {
    T acc(0);
    for (std::uint64_t i = 0; i < total; ++i) acc += term(i);
    return acc;
  }
  const int threads = omp_get_max_threads();
  const auto ranges = chunk_ranges(total, static_cast<std::size_t>(threads));
  std::vector<T> partial(ranges.size(), T(0));
  std::vector<std::exception_ptr> errors(ranges.size());
#pragma omp parallel for schedule(static, 1) num_threads(threads)
  for (std::size_t c = 0; c < ranges.size(); ++c) {
    try {
      for (std::uint64_t i = ranges[c].first; i < ranges[c].second; ++i) partial[c] += term(i);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T acc(0);
  for (const auto& p : partial) acc += p;
  return acc;
}

} // namespace afkit::detail
