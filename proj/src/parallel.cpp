#include "afkit/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace afkit {

int worker_count() {
  if (const char* env = std::getenv("AFKIT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to the runtime default
    }
  }
  return omp_get_max_threads();
}

void configure_threads() {
  omp_set_num_threads(worker_count());
  omp_set_max_active_levels(1);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> chunk_ranges(std::uint64_t total,
                                                                   std::size_t parts) {
  if (parts == 0) parts = 1;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(parts);
  const std::uint64_t base = total / parts;
  const std::uint64_t extra = total % parts;
  std::uint64_t begin = 0;
  for (std::size_t p = 0; p < parts; ++p) {
    const std::uint64_t len = base + (p < extra ? 1 : 0);
    out.emplace_back(begin, begin + len);
    begin += len;
  }
  return out;
}

} // namespace afkit
