#pragma once

#include <cstdint>
#include <exception>
#include <limits>

namespace advlab::detail {

/// Below this many cheap iterations the kernels stay on one thread.
inline constexpr std::int64_t kParallelThreshold = 2048;

/// Runs body(i) for i in [0, count) across OpenMP threads once count reaches
/// `threshold`. If any call throws, the exception from the lowest failing
/// index is rethrown after the loop.
template <typename Body>
void parallel_for(std::int64_t count, const Body& body,
                  std::int64_t threshold = kParallelThreshold) {
  std::exception_ptr first_error;
  std::int64_t first_index = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(guided) if (count >= threshold)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(advlab_parallel_for_error)
      {
        if (i < first_index) {
          first_index = i;
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace advlab::detail
