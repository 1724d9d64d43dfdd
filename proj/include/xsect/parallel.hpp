#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace xsect {

/// Resource caps shared by every engine that instantiates a bound.
struct Limits {
  std::uint64_t max_matrix_entries = 1'000'000;  // rows * cols of any dense system
  std::size_t max_basis_size = 10'000;           // Buchberger basis growth
  unsigned jobs = 1;                             // worker threads for per-slice work
};

/// Calls fn(i) for i in [0, n) on up to `jobs` threads. If any call throws, the
/// exception from the smallest index is rethrown, so failures do not depend on
/// scheduling.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> workers;
  const std::size_t nthreads = std::min<std::size_t>(jobs, n);
  for (std::size_t t = 0; t < nthreads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += nthreads) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace xsect
