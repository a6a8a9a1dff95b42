#pragma once

#include <exception>
#include <mutex>

namespace floqlat {

// Selects how grid scans and sweeps run: a plain loop (the reference) or an
// OpenMP worksharing loop. Both produce results in index order.
enum class Execution { kSerial, kParallel };

// Runs body(i) for i in [0, count). The parallel path uses an OpenMP
// worksharing loop; the first exception thrown by any iteration is rethrown
// on the calling thread once the loop has drained.
template <typename Body>
void for_each_index(int count, Execution execution, Body&& body) {
  if (execution == Execution::kSerial) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace floqlat
