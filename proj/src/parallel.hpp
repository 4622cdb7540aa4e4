#pragma once

#include <cstddef>
#include <exception>

#include "hcurve/execution.hpp"

namespace hcurve::detail {

/// Runs body(i) for i in [0, count). Exceptions thrown inside the OpenMP region are
/// captured and the first one is rethrown on the calling thread.
template <class Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  const auto total = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < total; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(hcurve_capture_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace hcurve::detail
