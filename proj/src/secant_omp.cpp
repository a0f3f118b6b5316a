// OpenMP kernel for the two-route secant degree sweep.

#include <exception>

#include <omp.h>

#include "secmin/chow.hpp"

namespace secmin::kernels::omp {

std::vector<SecantSweepEntry> secant_sweep(const std::vector<SecantParams>& grid) {
  const auto count = static_cast<std::int64_t>(grid.size());
  std::vector<SecantSweepEntry> out(grid.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const auto& p = grid[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i)] = {p, degree_closed_form(p), degree_oracle(p)};
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace secmin::kernels::omp
