// OpenMP kernels for lattice enumeration and batched Prop 4 checks. Results
// match the serial references in lattice.cpp exactly.

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>

#include <omp.h>

#include "lattice_detail.hpp"
#include "secmin/errors.hpp"

namespace secmin::kernels::omp {

std::vector<ShortVector> enumerate(const GramLattice& l, std::int64_t radius_sq, std::size_t budget) {
  const auto chol = detail::cholesky(l);
  const std::int64_t top = detail::top_bound(chol, radius_sq);
  const std::int64_t slices = 2 * top + 1;
  std::vector<std::vector<ShortVector>> parts(static_cast<std::size_t>(slices));
  std::atomic<std::size_t> count{0};
  std::atomic<bool> over{false};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t s = 0; s < slices; ++s) {
    if (over.load(std::memory_order_relaxed)) continue;
    auto& part = parts[static_cast<std::size_t>(s)];
    detail::enumerate_with_top(l, chol, radius_sq, s - top, [&](const IntVec& x, std::int64_t nn) {
      if (over.load(std::memory_order_relaxed)) return;
      if (count.fetch_add(1, std::memory_order_relaxed) >= budget) {
        over.store(true);
        return;
      }
      part.push_back({x, nn});
    });
  }
  if (over)
    throw BudgetExceeded(static_cast<double>(radius_sq), "enumerate: more than " + std::to_string(budget) +
                                                             " vectors within radius^2 " + std::to_string(radius_sq));
  std::vector<ShortVector> out;
  out.reserve(count.load());
  for (auto& p : parts)
    for (auto& v : p) out.push_back(std::move(v));
  detail::sort_short_vectors(out);
  return out;
}

std::vector<Prop4Report> prop4_batch(const std::vector<GramLattice>& lattices, BallIndexing balls) {
  std::vector<std::optional<Prop4Report>> slots(lattices.size());
  std::exception_ptr first_error;
  std::size_t first_index = lattices.size();
  std::mutex mu;
  const auto n = static_cast<std::int64_t>(lattices.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      slots[static_cast<std::size_t>(i)] =
          verify_prop4(lattices[static_cast<std::size_t>(i)], NumberFieldData::rationals(), balls, Exec::serial);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (static_cast<std::size_t>(i) < first_index) {
        first_index = static_cast<std::size_t>(i);
        first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  std::vector<Prop4Report> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace secmin::kernels::omp
