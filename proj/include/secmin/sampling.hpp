#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "secmin/lattice.hpp"

namespace secmin {

using Rng = std::mt19937_64;

/// Rejection-samples a positive definite Gram matrix of the given rank with
/// diagonal in [1, bound] and off-diagonal entries in [-bound, bound].
GramLattice random_gram(Rng& rng, std::size_t rank, std::int64_t bound);

/// Gram matrix B^T B of a random nonsingular integer basis B with entries in
/// [-bound, bound]. Cheap at every rank, unlike rejection sampling.
GramLattice random_basis_gram(Rng& rng, std::size_t rank, std::int64_t bound);

/// `count` lattices with ranks cycling through [min_rank, max_rank].
std::vector<GramLattice> random_grams(std::uint64_t seed, std::size_t count, std::size_t min_rank,
                                      std::size_t max_rank, std::int64_t bound);

/// Nonzero form of the given degree with every monomial present and
/// coefficients in [-bound, bound].
HomogeneousForm random_dense_form(Rng& rng, std::size_t num_vars, std::uint32_t degree, std::int64_t bound);

/// Product of `degree` random nonzero linear forms with coefficients in
/// [-bound, bound].
HomogeneousForm random_product_form(Rng& rng, std::size_t num_vars, std::uint32_t degree, std::int64_t bound);

}  // namespace secmin
