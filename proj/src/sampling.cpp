#include "secmin/sampling.hpp"

#include <map>

#include "secmin/errors.hpp"

namespace secmin {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

void monomials(std::size_t n, std::uint32_t degree, HomogeneousForm::Exponent& cur, std::size_t i,
               std::vector<HomogeneousForm::Exponent>& out) {
  if (i + 1 == n) {
    cur[i] = degree;
    out.push_back(cur);
    return;
  }
  for (std::uint32_t e = 0; e <= degree; ++e) {
    cur[i] = e;
    monomials(n, degree - e, cur, i + 1, out);
  }
}

}  // namespace

GramLattice random_gram(Rng& rng, std::size_t rank, std::int64_t bound) {
  require(bound >= 1, "bound >= 1", "random_gram: bound must be positive");
  while (true) {
    std::vector<std::int64_t> e(rank * rank);
    for (std::size_t i = 0; i < rank; ++i) {
      e[i * rank + i] = uniform(rng, 1, bound);
      for (std::size_t j = i + 1; j < rank; ++j) e[i * rank + j] = e[j * rank + i] = uniform(rng, -bound, bound);
    }
    try {
      return GramLattice::make(rank, std::move(e));
    } catch (const PreconditionError&) {
    }
  }
}

GramLattice random_basis_gram(Rng& rng, std::size_t rank, std::int64_t bound) {
  require(bound >= 1, "bound >= 1", "random_basis_gram: bound must be positive");
  while (true) {
    std::vector<std::int64_t> b(rank * rank);
    for (auto& x : b) x = uniform(rng, -bound, bound);
    std::vector<BigInt> big(b.begin(), b.end());
    if (determinant(big, rank) == 0) continue;
    std::vector<std::int64_t> g(rank * rank, 0);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t k = 0; k < rank; ++k) g[i * rank + j] += b[k * rank + i] * b[k * rank + j];
    return GramLattice::make(rank, std::move(g));
  }
}

std::vector<GramLattice> random_grams(std::uint64_t seed, std::size_t count, std::size_t min_rank,
                                      std::size_t max_rank, std::int64_t bound) {
  Rng rng(seed);
  std::vector<GramLattice> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_gram(rng, min_rank + i % (max_rank - min_rank + 1), bound));
  return out;
}

HomogeneousForm random_dense_form(Rng& rng, std::size_t num_vars, std::uint32_t degree, std::int64_t bound) {
  std::vector<HomogeneousForm::Exponent> monos;
  HomogeneousForm::Exponent cur(num_vars, 0);
  monomials(num_vars, degree, cur, 0, monos);
  while (true) {
    std::vector<std::pair<HomogeneousForm::Exponent, BigInt>> terms;
    bool any = false;
    for (const auto& m : monos) {
      const auto c = uniform(rng, -bound, bound);
      any = any || c != 0;
      terms.emplace_back(m, BigInt(static_cast<long>(c)));
    }
    if (any) return HomogeneousForm::make(num_vars, terms);
  }
}

HomogeneousForm random_product_form(Rng& rng, std::size_t num_vars, std::uint32_t degree, std::int64_t bound) {
  std::map<HomogeneousForm::Exponent, BigInt> poly{{HomogeneousForm::Exponent(num_vars, 0), BigInt(1)}};
  for (std::uint32_t f = 0; f < degree; ++f) {
    std::vector<std::int64_t> lin(num_vars, 0);
    bool any = false;
    while (!any) {
      for (auto& c : lin) {
        c = uniform(rng, -bound, bound);
        any = any || c != 0;
      }
    }
    std::map<HomogeneousForm::Exponent, BigInt> next;
    for (const auto& [alpha, c] : poly)
      for (std::size_t i = 0; i < num_vars; ++i) {
        if (lin[i] == 0) continue;
        auto beta = alpha;
        ++beta[i];
        next[beta] += c * static_cast<long>(lin[i]);
      }
    poly = std::move(next);
  }
  std::vector<std::pair<HomogeneousForm::Exponent, BigInt>> terms(poly.begin(), poly.end());
  return HomogeneousForm::make(num_vars, terms);
}

}  // namespace secmin
