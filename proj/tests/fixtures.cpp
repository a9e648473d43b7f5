#include "fixtures.hpp"

#include <random>

namespace hdrmine::testing {

RawDatabase random_small_db(std::uint64_t seed, std::size_t max_items, std::size_t max_txns) {
  std::mt19937_64 rng(seed);
  const std::size_t items = std::uniform_int_distribution<std::size_t>(1, max_items)(rng);
  const std::size_t txns = std::uniform_int_distribution<std::size_t>(0, max_txns)(rng);
  const std::size_t avg = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, items * 2 / 3))(rng);
  if (seed % 2 == 0) return gen_sparse(SparseGenParams{txns, items, avg, seed, 0.8});
  // Independent Bernoulli items: denser, longer maximal sets.
  const double p = static_cast<double>(avg) / static_cast<double>(items);
  std::bernoulli_distribution keep(p);
  std::vector<std::vector<Rank>> rows(txns);
  for (auto& row : rows)
    for (Rank r = 0; r < items; ++r)
      if (keep(rng)) row.push_back(r + 1);
  return raw_from_ranks(rows);
}

}  // namespace hdrmine::testing
