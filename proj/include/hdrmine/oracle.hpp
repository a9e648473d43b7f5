#pragma once

#include <cstdint>
#include <vector>

#include "hdrmine/dataset.hpp"
#include "hdrmine/mfi_store.hpp"
#include "hdrmine/miner.hpp"

namespace hdrmine {

/// Every frequent itemset with its exact support.
struct FrequentSet {
  std::vector<MfiEntry> itemsets;
};

/// Largest item universe the brute-force enumerator accepts.
inline constexpr std::size_t kOracleItemLimit = 24;

/// Exhaustive enumeration over the item powerset with direct transaction
/// scans. Throws CapacityError above kOracleItemLimit items.
FrequentSet enumerate_fi_bruteforce(const TransactionDatabase& db, Support minsup);

/// The ⊆-maximal members of a frequent set.
MfiStore maximal_filter(const FrequentSet& fi, std::size_t item_count);

struct BaselineResult {
  MfiStore mfi;
  std::uint64_t nodes_explored = 0;
  /// Tidset words ANDed while counting.
  std::uint64_t word_ops = 0;
};

/// Depth-first MFI miner over per-item transaction bitsets (no projected
/// database, no link structure). Honors the pruning toggles of config;
/// mode and lmfi are ignored.
BaselineResult mine_bitmap_baseline(const TransactionDatabase& db, const MinerConfig& config);
BaselineResult mine_bitmap_baseline(const TransactionDatabase& db, Support minsup);

}  // namespace hdrmine
