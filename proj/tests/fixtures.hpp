#pragma once

#include <string>
#include <vector>

#include "hdrmine/dataset.hpp"
#include "hdrmine/hdr.hpp"
#include "hdrmine/miner.hpp"
#include "hdrmine/oracle.hpp"

namespace hdrmine::testing {

// Five-transaction sample with a=1, b=2, c=3, d=4, e=5.
inline constexpr const char* kTable1 = "1 2 4\n3\n1 3 5\n2 3\n1 3\n";

inline TransactionDatabase pruned(const RawDatabase& raw, Support minsup) {
  return prune_and_remap(raw, minsup).first;
}

inline TransactionDatabase table1(Support minsup) { return pruned(parse_fimi(kTable1), minsup); }

inline std::vector<MfiEntry> mine_sorted(const TransactionDatabase& db, MinerConfig config) {
  const HdrStore store = build_hdr(db);
  return mine_mfi(store, config).mfi.sorted();
}

inline std::vector<MfiEntry> oracle_sorted(const TransactionDatabase& db, Support minsup) {
  return maximal_filter(enumerate_fi_bruteforce(db, minsup), db.item_count).sorted();
}

inline MinerConfig config_for(Support minsup) {
  MinerConfig c;
  c.minsup = minsup;
  c.check_invariants = true;
  return c;
}

/// Small random database for the oracle sweeps: up to max_items items and
/// max_txns transactions, mixing uniform and skewed item draws.
RawDatabase random_small_db(std::uint64_t seed, std::size_t max_items = 15,
                            std::size_t max_txns = 40);

}  // namespace hdrmine::testing
