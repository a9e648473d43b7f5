#pragma once

// Hybrid database representation: every item occurrence is a cell that is
// linked horizontally (within its transaction) and vertically (to the same
// item in the neighbouring transactions that contain it). Each transaction
// also carries a bitmap over item ranks. A search node sees the database
// through a Pdr, the ascending list of transactions that contain its head.

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hdrmine/dataset.hpp"
#include "hdrmine/types.hpp"

namespace hdrmine {

using CellId = std::uint32_t;
inline constexpr CellId kNoCell = std::numeric_limits<CellId>::max();

struct Cell {
  Rank item = 0;
  TxnId txn = 0;
  CellId h_prev = kNoCell;
  CellId h_next = kNoCell;
  CellId v_prev = kNoCell;
  CellId v_next = kNoCell;

  bool operator==(const Cell&) const = default;
};

class HdrStore {
 public:
  HdrStore() = default;
  /// Assembles a store from prebuilt parts; build_hdr is the normal entry point.
  HdrStore(std::size_t item_count, std::vector<Cell> cells, std::vector<CellId> txn_first_cell,
           std::vector<CellId> item_first_cell);

  std::size_t item_count() const { return item_count_; }
  std::size_t txn_count() const { return txn_first_cell_.empty() ? 0 : txn_first_cell_.size() - 1; }
  std::size_t cell_count() const { return cells_.size(); }
  std::size_t bitmap_words() const { return words_; }

  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(CellId c) const { return cells_[c]; }

  /// Header link of transaction t (first cell of its h-chain).
  CellId txn_first_cell(TxnId t) const {
    return txn_first_cell_[t] == txn_first_cell_[t + 1] ? kNoCell : txn_first_cell_[t];
  }
  /// Cells of t in storage order, ignoring links.
  std::span<const Cell> txn_cells(TxnId t) const {
    return {cells_.data() + txn_first_cell_[t], cells_.data() + txn_first_cell_[t + 1]};
  }
  std::size_t txn_length(TxnId t) const { return txn_first_cell_[t + 1] - txn_first_cell_[t]; }

  /// Root header link of an item: its occurrence in the lowest transaction.
  CellId item_first_cell(Rank item) const { return item_first_cell_[item]; }
  Support item_support(Rank item) const { return item_support_[item]; }

  bool has_item(TxnId t, Rank item) const {
    return (bitmaps_[t * words_ + item / 64] >> (item % 64)) & 1u;
  }
  std::span<const std::uint64_t> txn_bitmap(TxnId t) const {
    return {bitmaps_.data() + t * words_, words_};
  }

 private:
  std::size_t item_count_ = 0;
  std::size_t words_ = 0;
  std::vector<Cell> cells_;
  std::vector<CellId> txn_first_cell_;  // size txn_count + 1
  std::vector<CellId> item_first_cell_;
  std::vector<Support> item_support_;
  std::vector<std::uint64_t> bitmaps_;
};

HdrStore build_hdr(const TransactionDatabase& db);

/// Ranks visited along the h-chain of t.
Itemset h_chain(const HdrStore& store, TxnId t);
/// Transactions visited along the v-chain of item, from its root header link.
std::vector<TxnId> v_chain(const HdrStore& store, Rank item);

/// Projected database of one search node.
struct Pdr {
  std::vector<TxnId> txns;
  /// Number of cells in txns whose item belongs to the node's tail.
  std::uint64_t restricted_length_sum = 0;

  std::size_t support() const { return txns.size(); }
  /// ATL restricted to the node's tail; 0 for an empty Pdr.
  double atl() const {
    return txns.empty() ? 0.0 : static_cast<double>(restricted_length_sum) / txns.size();
  }
  bool operator==(const Pdr&) const = default;
};

/// The whole database as the root's Pdr (tail = every item).
Pdr root_pdr(const HdrStore& store);

struct CostCounters {
  std::uint64_t cells_touched = 0;
  std::uint64_t bit_tests = 0;

  CostCounters& operator+=(const CostCounters& o) {
    cells_touched += o.cells_touched;
    bit_tests += o.bit_tests;
    return *this;
  }
  bool operator==(const CostCounters&) const = default;
};

enum class CountMode { Horizontal, Bitmap, Auto };

/// Horizontal iff pdr_atl < tail_size / 2.
CountMode select_mode(double pdr_atl, std::size_t tail_size);

/// Per-run counting and projection scratch over one shared store.
class SupportCounter {
 public:
  explicit SupportCounter(const HdrStore& store, bool instrument = false);

  /// Supports of head ∪ {y} for each y in tail, aligned with tail.
  /// Auto resolves through select_mode(pdr.atl(), tail.size()).
  std::vector<Support> count(const Pdr& pdr, std::span<const Rank> tail, CountMode mode);

  /// Child Pdrs for every tail item at once: result[i] holds the
  /// transactions of pdr containing tail[i], with restricted_length_sum
  /// taken over tail[i+1..].
  std::vector<Pdr> project_children(const Pdr& pdr, std::span<const Rank> tail);

  /// Mode the last count() call actually used.
  CountMode last_mode() const { return last_mode_; }
  const CostCounters& counters() const { return counters_; }
  void reset_counters() { counters_ = {}; }

 private:
  template <bool Instrument>
  void count_horizontal(const Pdr& pdr, std::span<Support> out);
  template <bool Instrument>
  void count_bitmap(const Pdr& pdr, std::span<const Rank> tail, std::span<Support> out);

  const HdrStore* store_;
  bool instrument_;
  CostCounters counters_;
  CountMode last_mode_ = CountMode::Horizontal;
  std::vector<std::int32_t> slot_;  // item -> position in current tail, -1 if absent
  std::vector<std::uint32_t> positions_;
};

std::vector<Support> count_supports(const HdrStore& store, const Pdr& pdr,
                                    std::span<const Rank> tail, CountMode mode,
                                    CostCounters& counters);

/// Transactions of parent containing y; restricted_length_sum over tail_after.
Pdr project_vertical(const HdrStore& store, const Pdr& parent, Rank y,
                     std::span<const Rank> tail_after);

/// Cross-checks horizontal counting, bitmap counting, v-chain walks and a
/// link-free rescan of the cell array. False on any disagreement.
bool verify_counts(const HdrStore& store, const Pdr& pdr, std::span<const Rank> tail);

}  // namespace hdrmine
