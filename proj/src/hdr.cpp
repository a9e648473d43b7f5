#include "hdrmine/hdr.hpp"

#include <algorithm>

namespace hdrmine {

HdrStore::HdrStore(std::size_t item_count, std::vector<Cell> cells,
                   std::vector<CellId> txn_first_cell, std::vector<CellId> item_first_cell)
    : item_count_(item_count),
      words_((item_count + 63) / 64),
      cells_(std::move(cells)),
      txn_first_cell_(std::move(txn_first_cell)),
      item_first_cell_(std::move(item_first_cell)),
      item_support_(item_count, 0) {
  if (txn_first_cell_.empty()) txn_first_cell_.push_back(0);
  if (item_first_cell_.size() != item_count_)
    throw ArgumentError("HdrStore: one root header link per item required");
  bitmaps_.assign(txn_count() * words_, 0);
  for (TxnId t = 0; t < txn_count(); ++t) {
    for (const Cell& c : txn_cells(t)) {
      if (c.item >= item_count_) throw ArgumentError("HdrStore: cell item out of range");
      bitmaps_[t * words_ + c.item / 64] |= std::uint64_t{1} << (c.item % 64);
      ++item_support_[c.item];
    }
  }
}

HdrStore build_hdr(const TransactionDatabase& db) {
  const std::size_t f = db.item_count;
  std::vector<Cell> cells;
  cells.reserve(db.total_length());
  std::vector<CellId> txn_first(db.size() + 1, 0);
  std::vector<CellId> item_first(f, kNoCell);
  std::vector<CellId> item_last(f, kNoCell);

  for (TxnId t = 0; t < db.size(); ++t) {
    txn_first[t] = static_cast<CellId>(cells.size());
    const auto& items = db.transactions[t];
    for (std::size_t k = 0; k < items.size(); ++k) {
      const auto id = static_cast<CellId>(cells.size());
      Cell c;
      c.item = items[k];
      c.txn = t;
      if (k > 0) {
        c.h_prev = id - 1;
        cells.back().h_next = id;
      }
      CellId& last = item_last[c.item];
      if (last == kNoCell) {
        item_first[c.item] = id;
      } else {
        c.v_prev = last;
        cells[last].v_next = id;
      }
      last = id;
      cells.push_back(c);
    }
  }
  txn_first[db.size()] = static_cast<CellId>(cells.size());
  return HdrStore(f, std::move(cells), std::move(txn_first), std::move(item_first));
}

Itemset h_chain(const HdrStore& store, TxnId t) {
  Itemset out;
  std::size_t guard = store.cell_count() + 1;
  for (CellId c = store.txn_first_cell(t); c != kNoCell && guard--; c = store.cell(c).h_next)
    out.push_back(store.cell(c).item);
  return out;
}

std::vector<TxnId> v_chain(const HdrStore& store, Rank item) {
  std::vector<TxnId> out;
  std::size_t guard = store.cell_count() + 1;
  for (CellId c = store.item_first_cell(item); c != kNoCell && guard--; c = store.cell(c).v_next)
    out.push_back(store.cell(c).txn);
  return out;
}

Pdr root_pdr(const HdrStore& store) {
  Pdr pdr;
  pdr.txns.resize(store.txn_count());
  for (TxnId t = 0; t < pdr.txns.size(); ++t) pdr.txns[t] = t;
  pdr.restricted_length_sum = store.cell_count();
  return pdr;
}

CountMode select_mode(double pdr_atl, std::size_t tail_size) {
  return pdr_atl < static_cast<double>(tail_size) / 2.0 ? CountMode::Horizontal
                                                        : CountMode::Bitmap;
}

SupportCounter::SupportCounter(const HdrStore& store, bool instrument)
    : store_(&store), instrument_(instrument), slot_(store.item_count(), -1) {}

template <bool Instrument>
void SupportCounter::count_horizontal(const Pdr& pdr, std::span<Support> out) {
  const auto& cells = store_->cells();
  std::uint64_t touched = 0;
  for (TxnId t : pdr.txns) {
    for (CellId c = store_->txn_first_cell(t); c != kNoCell; c = cells[c].h_next) {
      const std::int32_t s = slot_[cells[c].item];
      if (s >= 0) {
        ++out[s];
        if constexpr (Instrument) ++touched;
      }
    }
  }
  if constexpr (Instrument) counters_.cells_touched += touched;
}

template <bool Instrument>
void SupportCounter::count_bitmap(const Pdr& pdr, std::span<const Rank> tail,
                                  std::span<Support> out) {
  for (TxnId t : pdr.txns) {
    const auto bits = store_->txn_bitmap(t);
    for (std::size_t i = 0; i < tail.size(); ++i) {
      const Rank y = tail[i];
      out[i] += (bits[y / 64] >> (y % 64)) & 1u;
    }
  }
  if constexpr (Instrument) counters_.bit_tests += pdr.txns.size() * tail.size();
}

std::vector<Support> SupportCounter::count(const Pdr& pdr, std::span<const Rank> tail,
                                           CountMode mode) {
  std::vector<Support> out(tail.size(), 0);
  if (mode == CountMode::Auto) mode = select_mode(pdr.atl(), tail.size());
  last_mode_ = mode;
  if (tail.empty()) return out;

  if (mode == CountMode::Horizontal) {
    for (std::size_t i = 0; i < tail.size(); ++i) slot_[tail[i]] = static_cast<std::int32_t>(i);
    if (instrument_)
      count_horizontal<true>(pdr, out);
    else
      count_horizontal<false>(pdr, out);
    for (Rank y : tail) slot_[y] = -1;
  } else {
    if (instrument_)
      count_bitmap<true>(pdr, tail, out);
    else
      count_bitmap<false>(pdr, tail, out);
  }
  return out;
}

std::vector<Pdr> SupportCounter::project_children(const Pdr& pdr, std::span<const Rank> tail) {
  std::vector<Pdr> children(tail.size());
  if (tail.empty()) return children;
  for (std::size_t i = 0; i < tail.size(); ++i) slot_[tail[i]] = static_cast<std::int32_t>(i);

  const auto& cells = store_->cells();
  for (TxnId t : pdr.txns) {
    positions_.clear();
    if (store_->txn_length(t) > tail.size()) {
      // Probing the tail in order yields positions already ascending.
      const auto bits = store_->txn_bitmap(t);
      for (std::uint32_t i = 0; i < tail.size(); ++i)
        if ((bits[tail[i] / 64] >> (tail[i] % 64)) & 1u) positions_.push_back(i);
    } else {
      for (CellId c = store_->txn_first_cell(t); c != kNoCell; c = cells[c].h_next) {
        const std::int32_t s = slot_[cells[c].item];
        if (s >= 0) positions_.push_back(static_cast<std::uint32_t>(s));
      }
      std::sort(positions_.begin(), positions_.end());
    }
    const std::size_t k = positions_.size();
    for (std::size_t i = 0; i < k; ++i) {
      Pdr& child = children[positions_[i]];
      child.txns.push_back(t);
      child.restricted_length_sum += k - 1 - i;
    }
  }
  for (Rank y : tail) slot_[y] = -1;
  return children;
}

std::vector<Support> count_supports(const HdrStore& store, const Pdr& pdr,
                                    std::span<const Rank> tail, CountMode mode,
                                    CostCounters& counters) {
  SupportCounter counter(store, true);
  auto out = counter.count(pdr, tail, mode);
  counters += counter.counters();
  return out;
}

Pdr project_vertical(const HdrStore& store, const Pdr& parent, Rank y,
                     std::span<const Rank> tail_after) {
  std::vector<char> in_tail(store.item_count(), 0);
  for (Rank z : tail_after) in_tail[z] = 1;
  Pdr child;
  for (TxnId t : parent.txns) {
    if (!store.has_item(t, y)) continue;
    child.txns.push_back(t);
    for (CellId c = store.txn_first_cell(t); c != kNoCell; c = store.cell(c).h_next)
      child.restricted_length_sum += in_tail[store.cell(c).item];
  }
  return child;
}

namespace {

// Every h-chain must stay inside its transaction and visit its cells in
// storage order; otherwise horizontal counting could loop or stray.
bool h_links_sane(const HdrStore& store, const Pdr& pdr) {
  for (TxnId t : pdr.txns) {
    if (t >= store.txn_count()) return false;
    const auto cells = store.txn_cells(t);
    std::size_t steps = 0;
    CellId expected = store.txn_first_cell(t);
    for (CellId c = expected; c != kNoCell; c = store.cell(c).h_next) {
      if (steps >= cells.size() || c != expected || store.cell(c).txn != t) return false;
      ++steps;
      ++expected;
    }
    if (steps != cells.size()) return false;
  }
  return true;
}

}  // namespace

bool verify_counts(const HdrStore& store, const Pdr& pdr, std::span<const Rank> tail) {
  if (!h_links_sane(store, pdr)) return false;

  // Link-free rescan of the cell array.
  std::vector<Support> rescan(tail.size(), 0);
  for (TxnId t : pdr.txns)
    for (const Cell& c : store.txn_cells(t))
      for (std::size_t i = 0; i < tail.size(); ++i)
        if (c.item == tail[i]) ++rescan[i];

  // Vertical links: walk each tail item's v-chain and intersect with the Pdr.
  std::vector<Support> vertical(tail.size(), 0);
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (tail[i] >= store.item_count()) return false;
    const auto chain = v_chain(store, tail[i]);
    if (!std::is_sorted(chain.begin(), chain.end())) return false;
    for (TxnId t : chain) {
      if (t >= store.txn_count()) return false;
      if (std::binary_search(pdr.txns.begin(), pdr.txns.end(), t)) ++vertical[i];
    }
  }

  CostCounters scratch;
  const auto horizontal = count_supports(store, pdr, tail, CountMode::Horizontal, scratch);
  const auto bitmap = count_supports(store, pdr, tail, CountMode::Bitmap, scratch);
  return horizontal == rescan && bitmap == rescan && vertical == rescan;
}

}  // namespace hdrmine
