#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hdrmine/types.hpp"

namespace hdrmine {

struct MfiEntry {
  Itemset items;  // ascending ranks
  Support support = 0;

  bool operator==(const MfiEntry&) const = default;
  auto operator<=>(const MfiEntry&) const = default;
};

/// Antichain of maximal itemsets. Each member is kept both as a sorted
/// rank list and as a bitset, and every item maps to the members that
/// contain it.
class MfiStore {
 public:
  explicit MfiStore(std::size_t item_count = 0);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t item_count() const { return item_count_; }
  const std::vector<MfiEntry>& entries() const { return entries_; }
  const MfiEntry& entry(std::uint32_t id) const { return entries_[id]; }
  const std::vector<std::uint32_t>& containing(Rank item) const { return by_item_[item]; }

  /// True iff entry `id` contains every item of `query`.
  bool entry_contains(std::uint32_t id, std::span<const Rank> query) const;

  /// True iff some member contains every item of query. Candidates come
  /// from the shortest per-item list among the query's items.
  bool has_superset_of(std::span<const Rank> query) const;

  /// Inserts unless `items` is a subset of a member. With check_antichain,
  /// also throws InvariantError if a member is a proper subset of `items`.
  /// Returns whether the itemset was inserted.
  bool insert(Itemset items, Support support, bool check_antichain = false);

  /// Members as a sorted list, convenient for equality in tests.
  std::vector<MfiEntry> sorted() const;

 private:
  std::uint32_t append(Itemset items, Support support);

  std::size_t item_count_;
  std::size_t words_;
  std::vector<MfiEntry> entries_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<std::uint32_t>> by_item_;
};

/// Node-local subset of an MfiStore (GenMax's LMFI): the members that
/// contain every item of a node's head. Descendants only ever query
/// itemsets that include that head, so checks against the view answer the
/// same as checks against the whole store.
class MfiView {
 public:
  MfiView() = default;
  MfiView(const MfiStore& store, std::vector<std::uint32_t> ids)
      : store_(&store), ids_(std::move(ids)) {}

  /// False for a default-constructed view that is bound to no store.
  bool bound() const { return store_ != nullptr; }
  const std::vector<std::uint32_t>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  void add(std::uint32_t id) { ids_.push_back(id); }
  /// Members of this view that also contain y.
  MfiView restrict_to(Rank y) const;
  bool has_superset_of(std::span<const Rank> query) const;

 private:
  const MfiStore* store_ = nullptr;
  std::vector<std::uint32_t> ids_;
};

/// View of the stored itemsets that contain y.
MfiView lmfi_project(const MfiStore& store, Rank y);

}  // namespace hdrmine
