#include "hdrmine/mfi_store.hpp"

#include <algorithm>

namespace hdrmine {

MfiStore::MfiStore(std::size_t item_count)
    : item_count_(item_count), words_((item_count + 63) / 64), by_item_(item_count) {}

bool MfiStore::entry_contains(std::uint32_t id, std::span<const Rank> query) const {
  if (entries_[id].items.size() < query.size()) return false;
  const std::uint64_t* bits = bits_.data() + std::size_t{id} * words_;
  for (Rank r : query)
    if (!((bits[r / 64] >> (r % 64)) & 1u)) return false;
  return true;
}

bool MfiStore::has_superset_of(std::span<const Rank> query) const {
  if (entries_.empty()) return false;
  if (query.empty()) return true;
  const std::vector<std::uint32_t>* best = nullptr;
  for (Rank r : query) {
    const auto& list = by_item_[r];
    if (!best || list.size() < best->size()) best = &list;
    if (best->empty()) return false;
  }
  for (std::uint32_t id : *best)
    if (entry_contains(id, query)) return true;
  return false;
}

std::uint32_t MfiStore::append(Itemset items, Support support) {
  const auto id = static_cast<std::uint32_t>(entries_.size());
  bits_.resize(bits_.size() + words_, 0);
  std::uint64_t* bits = bits_.data() + std::size_t{id} * words_;
  for (Rank r : items) {
    bits[r / 64] |= std::uint64_t{1} << (r % 64);
    by_item_[r].push_back(id);
  }
  entries_.push_back({std::move(items), support});
  return id;
}

bool MfiStore::insert(Itemset items, Support support, bool check_antichain) {
  for (Rank r : items)
    if (r >= item_count_) throw ArgumentError("MfiStore::insert: item out of range");
  if (has_superset_of(items)) return false;
  if (check_antichain) {
    for (const auto& e : entries_) {
      if (std::includes(items.begin(), items.end(), e.items.begin(), e.items.end()))
        throw InvariantError("maximal itemset inserted after one of its proper subsets");
    }
  }
  append(std::move(items), support);
  return true;
}

std::vector<MfiEntry> MfiStore::sorted() const {
  auto out = entries_;
  std::sort(out.begin(), out.end());
  return out;
}

MfiView MfiView::restrict_to(Rank y) const {
  std::vector<std::uint32_t> kept;
  const Rank one[] = {y};
  for (std::uint32_t id : ids_)
    if (store_->entry_contains(id, one)) kept.push_back(id);
  return MfiView(*store_, std::move(kept));
}

bool MfiView::has_superset_of(std::span<const Rank> query) const {
  for (std::uint32_t id : ids_)
    if (store_->entry_contains(id, query)) return true;
  return false;
}

MfiView lmfi_project(const MfiStore& store, Rank y) {
  return MfiView(store, store.containing(y));
}

}  // namespace hdrmine
