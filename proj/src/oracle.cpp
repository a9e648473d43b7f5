#include "hdrmine/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace hdrmine {

namespace {

Itemset items_of_mask(std::uint32_t mask) {
  Itemset out;
  for (Rank r = 0; mask; ++r, mask >>= 1)
    if (mask & 1u) out.push_back(r);
  return out;
}

}  // namespace

FrequentSet enumerate_fi_bruteforce(const TransactionDatabase& db, Support minsup) {
  if (db.item_count > kOracleItemLimit)
    throw CapacityError("brute-force oracle is limited to " + std::to_string(kOracleItemLimit) +
                        " items, got " + std::to_string(db.item_count));
  if (minsup == 0) throw ArgumentError("minsup must be at least 1");

  std::vector<std::uint32_t> txn_masks;
  txn_masks.reserve(db.size());
  for (const auto& t : db.transactions) {
    std::uint32_t m = 0;
    for (Rank r : t) m |= std::uint32_t{1} << r;
    txn_masks.push_back(m);
  }
  auto support_of = [&](std::uint32_t mask) {
    Support s = 0;
    for (std::uint32_t t : txn_masks) s += (t & mask) == mask;
    return s;
  };

  FrequentSet out;
  // Level-wise by cardinality; a candidate is scanned only when all of its
  // one-smaller subsets were frequent.
  std::set<std::uint32_t> previous{0};
  for (std::size_t k = 1; k <= db.item_count && !previous.empty(); ++k) {
    std::set<std::uint32_t> current;
    for (std::uint32_t base : previous) {
      for (Rank r = 0; r < db.item_count; ++r) {
        const std::uint32_t bit = std::uint32_t{1} << r;
        if (base & bit) continue;
        const std::uint32_t cand = base | bit;
        if (current.count(cand)) continue;
        bool subsets_frequent = true;
        for (std::uint32_t rest = cand; rest && subsets_frequent; rest &= rest - 1) {
          const std::uint32_t sub = cand & ~(rest & -rest);
          if (sub && !previous.count(sub)) subsets_frequent = false;
        }
        if (!subsets_frequent) continue;
        const Support s = support_of(cand);
        if (s >= minsup) {
          current.insert(cand);
          out.itemsets.push_back({items_of_mask(cand), s});
        }
      }
    }
    previous = std::move(current);
  }
  return out;
}

MfiStore maximal_filter(const FrequentSet& fi, std::size_t item_count) {
  MfiStore out(item_count);
  for (const auto& a : fi.itemsets) {
    bool maximal = true;
    for (const auto& b : fi.itemsets) {
      if (b.items.size() > a.items.size() &&
          std::includes(b.items.begin(), b.items.end(), a.items.begin(), a.items.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.insert(a.items, a.support);
  }
  return out;
}

namespace {

class BitmapSearch {
 public:
  BitmapSearch(const TransactionDatabase& db, const MinerConfig& config)
      : config_(config), words_((db.size() + 63) / 64), tids_(db.item_count) {
    for (auto& bits : tids_) bits.assign(words_, 0);
    for (std::size_t t = 0; t < db.size(); ++t)
      for (Rank r : db.transactions[t]) tids_[r][t / 64] |= std::uint64_t{1} << (t % 64);
    result_.mfi = MfiStore(db.item_count);
    all_.assign(words_, 0);
    for (std::size_t t = 0; t < db.size(); ++t) all_[t / 64] |= std::uint64_t{1} << (t % 64);
    item_count_ = db.item_count;
    txn_count_ = static_cast<Support>(db.size());
  }

  BaselineResult run() {
    std::vector<Rank> tail(item_count_);
    std::iota(tail.begin(), tail.end(), Rank{0});
    visit({}, txn_count_, all_, tail, true);
    return std::move(result_);
  }

 private:
  using Bits = std::vector<std::uint64_t>;

  Support and_count(const Bits& a, const Bits& b) {
    Support s = 0;
    for (std::size_t w = 0; w < words_; ++w) s += std::popcount(a[w] & b[w]);
    result_.word_ops += words_;
    return s;
  }

  // Returns true when head ∪ tail is known to be frequent.
  bool visit(Itemset head, Support support, const Bits& tids, std::vector<Rank> tail,
             bool is_root) {
    if (config_.enable_hutmfi && !is_root) {
      Itemset hut = head;
      hut.insert(hut.end(), tail.begin(), tail.end());
      std::sort(hut.begin(), hut.end());
      if (result_.mfi.has_superset_of(hut)) return true;
    }
    ++result_.nodes_explored;

    bool all_frequent = true;
    std::vector<Rank> kept;
    std::vector<Support> kept_support;
    for (Rank y : tail) {
      const Support s = and_count(tids, tids_[y]);
      if (s < config_.minsup) {
        all_frequent = false;
      } else if (config_.enable_pep && s == support) {
        head.insert(std::upper_bound(head.begin(), head.end(), y), y);
      } else {
        kept.push_back(y);
        kept_support.push_back(s);
      }
    }
    if (config_.enable_reorder) tail = reorder_tail(kept, kept_support);
    else tail = std::move(kept);

    if (tail.empty()) {
      if (!head.empty()) result_.mfi.insert(head, support, config_.check_invariants);
      return all_frequent;
    }

    bool first_frequent = false;
    Bits child(words_);
    for (std::size_t i = 0; i < tail.size(); ++i) {
      const Rank y = tail[i];
      Support s = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        child[w] = tids[w] & tids_[y][w];
        s += std::popcount(child[w]);
      }
      Itemset child_head = head;
      child_head.insert(std::upper_bound(child_head.begin(), child_head.end(), y), y);
      const bool frequent = visit(std::move(child_head), s, child,
                                  std::vector<Rank>(tail.begin() + i + 1, tail.end()), false);
      if (i == 0) first_frequent = frequent;
      if (config_.enable_fhut && fhut_signal(i == 0, frequent)) break;
    }
    return all_frequent && first_frequent;
  }

  MinerConfig config_;
  std::size_t words_;
  std::vector<Bits> tids_;
  Bits all_;
  std::size_t item_count_ = 0;
  Support txn_count_ = 0;
  BaselineResult result_;
};

}  // namespace

BaselineResult mine_bitmap_baseline(const TransactionDatabase& db, const MinerConfig& config) {
  if (config.minsup == 0) throw ArgumentError("minsup must be at least 1");
  BitmapSearch search(db, config);
  return search.run();
}

BaselineResult mine_bitmap_baseline(const TransactionDatabase& db, Support minsup) {
  MinerConfig config;
  config.minsup = minsup;
  return mine_bitmap_baseline(db, config);
}

}  // namespace hdrmine
