#include "hdrmine/miner.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace hdrmine {

namespace {

Itemset with_item(Itemset set, Rank y) {
  set.insert(std::upper_bound(set.begin(), set.end(), y), y);
  return set;
}

Itemset hut_of(std::span<const Rank> head, std::span<const Rank> tail) {
  Itemset hut(head.begin(), head.end());
  hut.insert(hut.end(), tail.begin(), tail.end());
  std::sort(hut.begin(), hut.end());
  return hut;
}

}  // namespace

TrimmedTail pep_trim(Itemset head, Support head_support, std::span<const Rank> tail,
                     std::span<const Support> tail_supports) {
  TrimmedTail out;
  out.head = std::move(head);
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (tail_supports[i] == head_support) {
      out.head = with_item(std::move(out.head), tail[i]);
    } else {
      out.tail.push_back(tail[i]);
      out.supports.push_back(tail_supports[i]);
    }
  }
  return out;
}

namespace {

std::vector<std::size_t> reorder_permutation(std::span<const Rank> tail,
                                             std::span<const Support> supports) {
  std::vector<std::size_t> order(tail.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (supports[a] != supports[b]) return supports[a] < supports[b];
    return tail[a] < tail[b];
  });
  return order;
}

}  // namespace

std::vector<Rank> reorder_tail(std::span<const Rank> tail, std::span<const Support> supports) {
  std::vector<Rank> out;
  out.reserve(tail.size());
  for (std::size_t i : reorder_permutation(tail, supports)) out.push_back(tail[i]);
  return out;
}

bool hut_prune_check(std::span<const Rank> head, std::span<const Rank> tail, const MfiStore& mfi) {
  return mfi.has_superset_of(hut_of(head, tail));
}

bool hut_prune_check(std::span<const Rank> head, std::span<const Rank> tail, const MfiView& mfi) {
  return mfi.has_superset_of(hut_of(head, tail));
}

bool fhut_signal(bool is_hut, bool all_tail_frequent) { return is_hut && all_tail_frequent; }

bool fhut_signal(const NodeFrame& node, bool all_tail_frequent) {
  return fhut_signal(node.is_hut, all_tail_frequent);
}

bool maximality_insert(MfiStore& mfi, Itemset itemset, Support support, bool check_antichain) {
  return mfi.insert(std::move(itemset), support, check_antichain);
}

namespace {

// A node whose counting has run and whose children are being visited.
struct Expansion {
  NodeFrame node;  // head after PEP; tail trimmed and ordered
  std::vector<Pdr> children;
  std::size_t next = 0;
  bool all_frequent = true;
  bool first_child_frequent = false;
  bool stop = false;
  MfiView view;  // unbound when LMFI is off or at the root
};

class HybridSearch {
 public:
  HybridSearch(const HdrStore& store, const MinerConfig& config)
      : store_(store),
        config_(config),
        counter_(store, config.instrument),
        result_{MfiStore(store.item_count()), {}} {}

  MiningResult run() {
    NodeFrame root;
    root.head_support = static_cast<Support>(store_.txn_count());
    root.tail.resize(store_.item_count());
    std::iota(root.tail.begin(), root.tail.end(), Rank{0});
    root.pdr = root_pdr(store_);

    // A node either finishes at once (pruned or leaf) or becomes an
    // Expansion on the stack; `pending` carries a finished child's
    // "head ∪ tail proved frequent" answer up to its parent.
    std::optional<bool> pending = enter(std::move(root), nullptr);
    while (!stack_.empty()) {
      Expansion& top = stack_.back();
      if (pending) {
        const bool child_is_hut = top.next == 1;
        if (child_is_hut) top.first_child_frequent = *pending;
        if (config_.enable_fhut && fhut_signal(child_is_hut, *pending)) top.stop = true;
        pending.reset();
      }
      if (top.stop || top.next == top.node.tail.size()) {
        pending = top.all_frequent && top.first_child_frequent;
        stack_.pop_back();
        continue;
      }
      const std::size_t i = top.next++;
      NodeFrame child;
      const Rank y = top.node.tail[i];
      child.head = with_item(top.node.head, y);
      child.pdr = std::move(top.children[i]);
      child.head_support = static_cast<Support>(child.pdr.support());
      child.tail.assign(top.node.tail.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                        top.node.tail.end());
      child.is_hut = (i == 0);
      MfiView child_view;
      if (config_.enable_lmfi)
        child_view = top.view.bound() ? top.view.restrict_to(y) : lmfi_project(result_.mfi, y);
      pending = enter(std::move(child), child_view.bound() ? &child_view : nullptr);
    }
    result_.stats.total = counter_.counters();
    return std::move(result_);
  }

 private:
  bool covered(std::span<const Rank> query, const MfiView* view) const {
    return view ? view->has_superset_of(query) : result_.mfi.has_superset_of(query);
  }

  // Returns a value when the node completes immediately, otherwise pushes
  // an Expansion and returns nullopt.
  std::optional<bool> enter(NodeFrame node, const MfiView* view_in) {
    const bool is_root = stack_.empty() && node.head.empty();
    if (config_.enable_hutmfi && !is_root && covered(hut_of(node.head, node.tail), view_in)) {
      // head ∪ tail lies inside a known maximal itemset, hence is frequent.
      return true;
    }

    ++result_.stats.nodes_explored;
    const CostCounters before = counter_.counters();
    auto supports = counter_.count(node.pdr, node.tail, config_.mode);
    if (is_root) {
      result_.stats.root.cells_touched = counter_.counters().cells_touched - before.cells_touched;
      result_.stats.root.bit_tests = counter_.counters().bit_tests - before.bit_tests;
      result_.stats.root_mode = counter_.last_mode();
    }

    bool all_frequent = true;
    std::vector<Rank> frequent;
    std::vector<Support> frequent_supports;
    for (std::size_t i = 0; i < node.tail.size(); ++i) {
      if (supports[i] >= config_.minsup) {
        frequent.push_back(node.tail[i]);
        frequent_supports.push_back(supports[i]);
      } else {
        all_frequent = false;
      }
    }

    Itemset head = std::move(node.head);
    MfiView view;
    if (view_in) view = *view_in;
    if (config_.enable_pep) {
      const Itemset old_head = head;
      auto trimmed = pep_trim(std::move(head), node.head_support, frequent, frequent_supports);
      head = std::move(trimmed.head);
      frequent = std::move(trimmed.tail);
      frequent_supports = std::move(trimmed.supports);
      if (head.size() != old_head.size()) {
        std::vector<Rank> moved;
        std::set_difference(head.begin(), head.end(), old_head.begin(), old_head.end(),
                            std::back_inserter(moved));
        if (config_.check_invariants) check_pep_containment(node.pdr, moved);
        if (view.bound())
          for (Rank m : moved) view = view.restrict_to(m);
      }
    }

    if (config_.enable_reorder && frequent.size() > 1) {
      const auto order = reorder_permutation(frequent, frequent_supports);
      std::vector<Rank> tail;
      tail.reserve(order.size());
      for (std::size_t i : order) tail.push_back(frequent[i]);
      frequent = std::move(tail);
    }

    if (frequent.empty()) {
      if (!head.empty() && !covered(head, view.bound() ? &view : nullptr)) {
        if (config_.check_invariants && node.head_support < config_.minsup)
          throw InvariantError("leaf head below minimum support");
        const bool inserted =
            result_.mfi.insert(head, node.head_support, config_.check_invariants);
        if (inserted) {
          const auto id = static_cast<std::uint32_t>(result_.mfi.size() - 1);
          for (auto& open : stack_)
            if (open.view.bound()) open.view.add(id);
        }
      }
      return all_frequent;
    }

    Expansion ex;
    ex.all_frequent = all_frequent;
    ex.children = counter_.project_children(node.pdr, frequent);
    ex.node.head = std::move(head);
    ex.node.head_support = node.head_support;
    ex.node.tail = std::move(frequent);
    ex.node.is_hut = node.is_hut;
    ex.view = std::move(view);
    stack_.push_back(std::move(ex));
    return std::nullopt;
  }

  void check_pep_containment(const Pdr& pdr, std::span<const Rank> moved) const {
    for (TxnId t : pdr.txns)
      for (Rank m : moved)
        if (!store_.has_item(t, m))
          throw InvariantError("PEP moved an item missing from a head transaction");
  }

  const HdrStore& store_;
  MinerConfig config_;
  SupportCounter counter_;
  MiningResult result_;
  std::vector<Expansion> stack_;
};

}  // namespace

MiningResult mine_mfi(const HdrStore& store, const MinerConfig& config) {
  if (config.minsup == 0) throw ArgumentError("minsup must be at least 1");
  HybridSearch search(store, config);
  return search.run();
}

}  // namespace hdrmine
