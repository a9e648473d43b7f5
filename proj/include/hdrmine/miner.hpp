#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hdrmine/hdr.hpp"
#include "hdrmine/mfi_store.hpp"
#include "hdrmine/types.hpp"

namespace hdrmine {

/// One search-tree state.
struct NodeFrame {
  Itemset head;
  Support head_support = 0;
  std::vector<Rank> tail;
  Pdr pdr;
  /// First child of its parent after reordering.
  bool is_hut = false;
};

struct MinerConfig {
  Support minsup = 1;
  CountMode mode = CountMode::Auto;
  bool enable_pep = true;
  bool enable_fhut = true;
  bool enable_hutmfi = true;
  bool enable_reorder = true;
  /// Subset checks against node-local MFI views instead of the whole store.
  bool enable_lmfi = true;
  /// Collect cells_touched / bit_tests.
  bool instrument = false;
  /// Run the antichain and PEP-containment checks; breaches throw InvariantError.
  bool check_invariants = false;
};

struct MinerStats {
  CostCounters total;
  /// Counters of the root node's counting call alone.
  CostCounters root;
  CountMode root_mode = CountMode::Horizontal;
  /// Nodes whose counting step ran (HUTMFI-pruned nodes excluded).
  std::uint64_t nodes_explored = 0;
};

struct MiningResult {
  MfiStore mfi;
  MinerStats stats;
};

MiningResult mine_mfi(const HdrStore& store, const MinerConfig& config);

struct TrimmedTail {
  Itemset head;
  std::vector<Rank> tail;
  std::vector<Support> supports;
};

/// Parent equivalence pruning: tail items whose support equals the head's
/// join the head; the rest keep their relative order.
TrimmedTail pep_trim(Itemset head, Support head_support, std::span<const Rank> tail,
                     std::span<const Support> tail_supports);

/// Stable ascending-support order, ties by ascending rank.
std::vector<Rank> reorder_tail(std::span<const Rank> tail, std::span<const Support> supports);

/// HUTMFI: head ∪ tail is contained in a known maximal itemset.
bool hut_prune_check(std::span<const Rank> head, std::span<const Rank> tail, const MfiStore& mfi);
bool hut_prune_check(std::span<const Rank> head, std::span<const Rank> tail, const MfiView& mfi);

/// FHUT: the leftmost child proved its head ∪ tail frequent, so the
/// parent's remaining children are all covered.
bool fhut_signal(const NodeFrame& node, bool all_tail_frequent);
bool fhut_signal(bool is_hut, bool all_tail_frequent);

bool maximality_insert(MfiStore& mfi, Itemset itemset, Support support,
                       bool check_antichain = false);

}  // namespace hdrmine
