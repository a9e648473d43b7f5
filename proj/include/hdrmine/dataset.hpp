#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "hdrmine/types.hpp"

namespace hdrmine {

/// Transactions exactly as read, after per-line dedup and sort.
/// Empty transactions are kept; they disappear at the prune stage.
struct RawDatabase {
  std::vector<std::vector<Label>> transactions;
  std::set<Label> label_universe;

  std::size_t size() const { return transactions.size(); }
  bool operator==(const RawDatabase&) const = default;
};

/// Bijection between surviving labels and dense ranks [0, F).
class ItemMap {
 public:
  ItemMap() = default;
  explicit ItemMap(std::vector<Label> label_of_rank);

  std::size_t size() const { return label_of_rank_.size(); }
  Label label(Rank r) const { return label_of_rank_.at(r); }
  /// Returns false when the label did not survive pruning.
  bool rank(Label l, Rank& out) const;
  const std::vector<Label>& labels() const { return label_of_rank_; }

 private:
  std::vector<Label> label_of_rank_;
  std::map<Label, Rank> rank_of_label_;
};

/// Pruned, remapped database: every rank is globally frequent and no
/// transaction is empty.
struct TransactionDatabase {
  std::vector<Itemset> transactions;
  std::size_t item_count = 0;
  Support minsup = 1;

  std::size_t size() const { return transactions.size(); }
  std::size_t total_length() const;
};

RawDatabase parse_fimi(std::string_view text);
RawDatabase parse_fimi(std::istream& in);
RawDatabase read_fimi_file(const std::string& path);

/// One line per transaction, labels separated by single spaces.
std::string serialize_fimi(const RawDatabase& db);

std::map<Label, Support> global_supports(const RawDatabase& db);

std::pair<TransactionDatabase, ItemMap> prune_and_remap(const RawDatabase& db, Support minsup);

/// Wraps already-dense rank lists (each sorted, no duplicates) as a raw
/// database so they can go through the normal prune path.
RawDatabase raw_from_ranks(const std::vector<std::vector<Rank>>& transactions);

struct SparseGenParams {
  std::size_t n_transactions = 0;
  std::size_t n_items = 0;
  std::size_t avg_len = 1;
  std::uint64_t seed = 0;
  /// Exponent of the item popularity law; p(i) ~ 1 / (i+1)^zipf_exponent.
  double zipf_exponent = 1.0;
};

/// Synthetic sparse basket data. Lengths are Poisson(avg_len) clamped to
/// [1, n_items]; items follow a Zipf-like popularity over a seeded
/// permutation of the labels 1..n_items.
RawDatabase gen_sparse(const SparseGenParams& params);
RawDatabase gen_sparse(std::size_t n_transactions, std::size_t n_items, std::size_t avg_len,
                       std::uint64_t seed);

/// Average transaction length; 0 for an empty list.
template <typename Txns>
double atl(const Txns& transactions) {
  if (transactions.empty()) return 0.0;
  std::size_t sum = 0;
  for (const auto& t : transactions) sum += t.size();
  return static_cast<double>(sum) / static_cast<double>(transactions.size());
}

}  // namespace hdrmine
