#include "hdrmine/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>

namespace hdrmine {

ItemMap::ItemMap(std::vector<Label> label_of_rank) : label_of_rank_(std::move(label_of_rank)) {
  for (Rank r = 0; r < label_of_rank_.size(); ++r) {
    if (r > 0 && label_of_rank_[r - 1] >= label_of_rank_[r])
      throw ArgumentError("ItemMap labels must be strictly ascending");
    rank_of_label_.emplace(label_of_rank_[r], r);
  }
}

bool ItemMap::rank(Label l, Rank& out) const {
  auto it = rank_of_label_.find(l);
  if (it == rank_of_label_.end()) return false;
  out = it->second;
  return true;
}

std::size_t TransactionDatabase::total_length() const {
  std::size_t sum = 0;
  for (const auto& t : transactions) sum += t.size();
  return sum;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<Label> parse_line(std::string_view line, std::size_t line_no) {
  std::vector<Label> items;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    std::string_view token = line.substr(i, j - i);
    Label value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range)
      throw ParseError(line_no, "item '" + std::string(token) + "' does not fit in 32 bits");
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError(line_no, "invalid item '" + std::string(token) + "'");
    items.push_back(value);
    i = j;
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return is_space(c); });
}

}  // namespace

RawDatabase parse_fimi(std::string_view text) {
  RawDatabase db;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (blank(line)) continue;
    auto items = parse_line(line, line_no);
    db.label_universe.insert(items.begin(), items.end());
    db.transactions.push_back(std::move(items));
  }
  return db;
}

RawDatabase parse_fimi(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_fimi(std::string_view(text));
}

RawDatabase read_fimi_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_fimi(in);
}

std::string serialize_fimi(const RawDatabase& db) {
  std::ostringstream out;
  for (const auto& t : db.transactions) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out << ' ';
      out << t[i];
    }
    out << '\n';
  }
  return out.str();
}

std::map<Label, Support> global_supports(const RawDatabase& db) {
  std::map<Label, Support> supports;
  for (const auto& t : db.transactions)
    for (Label l : t) ++supports[l];
  return supports;
}

std::pair<TransactionDatabase, ItemMap> prune_and_remap(const RawDatabase& db, Support minsup) {
  if (minsup == 0) throw ArgumentError("minsup must be at least 1");
  std::vector<Label> survivors;
  for (const auto& [label, support] : global_supports(db))
    if (support >= minsup) survivors.push_back(label);
  ItemMap map(std::move(survivors));

  TransactionDatabase out;
  out.item_count = map.size();
  out.minsup = minsup;
  for (const auto& t : db.transactions) {
    Itemset ranks;
    for (Label l : t) {
      Rank r;
      if (map.rank(l, r)) ranks.push_back(r);
    }
    if (!ranks.empty()) out.transactions.push_back(std::move(ranks));
  }
  return {std::move(out), std::move(map)};
}

RawDatabase raw_from_ranks(const std::vector<std::vector<Rank>>& transactions) {
  RawDatabase db;
  for (auto t : transactions) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    db.label_universe.insert(t.begin(), t.end());
    db.transactions.push_back(std::move(t));
  }
  return db;
}

RawDatabase gen_sparse(const SparseGenParams& p) {
  if (p.avg_len == 0 || p.avg_len > p.n_items)
    throw ArgumentError("gen_sparse requires 0 < avg_len <= n_items");
  RawDatabase db;
  if (p.n_transactions == 0) return db;

  std::mt19937_64 rng(p.seed);

  // Popularity rank -> label, so popular items are spread over the label range.
  std::vector<Label> label_of_slot(p.n_items);
  std::iota(label_of_slot.begin(), label_of_slot.end(), Label{1});
  std::shuffle(label_of_slot.begin(), label_of_slot.end(), rng);

  std::vector<double> weights(p.n_items);
  for (std::size_t i = 0; i < p.n_items; ++i)
    weights[i] = 1.0 / std::pow(static_cast<double>(i + 1), p.zipf_exponent);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::poisson_distribution<std::size_t> length(static_cast<double>(p.avg_len));

  std::vector<char> taken(p.n_items, 0);
  std::vector<std::size_t> slots;
  db.transactions.reserve(p.n_transactions);
  for (std::size_t n = 0; n < p.n_transactions; ++n) {
    std::size_t len = std::clamp<std::size_t>(length(rng), 1, p.n_items);
    slots.clear();
    // Rejection sampling for distinct items; bounded so long transactions
    // over small universes still terminate.
    std::size_t attempts = 0;
    const std::size_t max_attempts = 32 * len + 64;
    while (slots.size() < len && attempts++ < max_attempts) {
      std::size_t s = pick(rng);
      if (!taken[s]) {
        taken[s] = 1;
        slots.push_back(s);
      }
    }
    for (std::size_t s = 0; slots.size() < len; ++s) {
      if (!taken[s]) {
        taken[s] = 1;
        slots.push_back(s);
      }
    }
    std::vector<Label> txn;
    txn.reserve(len);
    for (std::size_t s : slots) {
      taken[s] = 0;
      txn.push_back(label_of_slot[s]);
    }
    std::sort(txn.begin(), txn.end());
    db.label_universe.insert(txn.begin(), txn.end());
    db.transactions.push_back(std::move(txn));
  }
  return db;
}

RawDatabase gen_sparse(std::size_t n_transactions, std::size_t n_items, std::size_t avg_len,
                       std::uint64_t seed) {
  return gen_sparse(SparseGenParams{n_transactions, n_items, avg_len, seed, 1.0});
}

}  // namespace hdrmine
