#include "hdrmine/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hdrmine/hdr.hpp"
#include "hdrmine/oracle.hpp"

namespace hdrmine::cli {

MinsupSpec parse_minsup(std::string_view text) {
  MinsupSpec spec;
  const bool fractional = text.find_first_of(".eE") != std::string_view::npos;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (fractional) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !(value > 0.0) || value > 1.0)
      throw ArgumentError("relative minsup must be a number in (0, 1], got '" + std::string(text) +
                          "'");
    spec.relative = true;
    spec.fraction = value;
  } else {
    Support value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value == 0)
      throw ArgumentError("absolute minsup must be a positive integer, got '" + std::string(text) +
                          "'");
    spec.absolute = value;
  }
  return spec;
}

Support resolve_minsup(const MinsupSpec& spec, std::size_t txn_count) {
  if (!spec.relative) return spec.absolute;
  // The epsilon absorbs products like 0.001 * 100000 landing just above 100.
  const double scaled = spec.fraction * static_cast<double>(txn_count);
  const auto count = static_cast<Support>(std::ceil(scaled - 1e-9));
  return std::max<Support>(count, 1);
}

std::string format_mfi(const MfiStore& mfi, const ItemMap& map) {
  std::vector<std::pair<std::vector<Label>, Support>> lines;
  lines.reserve(mfi.size());
  for (const auto& e : mfi.entries()) {
    std::vector<Label> labels;
    labels.reserve(e.items.size());
    for (Rank r : e.items) labels.push_back(map.label(r));
    std::sort(labels.begin(), labels.end());
    lines.emplace_back(std::move(labels), e.support);
  }
  std::sort(lines.begin(), lines.end());
  std::ostringstream out;
  for (const auto& [labels, support] : lines) {
    for (Label l : labels) out << l << ' ';
    out << '(' << support << ")\n";
  }
  return out.str();
}

std::string csv_row(const RunReport& r) {
  std::ostringstream out;
  out << r.dataset << ',' << r.algorithm << ',' << r.minsup_abs << ',' << r.minsup_rel << ','
      << r.mfi_count << ',' << r.wall_time_ms << ',';
  if (r.instrumented) out << r.cells_touched << ',' << r.bit_tests << ',' << r.nodes_explored;
  else out << ",,";
  return out.str();
}

RawDatabase load_dataset(const std::string& source) {
  constexpr std::string_view prefix = "gen:";
  if (source.rfind(prefix, 0) != 0) return read_fimi_file(source);

  std::vector<std::string> fields;
  std::stringstream ss(source.substr(prefix.size()));
  for (std::string f; std::getline(ss, f, ':');) fields.push_back(f);
  if (fields.size() < 4 || fields.size() > 5)
    throw ArgumentError("generator spec must be gen:<txns>:<items>:<avg_len>:<seed>[:<zipf>]");
  auto number = [&](const std::string& f) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
    if (ec != std::errc() || ptr != f.data() + f.size())
      throw ArgumentError("bad number '" + f + "' in generator spec '" + source + "'");
    return v;
  };
  SparseGenParams p;
  p.n_transactions = number(fields[0]);
  p.n_items = number(fields[1]);
  p.avg_len = number(fields[2]);
  p.seed = number(fields[3]);
  if (fields.size() == 5) {
    try {
      p.zipf_exponent = std::stod(fields[4]);
    } catch (const std::exception&) {
      throw ArgumentError("bad zipf exponent in generator spec '" + source + "'");
    }
  }
  return gen_sparse(p);
}

namespace {

std::string mode_name(CountMode m) {
  switch (m) {
    case CountMode::Horizontal: return "horizontal";
    case CountMode::Bitmap: return "bitmap";
    case CountMode::Auto: return "auto";
  }
  return "auto";
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               since)
      .count();
}

}  // namespace

RunOutcome run_algorithm(const std::string& algorithm, const TransactionDatabase& db,
                         const MinerConfig& config) {
  RunReport report;
  report.algorithm = algorithm;
  report.minsup_abs = config.minsup;
  report.instrumented = config.instrument;
  const auto start = std::chrono::steady_clock::now();

  if (algorithm == "hybrid") {
    const HdrStore store = build_hdr(db);
    auto result = mine_mfi(store, config);
    report.wall_time_ms = elapsed_ms(start);
    report.cells_touched = result.stats.total.cells_touched;
    report.bit_tests = result.stats.total.bit_tests;
    report.nodes_explored = result.stats.nodes_explored;
    report.root_cells_touched = result.stats.root.cells_touched;
    report.root_bit_tests = result.stats.root.bit_tests;
    report.root_mode = mode_name(result.stats.root_mode);
    report.mfi_count = result.mfi.size();
    return {std::move(result.mfi), std::move(report)};
  }
  if (algorithm == "bitmap") {
    auto result = mine_bitmap_baseline(db, config);
    report.wall_time_ms = elapsed_ms(start);
    report.nodes_explored = result.nodes_explored;
    report.mfi_count = result.mfi.size();
    return {std::move(result.mfi), std::move(report)};
  }
  if (algorithm == "oracle") {
    auto mfi = maximal_filter(enumerate_fi_bruteforce(db, config.minsup), db.item_count);
    report.wall_time_ms = elapsed_ms(start);
    report.mfi_count = mfi.size();
    return {std::move(mfi), std::move(report)};
  }
  throw ArgumentError("unknown algorithm '" + algorithm + "'");
}

namespace {

struct MineOptions {
  std::string input;
  std::string minsup;
  std::string algorithm = "hybrid";
  std::string mode = "auto";
  std::string output = "-";
  bool counters = false;
  bool check = false;
  bool no_pep = false;
  bool no_fhut = false;
  bool no_hutmfi = false;
  bool no_reorder = false;
  bool no_lmfi = false;
};

struct BenchOptions {
  std::vector<std::string> inputs;
  std::vector<std::string> minsups;
  std::vector<std::string> algorithms{"hybrid", "bitmap"};
  std::string mode = "auto";
  std::string csv = "-";
  bool counters = false;
};

struct GenOptions {
  std::size_t transactions = 0;
  std::size_t items = 0;
  std::size_t avg_len = 1;
  std::uint64_t seed = 0;
  double zipf = 1.0;
  std::string output = "-";
};

CountMode parse_mode(const std::string& m) {
  if (m == "horizontal") return CountMode::Horizontal;
  if (m == "bitmap") return CountMode::Bitmap;
  return CountMode::Auto;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

void print_report(const RunReport& r, std::ostream& err) {
  err << "algorithm=" << r.algorithm << "\n"
      << "dataset=" << r.dataset << "\n"
      << "minsup_abs=" << r.minsup_abs << "\n"
      << "minsup_rel=" << r.minsup_rel << "\n"
      << "mfi_count=" << r.mfi_count << "\n"
      << "wall_time_ms=" << r.wall_time_ms << "\n"
      << "nodes_explored=" << r.nodes_explored << "\n"
      << "cells_touched=" << r.cells_touched << "\n"
      << "bit_tests=" << r.bit_tests << "\n";
  if (!r.root_mode.empty()) {
    err << "root_mode=" << r.root_mode << "\n"
        << "root_cells_touched=" << r.root_cells_touched << "\n"
        << "root_bit_tests=" << r.root_bit_tests << "\n";
  }
}

struct Prepared {
  TransactionDatabase db;
  ItemMap map;
  Support minsup = 1;
  double minsup_rel = 0.0;
};

Prepared prepare(const RawDatabase& raw, const MinsupSpec& spec) {
  Prepared p;
  p.minsup = resolve_minsup(spec, raw.size());
  p.minsup_rel = raw.size() ? static_cast<double>(p.minsup) / static_cast<double>(raw.size()) : 0.0;
  auto [db, map] = prune_and_remap(raw, p.minsup);
  p.db = std::move(db);
  p.map = std::move(map);
  return p;
}

int cmd_mine(const MineOptions& o, std::ostream& out, std::ostream& err) {
  const RawDatabase raw = read_fimi_file(o.input);
  const Prepared prep = prepare(raw, parse_minsup(o.minsup));
  MinerConfig config;
  config.minsup = prep.minsup;
  config.mode = parse_mode(o.mode);
  config.instrument = o.counters;
  config.check_invariants = o.check;
  config.enable_pep = !o.no_pep;
  config.enable_fhut = !o.no_fhut;
  config.enable_hutmfi = !o.no_hutmfi;
  config.enable_reorder = !o.no_reorder;
  config.enable_lmfi = !o.no_lmfi;
  auto outcome = run_algorithm(o.algorithm, prep.db, config);
  outcome.report.dataset = o.input;
  outcome.report.minsup_rel = prep.minsup_rel;
  write_text(o.output, format_mfi(outcome.mfi, prep.map), out);
  if (o.counters) print_report(outcome.report, err);
  return kExitOk;
}

int cmd_oracle(const std::string& input, const std::string& minsup, const std::string& output,
               std::ostream& out) {
  const RawDatabase raw = read_fimi_file(input);
  const Prepared prep = prepare(raw, parse_minsup(minsup));
  const auto fi = enumerate_fi_bruteforce(prep.db, prep.minsup);
  write_text(output, format_mfi(maximal_filter(fi, prep.db.item_count), prep.map), out);
  return kExitOk;
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  if (o.inputs.empty() || o.minsups.empty() || o.algorithms.empty()) {
    err << "bench needs at least one dataset, one minsup and one algorithm\n";
    return kExitUsage;
  }
  std::vector<MinsupSpec> grid;
  for (const auto& m : o.minsups) grid.push_back(parse_minsup(m));

  std::ostringstream csv;
  csv << kBenchCsvHeader << '\n';
  bool mismatch = false;
  for (const auto& source : o.inputs) {
    const RawDatabase raw = load_dataset(source);
    for (const auto& spec : grid) {
      const Prepared prep = prepare(raw, spec);
      MinerConfig config;
      config.minsup = prep.minsup;
      config.mode = parse_mode(o.mode);
      config.instrument = o.counters;
      std::optional<std::size_t> expected;
      for (const auto& algorithm : o.algorithms) {
        auto outcome = run_algorithm(algorithm, prep.db, config);
        outcome.report.dataset = source;
        outcome.report.minsup_rel = prep.minsup_rel;
        csv << csv_row(outcome.report) << '\n';
        if (expected && *expected != outcome.report.mfi_count) {
          err << "mfi_count mismatch on " << source << " at minsup " << prep.minsup << ": "
              << algorithm << " found " << outcome.report.mfi_count << ", expected " << *expected
              << "\n";
          mismatch = true;
        }
        if (!expected) expected = outcome.report.mfi_count;
      }
    }
  }
  write_text(o.csv, csv.str(), out);
  return mismatch ? kExitInvariant : kExitOk;
}

int cmd_stats(const std::string& input, std::ostream& out) {
  const RawDatabase raw = read_fimi_file(input);
  std::size_t min_len = 0, max_len = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::size_t len = raw.transactions[i].size();
    min_len = i ? std::min(min_len, len) : len;
    max_len = std::max(max_len, len);
  }
  out << "Items=" << raw.label_universe.size() << "\n"
      << "Records=" << raw.size() << "\n"
      << "Average Length=" << atl(raw.transactions) << "\n"
      << "Min Length=" << min_len << "\n"
      << "Max Length=" << max_len << "\n";
  return kExitOk;
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  SparseGenParams p{o.transactions, o.items, o.avg_len, o.seed, o.zipf};
  write_text(o.output, serialize_fimi(gen_sparse(p)), out);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal frequent itemset mining over a hybrid database representation"};
  app.require_subcommand(1);

  MineOptions mine;
  auto* mine_cmd = app.add_subcommand("mine", "Mine maximal frequent itemsets");
  mine_cmd->add_option("-i,--input", mine.input, "FIMI transaction file")->required();
  mine_cmd->add_option("-s,--minsup", mine.minsup, "Absolute count or fraction in (0,1]")
      ->required();
  mine_cmd->add_option("-a,--algorithm", mine.algorithm)
      ->check(CLI::IsMember({"hybrid", "bitmap"}));
  mine_cmd->add_option("--mode", mine.mode, "Support counting mode")
      ->check(CLI::IsMember({"auto", "horizontal", "bitmap"}));
  mine_cmd->add_option("-o,--output", mine.output, "Output file, '-' for stdout");
  mine_cmd->add_flag("--counters", mine.counters, "Collect cost counters; report on stderr");
  mine_cmd->add_flag("--check", mine.check, "Run internal invariant checks");
  mine_cmd->add_flag("--no-pep", mine.no_pep);
  mine_cmd->add_flag("--no-fhut", mine.no_fhut);
  mine_cmd->add_flag("--no-hutmfi", mine.no_hutmfi);
  mine_cmd->add_flag("--no-reorder", mine.no_reorder);
  mine_cmd->add_flag("--no-lmfi", mine.no_lmfi);

  std::string oracle_input, oracle_minsup, oracle_output = "-";
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force maximal itemsets (small data)");
  oracle_cmd->add_option("-i,--input", oracle_input)->required();
  oracle_cmd->add_option("-s,--minsup", oracle_minsup)->required();
  oracle_cmd->add_option("-o,--output", oracle_output);

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Runtime comparison over a support grid, as CSV");
  bench_cmd->add_option("-i,--input", bench.inputs, "FIMI files or gen:<txns>:<items>:<len>:<seed>");
  bench_cmd->add_option("-s,--minsup", bench.minsups, "Support grid");
  bench_cmd->add_option("-a,--algorithm", bench.algorithms)
      ->check(CLI::IsMember({"hybrid", "bitmap", "oracle"}));
  bench_cmd->add_option("--mode", bench.mode)
      ->check(CLI::IsMember({"auto", "horizontal", "bitmap"}));
  bench_cmd->add_option("--csv", bench.csv, "CSV output, '-' for stdout");
  bench_cmd->add_flag("--counters", bench.counters);

  std::string stats_input;
  auto* stats_cmd = app.add_subcommand("stats", "Dataset summary");
  stats_cmd->add_option("-i,--input", stats_input)->required();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a sparse synthetic FIMI file");
  gen_cmd->add_option("-n,--transactions", gen.transactions)->required();
  gen_cmd->add_option("-m,--items", gen.items)->required();
  gen_cmd->add_option("-l,--avg-len", gen.avg_len)->required();
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--zipf", gen.zipf);
  gen_cmd->add_option("-o,--output", gen.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (mine_cmd->parsed()) return cmd_mine(mine, out, err);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_input, oracle_minsup, oracle_output, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
    if (stats_cmd->parsed()) return cmd_stats(stats_input, out);
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
  } catch (const CapacityError& e) {
    err << "oracle guard exceeded (" << kOracleItemLimit << " items): " << e.what() << "\n";
    return kExitOracleGuard;
  } catch (const InvariantError& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hdrmine"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hdrmine::cli
