#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hdrmine/dataset.hpp"
#include "hdrmine/mfi_store.hpp"
#include "hdrmine/miner.hpp"

namespace hdrmine::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;
inline constexpr int kExitOracleGuard = 4;

/// Minimum support as typed: an integer is an absolute count, anything with
/// a decimal point or exponent is a fraction in (0, 1].
struct MinsupSpec {
  bool relative = false;
  double fraction = 0.0;
  Support absolute = 0;
};

MinsupSpec parse_minsup(std::string_view text);
/// Relative specs round up: ceil(fraction * txn_count), at least 1.
Support resolve_minsup(const MinsupSpec& spec, std::size_t txn_count);

/// Canonical MFI listing: labels ascending, then " (support)"; lines in
/// lexicographic order of their label sequences.
std::string format_mfi(const MfiStore& mfi, const ItemMap& map);

struct RunReport {
  std::string algorithm;
  std::string dataset;
  Support minsup_abs = 0;
  double minsup_rel = 0.0;
  std::size_t mfi_count = 0;
  std::int64_t wall_time_ms = 0;
  bool instrumented = false;
  std::uint64_t cells_touched = 0;
  std::uint64_t bit_tests = 0;
  std::uint64_t nodes_explored = 0;
  std::uint64_t root_cells_touched = 0;
  std::uint64_t root_bit_tests = 0;
  std::string root_mode;
};

inline constexpr std::string_view kBenchCsvHeader =
    "dataset,algorithm,minsup_abs,minsup_rel,mfi_count,wall_time_ms,cells_touched,bit_tests,"
    "nodes_explored";

std::string csv_row(const RunReport& report);

/// Loads a FIMI file, or generates data for `gen:<txns>:<items>:<avg_len>:<seed>[:<zipf>]`.
RawDatabase load_dataset(const std::string& source);

struct RunOutcome {
  MfiStore mfi;
  RunReport report;
};

/// Runs one algorithm ("hybrid", "bitmap" or "oracle") on a pruned database.
RunOutcome run_algorithm(const std::string& algorithm, const TransactionDatabase& db,
                         const MinerConfig& config);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdrmine::cli
