#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hdrmine {

/// Item label as it appears in a FIMI file.
using Label = std::uint32_t;
/// Dense item id in [0, F) after pruning; ascending rank == ascending label.
using Rank = std::uint32_t;
/// Transaction index, 0-based.
using TxnId = std::uint32_t;
using Support = std::uint32_t;

/// Strictly ascending list of ranks.
using Itemset = std::vector<Rank>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised when an internal consistency check fails (antichain breach etc).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hdrmine
