#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qbool {

/// A classical boolean function as its value table; values[x] is f(x) with x
/// read big-endian over the input bits.
struct TruthTable {
  int n = 0;
  std::vector<std::uint8_t> values;

  TruthTable() = default;
  TruthTable(int n_, std::vector<std::uint8_t> values_);

  long size() const { return 1L << n; }

  static TruthTable constant(int n, int value);
  /// Parses a bitstring such as "0110".
  static TruthTable parse(const std::string& bits);
  /// Majority vote of the n input bits (n odd).
  static TruthTable majority(int n);
  /// XOR of all input bits.
  static TruthTable parity(int n);

  /// Sum_x f(x) in the +-1 convention is zero.
  bool balanced() const;
};

}  // namespace qbool
