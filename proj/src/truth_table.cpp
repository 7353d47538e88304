#include "qbool/truth_table.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace qbool {

TruthTable::TruthTable(int n_, std::vector<std::uint8_t> values_)
    : n(n_), values(std::move(values_)) {
  if (static_cast<long>(values.size()) != (1L << n))
    throw std::invalid_argument("truth table length must be exactly 2^n");
  for (auto v : values)
    if (v > 1) throw std::invalid_argument("truth table values must be 0 or 1");
}

TruthTable TruthTable::constant(int n, int value) {
  return TruthTable(n, std::vector<std::uint8_t>(1L << n, value ? 1 : 0));
}

TruthTable TruthTable::parse(const std::string& bits) {
  long len = static_cast<long>(bits.size());
  int n = 0;
  while ((1L << n) < len) ++n;
  if ((1L << n) != len)
    throw std::invalid_argument("truth table bitstring length must be a power of two");
  std::vector<std::uint8_t> v(len);
  for (long i = 0; i < len; ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw std::invalid_argument("truth table bitstring must contain only 0 and 1");
    v[i] = bits[i] == '1';
  }
  return TruthTable(n, std::move(v));
}

TruthTable TruthTable::majority(int n) {
  if (n % 2 == 0) throw std::invalid_argument("majority needs an odd bit count");
  std::vector<std::uint8_t> v(1L << n);
  for (long x = 0; x < (1L << n); ++x)
    v[x] = std::popcount(static_cast<unsigned long>(x)) > n / 2;
  return TruthTable(n, std::move(v));
}

TruthTable TruthTable::parity(int n) {
  std::vector<std::uint8_t> v(1L << n);
  for (long x = 0; x < (1L << n); ++x)
    v[x] = std::popcount(static_cast<unsigned long>(x)) & 1;
  return TruthTable(n, std::move(v));
}

bool TruthTable::balanced() const {
  long sum = 0;
  for (auto v : values) sum += v ? -1 : 1;
  return sum == 0;
}

}  // namespace qbool
