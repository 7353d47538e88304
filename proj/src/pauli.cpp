#include "qbool/pauli.hpp"

#include <array>
#include <stdexcept>

namespace qbool {

PauliString::PauliString(std::vector<std::uint8_t> word) : word_(std::move(word)) {
  for (auto c : word_) {
    if (c > 3) throw std::invalid_argument("Pauli symbol out of range 0..3");
  }
}

PauliString PauliString::identity(int n) {
  return PauliString(std::vector<std::uint8_t>(n, 0));
}

PauliString PauliString::single(int n, int qubit, int symbol) {
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("qubit index out of range");
  std::vector<std::uint8_t> w(n, 0);
  w[qubit] = static_cast<std::uint8_t>(symbol);
  return PauliString(std::move(w));
}

PauliString PauliString::parse(std::string_view text) {
  std::vector<std::uint8_t> w;
  w.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': case 'i': case '0': w.push_back(0); break;
      case 'X': case 'x': case '1': w.push_back(1); break;
      case 'Y': case 'y': case '2': w.push_back(2); break;
      case 'Z': case 'z': case '3': w.push_back(3); break;
      default:
        throw std::invalid_argument("invalid Pauli word character: " + std::string(1, c));
    }
  }
  return PauliString(std::move(w));
}

int PauliString::weight() const {
  int w = 0;
  for (auto c : word_) w += (c != 0);
  return w;
}

std::vector<int> PauliString::support() const {
  std::vector<int> s;
  for (int j = 0; j < size(); ++j)
    if (word_[j] != 0) s.push_back(j);
  return s;
}

bool PauliString::anticommutes_with(const PauliString& other) const {
  if (size() != other.size())
    throw std::invalid_argument("Pauli word length mismatch");
  int clashes = 0;
  for (int j = 0; j < size(); ++j) {
    if (word_[j] != 0 && other.word_[j] != 0 && word_[j] != other.word_[j]) ++clashes;
  }
  return clashes % 2 == 1;
}

std::string PauliString::str() const {
  static const char* letters = "IXYZ";
  std::string out;
  out.reserve(word_.size());
  for (auto c : word_) out.push_back(letters[c]);
  return out;
}

const Eigen::Matrix2cd& pauli_2x2(int symbol) {
  static const std::array<Eigen::Matrix2cd, 4> mats = [] {
    std::array<Eigen::Matrix2cd, 4> m;
    const Complex i(0.0, 1.0);
    m[0] << 1, 0, 0, 1;
    m[1] << 0, 1, 1, 0;
    m[2] << 0, -i, i, 0;
    m[3] << 1, 0, 0, -1;
    return m;
  }();
  if (symbol < 0 || symbol > 3) throw std::invalid_argument("Pauli symbol out of range");
  return mats[symbol];
}

Matrix pauli_matrix(const PauliString& s) {
  const int n = s.size();
  if (n < 1) throw std::invalid_argument("pauli_matrix needs at least one qubit");
  const long dim = 1L << n;
  // sigma^s has exactly one non-zero entry per row: column = row ^ flip mask,
  // value a product of per-qubit phases.
  long flip = 0;
  for (int j = 0; j < n; ++j) {
    if (s.symbol(j) == 1 || s.symbol(j) == 2) flip |= 1L << (n - 1 - j);
  }
  Matrix m = Matrix::Zero(dim, dim);
  const Complex i(0.0, 1.0);
  for (long row = 0; row < dim; ++row) {
    Complex v(1.0, 0.0);
    for (int j = 0; j < n; ++j) {
      const int bit = static_cast<int>((row >> (n - 1 - j)) & 1);
      switch (s.symbol(j)) {
        case 2: v *= bit ? i : -i; break;
        case 3: v *= bit ? -1.0 : 1.0; break;
        default: break;
      }
    }
    m(row, row ^ flip) = v;
  }
  return m;
}

}  // namespace qbool
