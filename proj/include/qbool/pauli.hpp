#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qbool {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A word over {0,1,2,3} indexing a tensor product of single-qubit Pauli
/// operators (0=I, 1=X, 2=Y, 3=Z). Qubit 0 is the most significant tensor
/// factor throughout the library.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<std::uint8_t> word);

  /// All-identity word of length n.
  static PauliString identity(int n);
  /// Single non-identity symbol at position `qubit` (0-based), identity
  /// elsewhere.
  static PauliString single(int n, int qubit, int symbol);
  /// Parses "IXYZ" notation, e.g. "XZI".
  static PauliString parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  std::uint8_t symbol(int qubit) const { return word_[qubit]; }
  const std::vector<std::uint8_t>& word() const { return word_; }

  /// Number of non-identity positions.
  int weight() const;
  /// 0-based positions with a non-identity symbol.
  std::vector<int> support() const;

  /// True when sigma^this and sigma^other anticommute: the number of
  /// positions where both act non-trivially with different symbols is odd.
  bool anticommutes_with(const PauliString& other) const;

  std::string str() const;

  auto operator<=>(const PauliString&) const = default;

 private:
  std::vector<std::uint8_t> word_;
};

/// The four single-qubit Pauli matrices, index 0..3.
const Eigen::Matrix2cd& pauli_2x2(int symbol);

/// Dense 2^n x 2^n matrix of the stabilizer operator indexed by `s`.
/// Unitary, Hermitian, squares to the identity.
Matrix pauli_matrix(const PauliString& s);

}  // namespace qbool
