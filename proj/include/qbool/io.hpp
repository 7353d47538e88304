#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "qbool/operators.hpp"
#include "qbool/spectrum.hpp"
#include "qbool/truth_table.hpp"

namespace qbool {

/// Spectrum text format:
///   # comment
///   n=<qubits>
///   XZI  0.25
///   IYI  0.5+0.25i
void write_spectrum(std::ostream& out, const Spectrum& spec);
Spectrum read_spectrum(std::istream& in);

/// Dense operator text format:
///   dense n=<qubits> hermitian=<0|1>
///   (re,im) (re,im) ...       one row per line, row-major
void write_dense(std::ostream& out, const DenseOperator& f);
DenseOperator read_dense(std::istream& in);

/// Truth table format: a single bitstring of length 2^n, index read
/// big-endian (qubit 0 is the most significant input bit).
void write_truth_table(std::ostream& out, const TruthTable& t);
TruthTable read_truth_table(std::istream& in);

enum class OperatorFileKind { Auto, Spectrum, Dense, TruthTable };

/// Loads an operator from any of the three formats. `Auto` detects by the
/// first non-comment line: "dense" header, "n=" header, or a bitstring.
/// Truth tables are loaded as their phase oracle.
DenseOperator load_operator(const std::string& path,
                            OperatorFileKind kind = OperatorFileKind::Auto);

/// Formats a coefficient the way the spectrum file stores it.
std::string format_coefficient(const Complex& c, bool real_only);

/// FNV-1a 64-bit digest of a file's bytes, as fixed-width hex.
std::string file_digest(const std::string& path);

}  // namespace qbool
