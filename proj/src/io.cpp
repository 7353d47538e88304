#include "qbool/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qbool/build.hpp"
#include "qbool/fourier.hpp"

namespace qbool {

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(const std::string& raw) {
  std::string line = raw;
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

std::string next_content_line(std::istream& in) {
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = clean_line(raw);
    if (!line.empty()) return line;
  }
  return "";
}

// Accepts "0.5", "0.5+0.25i", "0.5-0.25i", "1e-3+2e-4i".
Complex parse_coefficient(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty coefficient");
  if (text.back() == 'i' || text.back() == 'I') {
    const std::string body = text.substr(0, text.size() - 1);
    // Split at the sign of the imaginary part (not the leading sign, not an
    // exponent sign).
    for (std::size_t k = body.size(); k-- > 1;) {
      const char c = body[k];
      if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        const double re = std::stod(body.substr(0, k));
        const double im = std::stod(body.substr(k));
        return Complex(re, im);
      }
    }
    return Complex(0.0, std::stod(body));
  }
  return Complex(std::stod(text), 0.0);
}

int parse_header_n(const std::string& token) {
  if (token.rfind("n=", 0) != 0) throw std::invalid_argument("expected n=<qubits> header");
  const int n = std::stoi(token.substr(2));
  if (n < 1 || n > 12) throw std::invalid_argument("qubit count out of the supported range");
  return n;
}

}  // namespace

std::string format_coefficient(const Complex& c, bool real_only) {
  char buf[80];
  if (real_only || c.imag() == 0.0) {
    std::snprintf(buf, sizeof(buf), "%.17g", c.real());
  } else {
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", c.real(), c.imag());
  }
  return buf;
}

void write_spectrum(std::ostream& out, const Spectrum& spec) {
  out << "n=" << spec.qubits() << "\n";
  for (const auto& [s, c] : spec)
    out << s.str() << "  " << format_coefficient(c, spec.real_coefficients()) << "\n";
}

Spectrum read_spectrum(std::istream& in) {
  const std::string header = next_content_line(in);
  if (header.empty()) throw std::invalid_argument("spectrum file is empty");
  const int n = parse_header_n(header);

  std::vector<Spectrum::Entry> entries;
  bool real = true;
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = clean_line(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word, coeff;
    if (!(ls >> word >> coeff))
      throw std::invalid_argument("malformed spectrum line: " + line);
    PauliString s = PauliString::parse(word);
    if (s.size() != n)
      throw std::invalid_argument("spectrum word length does not match header: " + word);
    const Complex c = parse_coefficient(coeff);
    if (c.imag() != 0.0) real = false;
    entries.emplace_back(std::move(s), c);
  }
  return Spectrum::from_entries(n, real, std::move(entries));
}

void write_dense(std::ostream& out, const DenseOperator& f) {
  out << "dense n=" << f.n << " hermitian=" << (f.hermitian ? 1 : 0) << "\n";
  char buf[96];
  for (long r = 0; r < f.dim(); ++r) {
    for (long c = 0; c < f.dim(); ++c) {
      std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)", f.mat(r, c).real(), f.mat(r, c).imag());
      out << buf << (c + 1 < f.dim() ? " " : "");
    }
    out << "\n";
  }
}

DenseOperator read_dense(std::istream& in) {
  std::string header = next_content_line(in);
  if (header.rfind("dense", 0) != 0)
    throw std::invalid_argument("dense operator file must start with a 'dense' header");
  std::istringstream hs(header);
  std::string tag, ntok;
  hs >> tag >> ntok;
  const int n = parse_header_n(ntok);
  bool hermitian = false;
  std::string rest;
  while (hs >> rest) {
    if (rest == "hermitian=1") hermitian = true;
  }

  const long dim = 1L << n;
  Matrix m(dim, dim);
  for (long r = 0; r < dim; ++r) {
    const std::string line = next_content_line(in);
    if (line.empty()) throw std::invalid_argument("dense operator file truncated");
    std::istringstream ls(line);
    for (long c = 0; c < dim; ++c) {
      std::string pair;
      if (!(ls >> pair)) throw std::invalid_argument("dense operator row too short");
      double re = 0, im = 0;
      if (std::sscanf(pair.c_str(), "(%lf,%lf)", &re, &im) != 2)
        throw std::invalid_argument("malformed dense entry: " + pair);
      m(r, c) = Complex(re, im);
    }
  }
  return DenseOperator(n, std::move(m), hermitian);
}

void write_truth_table(std::ostream& out, const TruthTable& t) {
  for (auto v : t.values) out << (v ? '1' : '0');
  out << "\n";
}

TruthTable read_truth_table(std::istream& in) {
  const std::string line = next_content_line(in);
  if (line.empty()) throw std::invalid_argument("truth table file is empty");
  return TruthTable::parse(line);
}

DenseOperator load_operator(const std::string& path, OperatorFileKind kind) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);

  if (kind == OperatorFileKind::Auto) {
    std::ifstream probe(path);
    const std::string first = next_content_line(probe);
    if (first.rfind("dense", 0) == 0) {
      kind = OperatorFileKind::Dense;
    } else if (first.rfind("n=", 0) == 0) {
      kind = OperatorFileKind::Spectrum;
    } else if (!first.empty() &&
               first.find_first_not_of("01") == std::string::npos) {
      kind = OperatorFileKind::TruthTable;
    } else {
      throw std::invalid_argument("cannot detect operator file format: " + path);
    }
  }

  switch (kind) {
    case OperatorFileKind::Dense:
      return read_dense(in);
    case OperatorFileKind::Spectrum:
      return inverse_fourier(read_spectrum(in));
    case OperatorFileKind::TruthTable:
      return phase_oracle(read_truth_table(in));
    default:
      throw std::invalid_argument("unresolved operator file kind");
  }
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::uint64_t h = 1469598103934665603ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qbool
