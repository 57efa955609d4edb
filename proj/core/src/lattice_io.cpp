#include "latc/lattice_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "latc/errors.hpp"

namespace latc {
namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::size_t parse_count(const std::string& token, const std::string& key) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw ParseError("expected '" + prefix + "<int>', got '" + token + "'");
  }
  const std::string digits = token.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("malformed count '" + token + "'");
  }
  return std::stoul(digits);
}

RationalMatrix read_rows(std::istream& in, std::size_t rows, std::size_t cols,
                         const char* what) {
  RationalMatrix m(rows, cols);
  std::string line;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!next_content_line(in, line)) {
      throw ParseError(std::string("truncated ") + what + " block");
    }
    RatVector r = parse_rational_row(line);
    if (r.size() != cols) {
      throw ParseError(std::string(what) + " row " + std::to_string(i + 1) + " has " +
                       std::to_string(r.size()) + " entries, expected " +
                       std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = r[j];
  }
  return m;
}

}  // namespace

RatVector parse_rational_row(const std::string& line) {
  std::istringstream ss(line);
  RatVector out;
  std::string tok;
  while (ss >> tok) out.push_back(parse_rational(tok));
  return out;
}

std::string format_row(std::span<const Rational> row) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ' ';
    s += to_string(row[i]);
  }
  return s;
}

std::string format_row(std::span<const Integer> row) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ' ';
    s += row[i].get_str();
  }
  return s;
}

Lattice read_latgram(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw ParseError("empty latgram input");
  std::istringstream header(line);
  std::string magic, version, ntok, extra;
  header >> magic >> version >> ntok;
  if (magic != "latgram" || version != "1") {
    throw ParseError("not a 'latgram 1' file");
  }
  if (header >> extra) throw ParseError("trailing tokens in latgram header");
  const std::size_t n = parse_count(ntok, "n");
  if (n == 0) throw ParseError("latgram rank must be positive");
  RationalMatrix gram = read_rows(in, n, n, "gram");

  std::optional<RationalMatrix> ambient;
  if (next_content_line(in, line)) {
    std::istringstream sec(line);
    std::string key, dtok;
    sec >> key >> dtok;
    if (key != "ambient") throw ParseError("unexpected content after Gram block");
    const std::size_t d = parse_count(dtok, "d");
    ambient = read_rows(in, d, n, "ambient");
    if (next_content_line(in, line)) throw ParseError("trailing content in latgram");
  }
  try {
    return Lattice(std::move(gram), std::move(ambient));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

void write_latgram(std::ostream& out, const Lattice& l) {
  const std::size_t n = l.rank();
  out << "latgram 1 n=" << n << '\n';
  for (std::size_t i = 0; i < n; ++i) out << format_row(l.gram().row(i)) << '\n';
  if (const auto& amb = l.ambient_basis()) {
    out << "ambient d=" << amb->rows() << '\n';
    for (std::size_t i = 0; i < amb->rows(); ++i) out << format_row(amb->row(i)) << '\n';
  }
}

Lattice load_latgram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_latgram(in);
}

void save_latgram(const std::string& path, const Lattice& l) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_latgram(out, l);
}

}  // namespace latc
