#include "latc/certificate_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "latc/lattice_io.hpp"

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

std::string expect_line(std::istream& in, const char* what) {
  std::string line;
  if (!next_content_line(in, line)) throw ParseError(std::string("missing ") + what);
  return line;
}

IntVector parse_integer_row(const std::string& text) {
  std::istringstream ss(text);
  IntVector out;
  std::string tok;
  while (ss >> tok) {
    Rational r = parse_rational(tok);
    if (r.get_den() != 1) throw ParseError("expected an integer, got '" + tok + "'");
    out.push_back(r.get_num());
  }
  return out;
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

}  // namespace

CompactnessCertificate read_latcert(std::istream& in) {
  std::istringstream head(expect_line(in, "header"));
  std::string magic, version, ntok;
  head >> magic >> version >> ntok;
  if (magic != "latcert" || version != "1") throw ParseError("not a latcert 1 file");
  const std::size_t n = parse_count(ntok, "n");
  if (n == 0) throw ParseError("rank must be positive");

  CompactnessCertificate cert;
  {
    std::istringstream ss(expect_line(in, "kind"));
    std::string key, value;
    ss >> key >> value;
    if (key != "kind") throw ParseError("expected 'kind'");
    if (value == "strict") cert.kind = RelevantKind::Strict;
    else if (value == "weak") cert.kind = RelevantKind::Weak;
    else throw ParseError("unknown kind '" + value + "'");
  }
  {
    std::istringstream ss(expect_line(in, "width"));
    std::string key;
    long w = -1;
    ss >> key >> w;
    if (key != "width" || !ss || w < 0) throw ParseError("malformed width line");
    cert.width = w;
  }
  if (expect_line(in, "transform").find("transform") != 0) throw ParseError("expected 'transform'");
  cert.transform = IntegerMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector r = parse_integer_row(expect_line(in, "transform row"));
    if (r.size() != n) throw ParseError("transform row has the wrong length");
    for (std::size_t j = 0; j < n; ++j) cert.transform(i, j) = r[j];
  }
  std::size_t m = 0;
  {
    std::istringstream ss(expect_line(in, "witnesses"));
    std::string key, mtok;
    ss >> key >> mtok;
    if (key != "witnesses") throw ParseError("expected 'witnesses'");
    m = parse_count(mtok, "m");
  }
  for (std::size_t k = 0; k < m; ++k) {
    std::string line = expect_line(in, "witness line");
    auto bar = line.find('|');
    if (line.rfind("w ", 0) != 0 || bar == std::string::npos) {
      throw ParseError("malformed witness line");
    }
    IntVector target = parse_integer_row(line.substr(2, bar - 2));
    IntVector witness = parse_integer_row(line.substr(bar + 1));
    if (target.size() != n || witness.size() != n) {
      throw ParseError("witness line has the wrong length");
    }
    cert.targets.push_back(std::move(target));
    cert.witnesses.push_back(std::move(witness));
  }
  std::string extra;
  if (next_content_line(in, extra)) throw ParseError("trailing content after witnesses");
  return cert;
}

void write_latcert(std::ostream& out, const CompactnessCertificate& cert) {
  const std::size_t n = cert.transform.rows();
  out << "latcert 1 n=" << n << '\n';
  out << "kind " << kind_name(cert.kind) << '\n';
  out << "width " << cert.width << '\n';
  out << "transform\n";
  for (std::size_t i = 0; i < n; ++i) out << format_row(cert.transform.row(i)) << '\n';
  out << "witnesses m=" << cert.targets.size() << '\n';
  for (std::size_t k = 0; k < cert.targets.size(); ++k) {
    out << "w " << format_row(cert.targets[k]) << " | " << format_row(cert.witnesses[k])
        << '\n';
  }
}

CompactnessCertificate load_latcert(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_latcert(in);
}

void save_latcert(const std::string& path, const CompactnessCertificate& cert) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  write_latcert(out, cert);
}

IntegerMatrix read_integer_matrix(std::istream& in) {
  std::vector<IntVector> rows;
  std::string line;
  while (next_content_line(in, line)) rows.push_back(parse_integer_row(line));
  if (rows.empty()) throw ParseError("empty matrix");
  const std::size_t n = rows.size();
  for (const IntVector& r : rows) {
    if (r.size() != n) throw ParseError("matrix must be square");
  }
  return IntegerMatrix::from_rows(rows, n);
}

IntegerMatrix load_integer_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_integer_matrix(in);
}

}  // namespace latc
