#include "wafomlab/net_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "wafomlab/errors.hpp"

namespace wafomlab {

namespace {

constexpr std::string_view kMagic = "wafom-net v1";

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    if (eol == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, eol));
    text.remove_prefix(eol + 1);
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int parse_field(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    throw ParseError("expected '" + std::string(key) + "=<int>', got '" + std::string(token) + "'");
  }
  const auto digits = token.substr(key.size() + 1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("invalid integer in '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string format_row(Row row, int digits) {
  std::string s(static_cast<std::size_t>(digits), '0');
  for (int j = 1; j <= digits; ++j) {
    if ((row >> (digits - j)) & 1U) s[static_cast<std::size_t>(j - 1)] = '1';
  }
  return s;
}

Row parse_row(std::string_view text, int digits) {
  if (static_cast<int>(text.size()) != digits) {
    throw ParseError("expected " + std::to_string(digits) + " binary digits, got '" +
                     std::string(text) + "'");
  }
  Row r = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("non-binary character in '" + std::string(text) + "'");
    }
    r = (r << 1) | static_cast<Row>(c == '1');
  }
  return r;
}

std::string format_net(const LinearNet& net) {
  std::ostringstream out;
  out << kMagic << '\n';
  out << "n=" << net.digits() << " S=" << net.dimensions() << " d=" << net.dim() << '\n';
  for (const NetPoint& b : net.basis()) {
    for (int t = 0; t < b.dimensions(); ++t) {
      if (t > 0) out << ' ';
      out << format_row(b.row(t), b.digits());
    }
    out << '\n';
  }
  return out.str();
}

LinearNet parse_net(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != kMagic) {
    throw ParseError("missing 'wafom-net v1' header");
  }
  if (lines.size() < 2) {
    throw ParseError("missing 'n= S= d=' line");
  }
  const auto fields = split_ws(lines[1]);
  if (fields.size() != 3) {
    throw ParseError("second line must be 'n=<n> S=<S> d=<d>'");
  }
  const int n = parse_field(fields[0], "n");
  const int dims = parse_field(fields[1], "S");
  const int d = parse_field(fields[2], "d");
  if (n < 1 || n > kMaxDigits || dims < 1 || d < 0) {
    throw ParseError("n, S, d out of range");
  }
  if (d > n * dims) {
    throw ParseError("d exceeds n*S");
  }
  if (static_cast<int>(lines.size()) - 2 != d) {
    throw ParseError("expected " + std::to_string(d) + " basis lines, found " +
                     std::to_string(lines.size() - 2));
  }
  std::vector<NetPoint> basis;
  basis.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const auto tokens = split_ws(lines[static_cast<std::size_t>(i) + 2]);
    if (static_cast<int>(tokens.size()) != dims) {
      throw ParseError("basis line " + std::to_string(i + 1) + " must hold " +
                       std::to_string(dims) + " rows");
    }
    std::vector<Row> rows;
    rows.reserve(tokens.size());
    for (auto tok : tokens) rows.push_back(parse_row(tok, n));
    basis.push_back(NetPoint::from_rows(n, std::move(rows)));
  }
  return {n, dims, std::move(basis)};
}

LinearNet read_net_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open net file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_net(buf.str());
}

void write_net_file(const std::filesystem::path& path, const LinearNet& net) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write net file " + path.string());
  }
  out << format_net(net);
}

}  // namespace wafomlab
