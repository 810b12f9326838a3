#include "wafomlab/sobol.hpp"

#include <sstream>
#include <string>

#include "wafomlab/errors.hpp"

namespace wafomlab {

std::vector<DirectionEntry> parse_direction_numbers(std::string_view text) {
  std::vector<DirectionEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line_no == 1 && line[first] == 'd') continue;  // column header
    std::istringstream fields(line);
    DirectionEntry e;
    long long a = 0;
    if (!(fields >> e.dimension >> e.degree >> a) || e.degree < 1 || a < 0) {
      throw ParseError("direction table line " + std::to_string(line_no) + " is malformed");
    }
    e.coefficients = static_cast<std::uint32_t>(a);
    for (int i = 0; i < e.degree; ++i) {
      long long m = 0;
      if (!(fields >> m) || m <= 0 || m % 2 == 0 || m >= (1LL << (i + 1))) {
        throw ParseError("direction table line " + std::to_string(line_no) +
                         ": m_i must be odd and below 2^i");
      }
      e.initial.push_back(static_cast<std::uint32_t>(m));
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

namespace {

const std::vector<DirectionEntry>& embedded_entries() {
  static const std::vector<DirectionEntry> entries = parse_direction_numbers(embedded_direction_table());
  return entries;
}

}  // namespace

int sobol_max_dimension() { return static_cast<int>(embedded_entries().size()) + 1; }

std::vector<std::uint32_t> sobol_direction_vectors(int dimension) {
  if (dimension < 1 || dimension > sobol_max_dimension()) {
    throw DimensionError("Sobol dimension " + std::to_string(dimension) + " outside embedded table (1.." +
                         std::to_string(sobol_max_dimension()) + ")");
  }
  std::vector<std::uint32_t> v(kSobolMaxBits);
  if (dimension == 1) {
    for (int k = 0; k < kSobolMaxBits; ++k) v[static_cast<std::size_t>(k)] = 1U << (31 - k);
    return v;
  }
  const DirectionEntry& e = embedded_entries()[static_cast<std::size_t>(dimension - 2)];
  const int s = e.degree;
  for (int k = 0; k < kSobolMaxBits; ++k) {
    if (k < s) {
      v[static_cast<std::size_t>(k)] = e.initial[static_cast<std::size_t>(k)] << (31 - k);
      continue;
    }
    std::uint32_t x = v[static_cast<std::size_t>(k - s)];
    x ^= x >> s;
    for (int i = 1; i < s; ++i) {
      if ((e.coefficients >> (s - 1 - i)) & 1U) x ^= v[static_cast<std::size_t>(k - i)];
    }
    v[static_cast<std::size_t>(k)] = x;
  }
  return v;
}

LinearNet sobol_net(int d, int dimensions, int digits, std::span<const int> dimension_order) {
  if (d < 0 || d > kSobolMaxBits || d > digits) {
    throw DimensionError("sobol_net needs 0 <= d <= min(n, 32)");
  }
  if (digits < 1 || digits > kMaxDigits || dimensions < 1) {
    throw DimensionError("sobol_net shape out of range");
  }
  if (!dimension_order.empty() && static_cast<int>(dimension_order.size()) != dimensions) {
    throw DimensionError("dimension order must list S Sobol dimensions");
  }
  std::vector<std::vector<std::uint32_t>> directions;
  for (int t = 0; t < dimensions; ++t) {
    const int which = dimension_order.empty() ? t + 1 : dimension_order[static_cast<std::size_t>(t)];
    directions.push_back(sobol_direction_vectors(which));
  }
  std::vector<NetPoint> basis;
  for (int k = 0; k < d; ++k) {
    std::vector<Row> rows;
    for (const auto& v : directions) {
      const Row word = v[static_cast<std::size_t>(k)];
      rows.push_back(digits >= kSobolMaxBits ? word << (digits - kSobolMaxBits)
                                             : word >> (kSobolMaxBits - digits));
    }
    basis.push_back(NetPoint::from_rows(digits, std::move(rows)));
  }
  return {digits, dimensions, std::move(basis)};
}

}  // namespace wafomlab
