#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "wafomlab/f2core.hpp"

namespace wafomlab {

/// One row of a direction-number table in the `d s a m_1 m_2 ...` layout.
struct DirectionEntry {
  int dimension = 0;
  int degree = 0;               // s
  std::uint32_t coefficients = 0;  // a: interior coefficients of the primitive polynomial
  std::vector<std::uint32_t> initial;  // m_1 .. m_s
};

/// Parses a direction-number table. A leading header line starting with 'd' is skipped.
std::vector<DirectionEntry> parse_direction_numbers(std::string_view text);

/// The table compiled into the library (dimensions 2 and up; dimension 1 is implicit).
std::string_view embedded_direction_table();

/// Largest Sobol dimension available from the embedded table.
int sobol_max_dimension();

inline constexpr int kSobolMaxBits = 32;

/// Direction numbers v_1..v_32 of a 1-based Sobol dimension as 32-bit words, most
/// significant bit first.
std::vector<std::uint32_t> sobol_direction_vectors(int dimension);

/// The first 2^d Sobol points as an F_2-linear net with n digits. Basis vector k
/// is the point with index 2^k. `dimension_order` selects which Sobol dimensions
/// (1-based) feed coordinates 1..S; empty means 1..S.
LinearNet sobol_net(int d, int dimensions, int digits = 30, std::span<const int> dimension_order = {});

}  // namespace wafomlab
