#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wafomlab/f2core.hpp"

namespace wafomlab {

/// Text serialization "wafom-net v1":
///
///     wafom-net v1
///     n=<n> S=<S> d=<d>
///     <d lines of S whitespace-separated n-character binary strings>
///
/// String T of a line spells b_{T,1} ... b_{T,n} left to right. LF line endings.
std::string format_net(const LinearNet& net);

/// Throws ParseError on malformed text and RankError when the basis has rank < d.
LinearNet parse_net(std::string_view text);

LinearNet read_net_file(const std::filesystem::path& path);
void write_net_file(const std::filesystem::path& path, const LinearNet& net);

/// n-character binary string for one row, most significant digit first.
std::string format_row(Row row, int digits);
Row parse_row(std::string_view text, int digits);

}  // namespace wafomlab
