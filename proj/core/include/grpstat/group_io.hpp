#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "grpstat/perm_group.hpp"

namespace grpstat {

/// Text group format:
///
///   degree <t>
///   (0 1 2)(3 4)        # cycle notation
///   [1,2,0,4,3]         # image list
///
/// Blank lines and `#` comments are ignored. Throws ParseError on bad input.
PermGroup parse_group(std::string_view text);
PermGroup read_group_file(const std::string& path);

/// Parses a single generator line of either notation.
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// Writes `degree <t>` followed by one cycle-notation line per generator.
void write_group(std::ostream& out, const PermGroup& group);
std::string format_group(const PermGroup& group);

}  // namespace grpstat
