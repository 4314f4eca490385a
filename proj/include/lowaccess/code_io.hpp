#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "lowaccess/covering_code.hpp"

namespace lowaccess {

/// Text format: first non-comment line is "p m", then one codeword per
/// line as m digits in {0..p-1} with no separators. Lines starting with
/// '#' are comments. Serialization emits the canonical form (sorted
/// codewords), so parse -> serialize is bit-exact on canonical input.
CoveringCode parse_code(std::istream& in);
CoveringCode parse_code(std::string_view text);
CoveringCode load_code_file(const std::string& path);

std::string serialize_code(const CoveringCode& code);

}  // namespace lowaccess
