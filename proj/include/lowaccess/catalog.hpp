#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lowaccess/covering_code.hpp"

namespace lowaccess {

/// Explicit ternary constructions:
///   entire_space(i)   all of F_3^i
///   repetition(i)     span{1^i} in F_3^i
///   hamming_3         the [4,2]_3 Hamming code
///   expanded_hamming  the length-5 extension with an appended free coordinate
///   amalgam(i)        expanded_hamming glued onto repetition(i)
/// Names are stable CLI identifiers. Throws CatalogError for unknown
/// names or missing/invalid parameters.
CoveringCode catalog_code(const std::string& name, std::optional<unsigned> index = std::nullopt);

std::vector<std::string> catalog_names();
bool catalog_needs_index(const std::string& name);

}  // namespace lowaccess
