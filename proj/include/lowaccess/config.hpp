#pragma once

#include <cstddef>
#include <cstdint>

namespace lowaccess {

/// Cap on the number of words enumerated by covering-radius, norm and
/// sumset computations. Defaults to 2^24; the LOWACCESS_ENUM_BOUND
/// environment variable overrides it at process start.
std::uint64_t enumeration_bound();

/// Replaces the bound for the current process (tests, CLI flag).
void set_enumeration_bound(std::uint64_t bound);

/// p^m if it fits the bound, throws CapacityError otherwise.
std::uint64_t checked_pow(unsigned base, std::size_t exponent);

}  // namespace lowaccess
