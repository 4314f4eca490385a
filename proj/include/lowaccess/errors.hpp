#pragma once

#include <stdexcept>
#include <string>

namespace lowaccess {

/// Mismatched vector lengths or moduli, or empty data.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An enumeration (p^m words, p^theta sums) exceeds the configured bound.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Norm requested for a coordinate with an empty slice.
struct NormUndefinedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Amalgamated direct sum preconditions (acceptability, nonempty slices) violated.
struct AmalgamationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Unknown catalog construction name or invalid parameter.
struct CatalogError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A query coefficient lies outside the expected coefficient set.
struct CoefficientRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A plan was executed against storage it was not produced for, or a
/// verified bound failed on a concrete instance.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A coefficient cannot be expressed in the given sumset decomposition.
struct DecompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed code file or malformed set/number literal.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lowaccess
