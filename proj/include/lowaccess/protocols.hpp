#pragma once

#include <span>

#include "lowaccess/access_plan.hpp"
#include "lowaccess/covering_code.hpp"
#include "lowaccess/rational.hpp"

namespace lowaccess {

/// A p-term arithmetic progression of query coefficients, ascending.
struct CoefficientProgression {
    Rational start;
    Rational step;  // > 0
    unsigned count;

    Rational element(std::size_t i) const { return start + Rational(static_cast<long long>(i)) * step; }
};

/// Baseline scheme storing one combination per codeword, with the
/// coefficient alphabet applied in residue order (residue z maps to
/// alphabet[z]). Encodes x, answers w, returns the value and the
/// distinct nodes accessed.
QueryOutcome generic_protocol(std::span<const double> w, std::span<const double> x,
                              const CoveringCode& code, std::span<const double> alphabet);

/// Evaluates a query with coefficients in an arbitrary size-p
/// progression against centered-coefficient storage: the query is
/// shifted into {0,..,+-(p-1)/2}, answered there, and rescaled using
/// the aggregate node. Costs the base access plus at most one node.
QueryOutcome shift_protocol(std::span<const Rational> w, const StorageSystem& storage,
                            const ReducedCode& reduced, const CoefficientProgression& coefficients);

/// The reverse direction: evaluates a centered query by mapping it into
/// the given progression, running the progression protocol, and
/// unshifting. Exercises the same storage and aggregate node.
QueryOutcome shift_protocol_inverse(std::span<const double> w, const StorageSystem& storage,
                                    const ReducedCode& reduced,
                                    const CoefficientProgression& coefficients);

enum class BinaryVariant {
    zero_one,  // alphabet {0, 1}, all codewords stored
    pm_one,    // alphabet {+1, -1}, one of each complement pair stored
};

/// Binary covering-code schemes. For pm_one the stored subset keeps
/// exactly one of {c, c + all-ones} (complement equals negation in the
/// +-1 alphabet); a nearest codeword outside the subset is served by
/// negating its complement's node.
QueryOutcome binary_baseline(std::span<const double> w, std::span<const double> x,
                             const CoveringCode& code, BinaryVariant variant);

/// The pm_one stored subset, exposed for inspection and tests.
std::vector<FpVector> complement_pair_subset(const CoveringCode& code);

}  // namespace lowaccess
