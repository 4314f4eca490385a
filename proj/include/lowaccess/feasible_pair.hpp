#pragma once

#include <string>

#include "lowaccess/covering_code.hpp"
#include "lowaccess/rational.hpp"
#include "lowaccess/reduced_code.hpp"

namespace lowaccess {

/// A point on the access-redundancy tradeoff: alpha = redundancy ratio
/// n/k >= 1, beta = access ratio l/k in (0, 1]. Exact fractions.
struct FeasiblePair {
    Rational alpha;
    Rational beta;
    std::string source;
};

enum class Scheme {
    generic,  // all |C| combinations stored: ((m+|C|)/m, (r+1)/m)
    reduced,  // sign-reduced columns:        ((m+|C~|)/m, (r+1)/m)
};

FeasiblePair feasible_pair(const CoveringCode& code, Scheme scheme);
FeasiblePair feasible_pair(const ReducedCode& reduced);

}  // namespace lowaccess
