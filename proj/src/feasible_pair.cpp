#include "lowaccess/feasible_pair.hpp"

#include <stdexcept>

namespace lowaccess {

namespace {

FeasiblePair make_pair(std::size_t m, std::size_t columns, std::size_t radius,
                       std::string source) {
    FeasiblePair pair{
        Rational(static_cast<long long>(m + columns), static_cast<long long>(m)),
        Rational(static_cast<long long>(radius + 1), static_cast<long long>(m)),
        std::move(source)};
    if (pair.alpha < Rational(1) || pair.beta <= Rational(0) || pair.beta > Rational(1)) {
        throw std::domain_error("feasible pair out of range: alpha=" + pair.alpha.to_string() +
                                " beta=" + pair.beta.to_string());
    }
    return pair;
}

}  // namespace

FeasiblePair feasible_pair(const CoveringCode& code, Scheme scheme) {
    if (scheme == Scheme::generic) {
        return make_pair(code.length(), code.size(), code.covering_radius(), "Thm1");
    }
    return feasible_pair(reduce_code(code));
}

FeasiblePair feasible_pair(const ReducedCode& reduced) {
    const CoveringCode& code = reduced.parent();
    return make_pair(code.length(), reduced.kept_size(), code.covering_radius(), "Thm2/Cor1");
}

}  // namespace lowaccess
