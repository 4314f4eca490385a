#pragma once

#include <cstdint>

#include "lowaccess/errors.hpp"

namespace lowaccess {

/// The signed-integer embedding of F_p (p odd) into
/// A_p = {0, +-1, ..., +-(p-1)/2}: residues up to (p-1)/2 map to
/// themselves, larger residues r map to r - p. Field negation
/// corresponds to real negation under this map.
struct RRepresentation {
    unsigned p;

    static RRepresentation for_modulus(unsigned modulus) {
        if (modulus < 3 || modulus % 2 == 0) {
            throw DimensionError("the signed representation needs an odd modulus >= 3");
        }
        return RRepresentation{modulus};
    }

    int half() const { return static_cast<int>((p - 1) / 2); }

    int forward(std::uint8_t residue) const {
        const int r = static_cast<int>(residue);
        return r <= half() ? r : r - static_cast<int>(p);
    }

    std::uint8_t inverse(long long value) const {
        if (value < -half() || value > half()) {
            throw CoefficientRangeError("coefficient " + std::to_string(value) +
                                        " outside {0,..,+-" + std::to_string(half()) + "}");
        }
        return static_cast<std::uint8_t>(value >= 0 ? value : value + static_cast<long long>(p));
    }

    /// Residue of a real coefficient that must be an integer of A_p.
    std::uint8_t residue_of(double coefficient) const {
        const long long rounded = static_cast<long long>(coefficient >= 0
                                                             ? coefficient + 0.5
                                                             : coefficient - 0.5);
        if (static_cast<double>(rounded) != coefficient) {
            throw CoefficientRangeError("coefficient is not an integer of the signed range");
        }
        return inverse(rounded);
    }
};

}  // namespace lowaccess
