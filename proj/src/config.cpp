#include "lowaccess/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "lowaccess/errors.hpp"

namespace lowaccess {

namespace {

std::uint64_t initial_bound() {
    if (const char* env = std::getenv("LOWACCESS_ENUM_BOUND")) {
        try {
            const unsigned long long v = std::stoull(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
            // fall through to the default on a malformed value
        }
    }
    return std::uint64_t{1} << 24;
}

std::atomic<std::uint64_t>& bound_storage() {
    static std::atomic<std::uint64_t> bound{initial_bound()};
    return bound;
}

}  // namespace

std::uint64_t enumeration_bound() { return bound_storage().load(); }

void set_enumeration_bound(std::uint64_t bound) { bound_storage().store(bound); }

std::uint64_t checked_pow(unsigned base, std::size_t exponent) {
    const std::uint64_t limit = enumeration_bound();
    std::uint64_t value = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (value > limit / base) {
            throw CapacityError("enumeration of " + std::to_string(base) + "^" +
                                std::to_string(exponent) + " words exceeds the configured bound " +
                                std::to_string(limit));
        }
        value *= base;
    }
    if (value > limit) {
        throw CapacityError("enumeration of " + std::to_string(base) + "^" +
                            std::to_string(exponent) + " words exceeds the configured bound " +
                            std::to_string(limit));
    }
    return value;
}

}  // namespace lowaccess
