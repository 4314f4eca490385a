#include "lowaccess/covering_code.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lowaccess/config.hpp"
#include "lowaccess/errors.hpp"

namespace lowaccess {

namespace {

constexpr std::uint8_t kUnreached = std::numeric_limits<std::uint8_t>::max();

void check_word(const FpVector& w, unsigned p, std::size_t m) {
    if (w.modulus() != p || w.length() != m) {
        throw DimensionError("codeword does not match the code's modulus/length");
    }
}

}  // namespace

CoveringCode::CoveringCode(unsigned modulus, std::size_t length, std::vector<FpVector> codewords)
    : p_(modulus), m_(length), codewords_(std::move(codewords)) {
    if (!is_prime(p_)) {
        throw DimensionError("code modulus must be prime, got " + std::to_string(p_));
    }
    if (m_ == 0) throw DimensionError("code length must be positive");
    if (codewords_.empty()) throw DimensionError("a code must contain at least one codeword");
    for (const FpVector& w : codewords_) check_word(w, p_, m_);
    std::sort(codewords_.begin(), codewords_.end());
    codewords_.erase(std::unique(codewords_.begin(), codewords_.end()), codewords_.end());
}

CoveringCode::CoveringCode(const CoveringCode& other)
    : p_(other.p_), m_(other.m_), codewords_(other.codewords_) {
    radius_cache_.store(other.radius_cache_.load());
}

CoveringCode& CoveringCode::operator=(const CoveringCode& other) {
    if (this != &other) {
        p_ = other.p_;
        m_ = other.m_;
        codewords_ = other.codewords_;
        radius_cache_.store(other.radius_cache_.load());
    }
    return *this;
}

CoveringCode::CoveringCode(CoveringCode&& other) noexcept
    : p_(other.p_), m_(other.m_), codewords_(std::move(other.codewords_)) {
    radius_cache_.store(other.radius_cache_.load());
}

CoveringCode& CoveringCode::operator=(CoveringCode&& other) noexcept {
    p_ = other.p_;
    m_ = other.m_;
    codewords_ = std::move(other.codewords_);
    radius_cache_.store(other.radius_cache_.load());
    return *this;
}

CoveringCode CoveringCode::entire_space(unsigned modulus, std::size_t length) {
    const std::uint64_t total = checked_pow(modulus, length);
    std::vector<FpVector> words;
    words.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        words.push_back(FpVector::from_index(modulus, length, idx));
    }
    CoveringCode code(modulus, length, std::move(words));
    code.radius_cache_.store(0);
    return code;
}

CoveringCode CoveringCode::from_generator(unsigned modulus, const std::vector<FpVector>& rows) {
    if (rows.empty()) throw DimensionError("generator matrix needs at least one row");
    const std::size_t m = rows[0].length();
    for (const FpVector& r : rows) check_word(r, modulus, m);
    const std::uint64_t messages = checked_pow(modulus, rows.size());
    std::vector<FpVector> words;
    words.reserve(messages);
    for (std::uint64_t msg = 0; msg < messages; ++msg) {
        std::vector<std::uint8_t> entries(m, 0);
        std::uint64_t rest = msg;
        for (const FpVector& row : rows) {
            const unsigned coeff = static_cast<unsigned>(rest % modulus);
            rest /= modulus;
            if (coeff == 0) continue;
            for (std::size_t j = 0; j < m; ++j) {
                entries[j] = static_cast<std::uint8_t>((entries[j] + coeff * row[j]) % modulus);
            }
        }
        words.emplace_back(modulus, std::move(entries));
    }
    return CoveringCode(modulus, m, std::move(words));
}

bool CoveringCode::contains(const FpVector& word) const {
    return std::binary_search(codewords_.begin(), codewords_.end(), word);
}

std::vector<std::uint8_t> distances_to_set(unsigned modulus, std::size_t length,
                                           const std::vector<FpVector>& sources) {
    const std::uint64_t total = checked_pow(modulus, length);
    std::vector<std::uint8_t> dist(total, kUnreached);

    std::vector<std::uint64_t> powers(length);
    std::uint64_t pw = 1;
    for (std::size_t j = 0; j < length; ++j) {
        powers[j] = pw;
        pw *= modulus;
    }

    std::vector<std::uint32_t> frontier;
    frontier.reserve(sources.size());
    for (const FpVector& s : sources) {
        if (s.modulus() != modulus || s.length() != length) {
            throw DimensionError("source word does not match the enumeration space");
        }
        const std::uint64_t idx = s.to_index();
        if (dist[idx] != 0) {
            dist[idx] = 0;
            frontier.push_back(static_cast<std::uint32_t>(idx));
        }
    }

    std::vector<std::uint32_t> next;
    std::uint8_t level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (std::uint32_t idx : frontier) {
            std::uint64_t rest = idx;
            for (std::size_t j = 0; j < length; ++j) {
                const unsigned digit = static_cast<unsigned>(rest % modulus);
                rest /= modulus;
                const std::uint64_t base = idx - digit * powers[j];
                for (unsigned d = 0; d < modulus; ++d) {
                    if (d == digit) continue;
                    const std::uint64_t nb = base + d * powers[j];
                    if (dist[nb] == kUnreached) {
                        dist[nb] = level;
                        next.push_back(static_cast<std::uint32_t>(nb));
                    }
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

std::size_t CoveringCode::covering_radius() const {
    const std::int64_t cached = radius_cache_.load();
    if (cached >= 0) return static_cast<std::size_t>(cached);

    const std::vector<std::uint8_t> dist = distances_to_set(p_, m_, codewords_);
    std::uint8_t radius = 0;
    for (std::uint8_t d : dist) radius = std::max(radius, d);
    radius_cache_.store(radius);
    return radius;
}

std::optional<std::size_t> CoveringCode::cached_radius() const {
    const std::int64_t cached = radius_cache_.load();
    if (cached < 0) return std::nullopt;
    return static_cast<std::size_t>(cached);
}

CoveringCode CoveringCode::with_cached_radius(std::size_t radius) const {
    CoveringCode copy(*this);
    copy.radius_cache_.store(static_cast<std::int64_t>(radius));
    return copy;
}

CoordinateSlice CoveringCode::slice(std::size_t coordinate, std::uint8_t value) const {
    if (coordinate >= m_) throw DimensionError("slice coordinate out of range");
    if (value >= p_) throw DimensionError("slice value out of range");
    CoordinateSlice s{coordinate, value, {}};
    for (const FpVector& w : codewords_) {
        if (w[coordinate] == value) s.members.push_back(w);
    }
    return s;
}

std::size_t CoveringCode::norm(std::size_t coordinate) const {
    if (coordinate >= m_) throw DimensionError("norm coordinate out of range");
    const std::uint64_t total = checked_pow(p_, m_);

    std::vector<std::uint16_t> sums(total, 0);
    for (unsigned z = 0; z < p_; ++z) {
        const CoordinateSlice s = slice(coordinate, static_cast<std::uint8_t>(z));
        if (s.members.empty()) {
            throw NormUndefinedError("norm undefined: empty slice at coordinate " +
                                     std::to_string(coordinate + 1) + ", value " +
                                     std::to_string(z));
        }
        const std::vector<std::uint8_t> dist = distances_to_set(p_, m_, s.members);
        for (std::uint64_t idx = 0; idx < total; ++idx) sums[idx] += dist[idx];
    }
    std::uint16_t best = 0;
    for (std::uint16_t s : sums) best = std::max(best, s);
    return best;
}

bool CoveringCode::is_acceptable(std::size_t coordinate) const {
    for (unsigned z = 0; z < p_; ++z) {
        if (slice(coordinate, static_cast<std::uint8_t>(z)).members.empty()) return false;
    }
    const std::size_t r = covering_radius();
    return norm(coordinate) <= (r + 1) * p_ - 1;
}

bool CoveringCode::is_normal() const {
    for (std::size_t i = 0; i < m_; ++i) {
        if (is_acceptable(i)) return true;
    }
    return false;
}

CoveringCode amalgamated_direct_sum(const CoveringCode& u, const CoveringCode& v) {
    if (u.modulus() != v.modulus()) {
        throw AmalgamationError("amalgamated direct sum requires a common field");
    }
    const unsigned p = u.modulus();
    const std::size_t m1 = u.length();
    const std::size_t m2 = v.length();

    if (!u.is_acceptable(m1 - 1)) {
        throw AmalgamationError("last coordinate of the left code is not acceptable");
    }
    if (!v.is_acceptable(0)) {
        throw AmalgamationError("first coordinate of the right code is not acceptable");
    }

    std::vector<FpVector> words;
    for (unsigned z = 0; z < p; ++z) {
        const CoordinateSlice us = u.slice(m1 - 1, static_cast<std::uint8_t>(z));
        const CoordinateSlice vs = v.slice(0, static_cast<std::uint8_t>(z));
        for (const FpVector& uw : us.members) {
            for (const FpVector& vw : vs.members) {
                std::vector<std::uint8_t> entries;
                entries.reserve(m1 + m2 - 1);
                entries.insert(entries.end(), uw.entries().begin(), uw.entries().end());
                entries.insert(entries.end(), vw.entries().begin() + 1, vw.entries().end());
                words.emplace_back(p, std::move(entries));
            }
        }
    }
    CoveringCode result(p, m1 + m2 - 1, std::move(words));

    // Verify the additive radius bound whenever the glued space is
    // enumerable; a violation is a hard failure, never silently kept.
    const std::size_t bound = u.covering_radius() + v.covering_radius();
    try {
        const std::size_t measured = result.covering_radius();
        if (measured > bound) {
            throw IntegrityError("amalgamated direct sum radius " + std::to_string(measured) +
                                 " exceeds the additive bound " + std::to_string(bound));
        }
    } catch (const CapacityError&) {
        // Radius left uncached; callers hit the capacity error themselves.
    }
    return result;
}

}  // namespace lowaccess
