#include "lowaccess/fp_vector.hpp"

#include <stdexcept>

#include "lowaccess/errors.hpp"

namespace lowaccess {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

FpVector::FpVector(unsigned modulus, std::vector<std::uint8_t> entries)
    : p_(modulus), entries_(std::move(entries)) {
    if (!is_prime(p_) || p_ > 255) {
        throw DimensionError("field modulus must be a prime in [2, 255], got " +
                             std::to_string(p_));
    }
    for (std::uint8_t e : entries_) {
        if (e >= p_) {
            throw DimensionError("residue " + std::to_string(e) + " out of range for F_" +
                                 std::to_string(p_));
        }
    }
}

FpVector FpVector::zero(unsigned modulus, std::size_t length) {
    return FpVector(modulus, std::vector<std::uint8_t>(length, 0));
}

FpVector FpVector::parse(unsigned modulus, std::string_view digits) {
    std::vector<std::uint8_t> entries;
    entries.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw ParseError(std::string("invalid codeword digit '") + c + "'");
        }
        entries.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return FpVector(modulus, std::move(entries));
}

FpVector FpVector::from_index(unsigned modulus, std::size_t length, std::uint64_t index) {
    std::vector<std::uint8_t> entries(length);
    for (std::size_t j = 0; j < length; ++j) {
        entries[j] = static_cast<std::uint8_t>(index % modulus);
        index /= modulus;
    }
    return FpVector(modulus, std::move(entries));
}

FpVector FpVector::negated() const {
    std::vector<std::uint8_t> out(entries_.size());
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        out[j] = entries_[j] == 0 ? 0 : static_cast<std::uint8_t>(p_ - entries_[j]);
    }
    return FpVector(p_, std::move(out));
}

std::size_t FpVector::weight() const {
    std::size_t w = 0;
    for (std::uint8_t e : entries_) w += (e != 0);
    return w;
}

std::uint64_t FpVector::to_index() const {
    std::uint64_t idx = 0;
    for (std::size_t j = entries_.size(); j-- > 0;) {
        idx = idx * p_ + entries_[j];
    }
    return idx;
}

std::string FpVector::to_string() const {
    std::string s;
    s.reserve(entries_.size());
    for (std::uint8_t e : entries_) s.push_back(static_cast<char>('0' + e));
    return s;
}

std::size_t hamming_distance(const FpVector& u, const FpVector& v) {
    if (u.length() != v.length() || u.modulus() != v.modulus()) {
        throw DimensionError("hamming_distance requires equal lengths and moduli");
    }
    std::size_t d = 0;
    for (std::size_t j = 0; j < u.length(); ++j) d += (u[j] != v[j]);
    return d;
}

}  // namespace lowaccess
