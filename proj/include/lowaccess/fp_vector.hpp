#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lowaccess {

bool is_prime(unsigned n);

/// A vector over the prime field F_p, entries stored as residues in
/// [0, p-1]. Value type; comparisons are lexicographic on the residue
/// sequence so sorted codeword lists are canonical.
class FpVector {
  public:
    FpVector(unsigned modulus, std::vector<std::uint8_t> entries);

    static FpVector zero(unsigned modulus, std::size_t length);
    /// One digit per coordinate, e.g. "1012" over F_3.
    static FpVector parse(unsigned modulus, std::string_view digits);
    /// Inverse of to_index: index = sum entries[j] * p^j.
    static FpVector from_index(unsigned modulus, std::size_t length, std::uint64_t index);

    unsigned modulus() const { return p_; }
    std::size_t length() const { return entries_.size(); }
    std::uint8_t operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::uint8_t>& entries() const { return entries_; }

    /// Entrywise x -> (p - x) mod p.
    FpVector negated() const;
    /// Number of nonzero coordinates.
    std::size_t weight() const;
    std::uint64_t to_index() const;
    std::string to_string() const;

    friend bool operator==(const FpVector&, const FpVector&) = default;
    friend std::strong_ordering operator<=>(const FpVector&, const FpVector&) = default;

  private:
    unsigned p_;
    std::vector<std::uint8_t> entries_;
};

/// Number of coordinates where u and v differ; throws DimensionError on
/// length or modulus mismatch.
std::size_t hamming_distance(const FpVector& u, const FpVector& v);

}  // namespace lowaccess
