#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "lowaccess/fp_vector.hpp"

namespace lowaccess {

/// The subset of a code whose i-th coordinate equals z.
struct CoordinateSlice {
    std::size_t index;  // 0-based coordinate
    std::uint8_t value;
    std::vector<FpVector> members;
};

/// A (possibly nonlinear) code over F_p, stored as the canonically
/// sorted set of its codewords. Covering radius is computed by
/// exhaustive breadth-first search over F_p^m and cached; the cache may
/// also be seeded by constructions with a known radius.
class CoveringCode {
  public:
    CoveringCode(unsigned modulus, std::size_t length, std::vector<FpVector> codewords);

    static CoveringCode entire_space(unsigned modulus, std::size_t length);
    /// Enumerates the span of the generator rows (message vectors in
    /// lexicographic order), then canonically sorts.
    static CoveringCode from_generator(unsigned modulus, const std::vector<FpVector>& rows);

    unsigned modulus() const { return p_; }
    std::size_t length() const { return m_; }
    std::size_t size() const { return codewords_.size(); }
    const std::vector<FpVector>& codewords() const { return codewords_; }
    bool contains(const FpVector& word) const;

    /// max over v in F_p^m of min over codewords of d_H(v, c).
    /// Throws CapacityError when p^m exceeds the enumeration bound.
    std::size_t covering_radius() const;
    std::optional<std::size_t> cached_radius() const;

    CoordinateSlice slice(std::size_t coordinate, std::uint8_t value) const;

    /// N^(i) = max over v of the sum over z in F_p of d_H(v, C_z^(i)).
    /// Throws NormUndefinedError when some slice is empty.
    std::size_t norm(std::size_t coordinate) const;

    /// Coordinate i is acceptable when all slices C_z^(i) are nonempty
    /// and N^(i) <= (r+1)p - 1; the code is normal when some coordinate
    /// is acceptable.
    bool is_acceptable(std::size_t coordinate) const;
    bool is_normal() const;

    CoveringCode with_cached_radius(std::size_t radius) const;

    friend bool operator==(const CoveringCode& a, const CoveringCode& b) {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.codewords_ == b.codewords_;
    }

  private:
    unsigned p_;
    std::size_t m_;
    std::vector<FpVector> codewords_;  // sorted, distinct

    mutable std::atomic<std::int64_t> radius_cache_{-1};

  public:
    CoveringCode(const CoveringCode& other);
    CoveringCode& operator=(const CoveringCode& other);
    CoveringCode(CoveringCode&&) noexcept;
    CoveringCode& operator=(CoveringCode&&) noexcept;
};

/// Distances from every word of F_p^m to the nearest source word,
/// indexed by FpVector::to_index. Multi-source BFS on the Hamming graph.
std::vector<std::uint8_t> distances_to_set(unsigned modulus, std::size_t length,
                                           const std::vector<FpVector>& sources);

/// Glues U (last coordinate) and V (first coordinate) into the code
/// {(u, z, v) : (u, z) in U, (z, v) in V} of length m1 + m2 - 1.
/// Preconditions: the glue coordinates are acceptable and all their
/// slices nonempty. When the result is small enough to enumerate, its
/// covering radius is verified against r1 + r2 and cached; a violation
/// raises IntegrityError.
CoveringCode amalgamated_direct_sum(const CoveringCode& u, const CoveringCode& v);

}  // namespace lowaccess
