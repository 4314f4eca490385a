#pragma once

#include <cstdint>
#include <vector>

#include "lowaccess/covering_code.hpp"

namespace lowaccess {

/// How one codeword of the parent is recovered from the reduced set:
/// either sign * kept[kept_index] equals the codeword, or the codeword
/// has Hamming weight <= 1 and needs no stored combination.
struct RepresentativeRecord {
    enum class Kind : std::uint8_t { kept, low_weight };
    Kind kind;
    std::size_t kept_index = 0;  // valid when kind == kept
    int sign = +1;               // +1 or -1, valid when kind == kept
};

/// The sign-reduced code: parent minus all weight-<=1 codewords, keeping
/// exactly one representative of every {c, -c} pair. The representative
/// is the vector whose first nonzero residue lies in {1..(p-1)/2}, which
/// makes the choice deterministic; when only one of the pair belongs to
/// the parent, that one is kept as-is.
class ReducedCode {
  public:
    ReducedCode(CoveringCode parent, std::vector<FpVector> kept,
                std::vector<RepresentativeRecord> map);

    const CoveringCode& parent() const { return parent_; }
    const std::vector<FpVector>& kept() const { return kept_; }
    std::size_t kept_size() const { return kept_.size(); }
    /// Record for parent().codewords()[codeword_index].
    const RepresentativeRecord& representative(std::size_t codeword_index) const;

  private:
    CoveringCode parent_;
    std::vector<FpVector> kept_;                  // canonical order
    std::vector<RepresentativeRecord> map_;       // parallel to parent codewords
};

/// Builds the reduction for an odd-characteristic code; p = 2 is
/// unsupported (the binary schemes use the complement-pair subset
/// instead, see protocols.hpp).
ReducedCode reduce_code(const CoveringCode& code);

}  // namespace lowaccess
