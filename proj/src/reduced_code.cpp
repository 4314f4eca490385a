#include "lowaccess/reduced_code.hpp"

#include <algorithm>
#include <stdexcept>

#include "lowaccess/errors.hpp"

namespace lowaccess {

namespace {

// True when the first nonzero residue is in {1..(p-1)/2}; of a pair
// {c, -c} with weight >= 1, exactly one vector satisfies this.
bool is_canonical_sign(const FpVector& w) {
    const unsigned half = (w.modulus() - 1) / 2;
    for (std::size_t j = 0; j < w.length(); ++j) {
        if (w[j] != 0) return w[j] <= half;
    }
    return true;  // zero vector
}

}  // namespace

ReducedCode::ReducedCode(CoveringCode parent, std::vector<FpVector> kept,
                         std::vector<RepresentativeRecord> map)
    : parent_(std::move(parent)), kept_(std::move(kept)), map_(std::move(map)) {
    if (map_.size() != parent_.size()) {
        throw DimensionError("representative map must cover every parent codeword");
    }
}

const RepresentativeRecord& ReducedCode::representative(std::size_t codeword_index) const {
    if (codeword_index >= map_.size()) {
        throw DimensionError("codeword index out of range");
    }
    return map_[codeword_index];
}

ReducedCode reduce_code(const CoveringCode& code) {
    if (code.modulus() == 2) {
        throw DimensionError(
            "sign reduction requires odd characteristic; use the binary baseline for F_2");
    }

    const std::vector<FpVector>& words = code.codewords();
    std::vector<FpVector> kept;
    for (const FpVector& w : words) {
        if (w.weight() <= 1) continue;
        if (is_canonical_sign(w) || !code.contains(w.negated())) {
            kept.push_back(w);
        }
    }
    // words are sorted, so kept inherits canonical order

    std::vector<RepresentativeRecord> map(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        const FpVector& w = words[i];
        if (w.weight() <= 1) {
            map[i] = {RepresentativeRecord::Kind::low_weight, 0, +1};
            continue;
        }
        const auto self = std::lower_bound(kept.begin(), kept.end(), w);
        if (self != kept.end() && *self == w) {
            map[i] = {RepresentativeRecord::Kind::kept,
                      static_cast<std::size_t>(self - kept.begin()), +1};
            continue;
        }
        const FpVector neg = w.negated();
        const auto other = std::lower_bound(kept.begin(), kept.end(), neg);
        if (other == kept.end() || *other != neg) {
            throw std::logic_error("sign reduction lost a representative");
        }
        map[i] = {RepresentativeRecord::Kind::kept,
                  static_cast<std::size_t>(other - kept.begin()), -1};
    }
    return ReducedCode(code, std::move(kept), std::move(map));
}

}  // namespace lowaccess
