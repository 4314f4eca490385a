#include "lowaccess/catalog.hpp"

#include <algorithm>

#include "lowaccess/errors.hpp"

namespace lowaccess {

namespace {

CoveringCode repetition(unsigned p, unsigned i) {
    std::vector<FpVector> words;
    for (unsigned z = 0; z < p; ++z) {
        words.emplace_back(p, std::vector<std::uint8_t>(i, static_cast<std::uint8_t>(z)));
    }
    CoveringCode code(p, i, std::move(words));
    // Closed-form radius i - ceil(i/p); the enumeration cross-check
    // lives in the tests.
    const std::size_t radius = i - (i + p - 1) / p;
    return code.with_cached_radius(radius);
}

CoveringCode hamming_3() {
    return CoveringCode::from_generator(
        3, {FpVector::parse(3, "0111"), FpVector::parse(3, "1012")});
}

CoveringCode expanded_hamming() {
    return CoveringCode::from_generator(3, {FpVector::parse(3, "01110"),
                                            FpVector::parse(3, "10120"),
                                            FpVector::parse(3, "00001")});
}

unsigned require_index(const std::string& name, std::optional<unsigned> index) {
    if (!index || *index < 1) {
        throw CatalogError("construction '" + name + "' needs a parameter i >= 1");
    }
    return *index;
}

}  // namespace

CoveringCode catalog_code(const std::string& name, std::optional<unsigned> index) {
    if (name == "entire_space") {
        return CoveringCode::entire_space(3, require_index(name, index));
    }
    if (name == "repetition") {
        return repetition(3, require_index(name, index));
    }
    if (name == "hamming_3") {
        return hamming_3();
    }
    if (name == "expanded_hamming") {
        return expanded_hamming();
    }
    if (name == "amalgam") {
        // Glue coordinate: last of the expanded Hamming code, first of
        // the repetition code.
        return amalgamated_direct_sum(expanded_hamming(), repetition(3, require_index(name, index)));
    }
    throw CatalogError("unknown catalog construction: " + name);
}

std::vector<std::string> catalog_names() {
    return {"entire_space", "repetition", "hamming_3", "expanded_hamming", "amalgam"};
}

bool catalog_needs_index(const std::string& name) {
    return name == "entire_space" || name == "repetition" || name == "amalgam";
}

}  // namespace lowaccess
