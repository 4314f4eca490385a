#include "lowaccess/protocols.hpp"

#include <algorithm>
#include <cmath>

#include "lowaccess/errors.hpp"
#include "lowaccess/r_representation.hpp"

namespace lowaccess {

namespace {

void merge_node(QueryOutcome& outcome, std::size_t index) {
    const auto it =
        std::lower_bound(outcome.accessed_nodes.begin(), outcome.accessed_nodes.end(), index);
    if (it == outcome.accessed_nodes.end() || *it != index) {
        outcome.accessed_nodes.insert(it, index);
    }
}

void validate_progression(const CoefficientProgression& a, unsigned p) {
    if (a.count != p) {
        throw DimensionError("coefficient progression must have exactly p elements");
    }
    if (!(a.step > Rational(0))) {
        throw DimensionError("coefficient progression step must be positive");
    }
}

}  // namespace

QueryOutcome generic_protocol(std::span<const double> w, std::span<const double> x,
                              const CoveringCode& code, std::span<const double> alphabet) {
    const unsigned p = code.modulus();
    if (alphabet.size() != p) {
        throw DimensionError("alphabet size must equal the field size");
    }
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        for (std::size_t j = i + 1; j < alphabet.size(); ++j) {
            if (alphabet[i] == alphabet[j]) {
                throw DimensionError("alphabet values must be distinct");
            }
        }
    }
    if (w.size() != x.size()) throw DimensionError("query and data lengths differ");
    if (w.empty()) throw DimensionError("cannot evaluate an empty query");

    const std::size_t m = code.length();
    EncodingMatrix matrix;
    matrix.m = m;
    for (const FpVector& word : code.codewords()) {
        std::vector<double> column(m);
        for (std::size_t j = 0; j < m; ++j) column[j] = alphabet[word[j]];
        matrix.columns.push_back(std::move(column));
    }
    const StorageStamp stamp = stamp_of(matrix, p);
    const StorageSystem storage = StorageSystem::encode_with_matrix(x, matrix, stamp);

    AccessPlan plan;
    plan.stamp = stamp;
    plan.data_length = w.size();
    plan.batches.resize(storage.batch_count());

    std::vector<std::uint8_t> target(m);
    std::vector<double> coeffs(m);
    const std::uint8_t pad_residue = [&] {
        for (unsigned z = 0; z < p; ++z) {
            if (alphabet[z] == 0.0) return static_cast<std::uint8_t>(z);
        }
        return std::uint8_t{0};
    }();
    const bool alphabet_has_zero = alphabet[pad_residue] == 0.0;

    for (std::size_t batch = 0; batch < storage.batch_count(); ++batch) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t src = batch * m + j;
            if (src < w.size()) {
                coeffs[j] = w[src];
                bool found = false;
                for (unsigned z = 0; z < p; ++z) {
                    if (alphabet[z] == coeffs[j]) {
                        target[j] = static_cast<std::uint8_t>(z);
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    throw CoefficientRangeError("query coefficient outside the alphabet");
                }
            } else {
                if (!alphabet_has_zero) {
                    throw DimensionError("data length must be a multiple of m unless 0 is a "
                                         "coefficient");
                }
                coeffs[j] = 0.0;
                target[j] = pad_residue;
            }
        }
        const FpVector wbar(p, target);

        std::size_t best_index = 0;
        std::size_t best_distance = m + 1;
        for (std::size_t c = 0; c < code.size(); ++c) {
            const std::size_t d = hamming_distance(code.codewords()[c], wbar);
            if (d < best_distance) {
                best_distance = d;
                best_index = c;
            }
        }
        std::size_t systematic_cost = 0;
        for (std::size_t j = 0; j < m; ++j) systematic_cost += (coeffs[j] != 0.0);

        BatchPlan& out = plan.batches[batch];
        if (1 + best_distance < systematic_cost) {
            out.coded = CodedTerm{best_index, +1};
            for (std::size_t j = 0; j < m; ++j) {
                const double delta = coeffs[j] - matrix.columns[best_index][j];
                if (delta != 0.0) out.corrections.push_back({j, delta});
            }
        } else {
            for (std::size_t j = 0; j < m; ++j) {
                if (coeffs[j] != 0.0) out.corrections.push_back({j, coeffs[j]});
            }
        }
    }
    return execute_plan(plan, storage);
}

QueryOutcome shift_protocol(std::span<const Rational> w, const StorageSystem& storage,
                            const ReducedCode& reduced, const CoefficientProgression& a) {
    const unsigned p = reduced.parent().modulus();
    validate_progression(a, p);
    if (w.empty()) throw DimensionError("cannot evaluate an empty query");

    // Shift a_i -> -(p-1)/2 + (i-1): an exact index lookup since the
    // progression is (start, step)-generated.
    const int half = static_cast<int>((p - 1) / 2);
    std::vector<double> centered(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        const Rational offset = w[j] - a.start;
        const Rational index = offset / a.step;
        if (!index.is_integer() || index < Rational(0) ||
            index >= Rational(static_cast<long long>(p))) {
            throw CoefficientRangeError("coefficient " + w[j].to_string() +
                                        " is not in the progression");
        }
        centered[j] = static_cast<double>(index.num() - half);
    }

    const AccessPlan plan = plan_access(centered, reduced);
    QueryOutcome outcome = execute_plan(plan, storage);

    const Rational ones_coeff = Rational(half) * a.step + a.start;
    outcome.value = a.step.to_double() * outcome.value;
    if (!ones_coeff.is_zero()) {
        outcome.value += ones_coeff.to_double() * storage.ones_node_value();
        merge_node(outcome, storage.ones_node_index());
    }
    return outcome;
}

QueryOutcome shift_protocol_inverse(std::span<const double> w, const StorageSystem& storage,
                                    const ReducedCode& reduced, const CoefficientProgression& a) {
    const unsigned p = reduced.parent().modulus();
    validate_progression(a, p);
    const RRepresentation rep = RRepresentation::for_modulus(p);
    const int half = rep.half();

    // w_j = i in the centered set maps to a_1 + ((p-1)/2 + i) d.
    std::vector<Rational> shifted(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        const std::uint8_t residue = rep.residue_of(w[j]);  // validates the range
        const int i = rep.forward(residue);
        shifted[j] = a.start + Rational(half + i) * a.step;
    }

    QueryOutcome inner = shift_protocol(shifted, storage, reduced, a);
    const Rational ones_coeff = Rational(half) + a.start / a.step;
    QueryOutcome outcome;
    outcome.value = inner.value / a.step.to_double();
    outcome.accessed_nodes = std::move(inner.accessed_nodes);
    if (!ones_coeff.is_zero()) {
        outcome.value -= ones_coeff.to_double() * storage.ones_node_value();
        merge_node(outcome, storage.ones_node_index());
    }
    return outcome;
}

std::vector<FpVector> complement_pair_subset(const CoveringCode& code) {
    if (code.modulus() != 2) {
        throw DimensionError("complement pairing applies to binary codes only");
    }
    std::vector<FpVector> subset;
    for (const FpVector& word : code.codewords()) {
        FpVector complement = word;
        {
            std::vector<std::uint8_t> entries(word.length());
            for (std::size_t j = 0; j < word.length(); ++j) entries[j] = word[j] ^ 1u;
            complement = FpVector(2, std::move(entries));
        }
        // Keep the lexicographically smaller of a pair present in the
        // code; a word whose complement is absent stays.
        if (!code.contains(complement) || word < complement) {
            subset.push_back(word);
        }
    }
    return subset;
}

QueryOutcome binary_baseline(std::span<const double> w, std::span<const double> x,
                             const CoveringCode& code, BinaryVariant variant) {
    if (code.modulus() != 2) {
        throw DimensionError("binary baseline requires a code over F_2");
    }
    if (variant == BinaryVariant::zero_one) {
        const double alphabet[2] = {0.0, 1.0};
        return generic_protocol(w, x, code, alphabet);
    }

    if (w.size() != x.size()) throw DimensionError("query and data lengths differ");
    if (w.empty()) throw DimensionError("cannot evaluate an empty query");
    if (w.size() % code.length() != 0) {
        throw DimensionError("pm_one queries need a data length that is a multiple of m "
                             "(no zero coefficient exists for padding)");
    }

    const std::size_t m = code.length();
    const std::vector<FpVector> subset = complement_pair_subset(code);

    EncodingMatrix matrix;
    matrix.m = m;
    for (const FpVector& word : subset) {
        std::vector<double> column(m);
        for (std::size_t j = 0; j < m; ++j) column[j] = word[j] == 0 ? 1.0 : -1.0;
        matrix.columns.push_back(std::move(column));
    }
    const StorageStamp stamp = stamp_of(matrix, 2);
    const StorageSystem storage = StorageSystem::encode_with_matrix(x, matrix, stamp);

    AccessPlan plan;
    plan.stamp = stamp;
    plan.data_length = w.size();
    plan.batches.resize(storage.batch_count());

    std::vector<std::uint8_t> target(m);
    for (std::size_t batch = 0; batch < storage.batch_count(); ++batch) {
        for (std::size_t j = 0; j < m; ++j) {
            const double c = w[batch * m + j];
            if (c == 1.0) {
                target[j] = 0;
            } else if (c == -1.0) {
                target[j] = 1;
            } else {
                throw CoefficientRangeError("pm_one coefficients must be +1 or -1");
            }
        }
        const FpVector wbar(2, target);

        std::size_t best_index = 0;
        std::size_t best_distance = m + 1;
        for (std::size_t c = 0; c < code.size(); ++c) {
            const std::size_t d = hamming_distance(code.codewords()[c], wbar);
            if (d < best_distance) {
                best_distance = d;
                best_index = c;
            }
        }
        const FpVector& nearest = code.codewords()[best_index];
        const auto in_subset = std::lower_bound(subset.begin(), subset.end(), nearest);
        CodedTerm term{0, +1};
        if (in_subset != subset.end() && *in_subset == nearest) {
            term = CodedTerm{static_cast<std::size_t>(in_subset - subset.begin()), +1};
        } else {
            // The complement is stored; its +-1 column is the negation.
            std::vector<std::uint8_t> entries(m);
            for (std::size_t j = 0; j < m; ++j) entries[j] = nearest[j] ^ 1u;
            const FpVector complement(2, std::move(entries));
            const auto at = std::lower_bound(subset.begin(), subset.end(), complement);
            if (at == subset.end() || *at != complement) {
                throw IntegrityError("complement pairing lost a representative");
            }
            term = CodedTerm{static_cast<std::size_t>(at - subset.begin()), -1};
        }

        BatchPlan& out = plan.batches[batch];
        if (1 + best_distance < m) {
            out.coded = term;
            for (std::size_t j = 0; j < m; ++j) {
                const double stored = nearest[j] == 0 ? 1.0 : -1.0;
                const double delta = w[batch * m + j] - stored;
                if (delta != 0.0) out.corrections.push_back({j, delta});
            }
        } else {
            // Reading every systematic node is no worse.
            for (std::size_t j = 0; j < m; ++j) {
                out.corrections.push_back({j, w[batch * m + j]});
            }
        }
    }
    return execute_plan(plan, storage);
}

}  // namespace lowaccess
