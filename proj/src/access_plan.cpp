#include "lowaccess/access_plan.hpp"

#include <algorithm>

#include "lowaccess/errors.hpp"
#include "lowaccess/r_representation.hpp"

namespace lowaccess {

std::size_t AccessPlan::access_count() const {
    std::size_t total = 0;
    for (const BatchPlan& b : batches) total += b.access_count();
    return total;
}

AccessPlan plan_access(std::span<const double> w, const ReducedCode& reduced) {
    if (w.empty()) throw DimensionError("cannot plan an empty query");
    const CoveringCode& code = reduced.parent();
    const RRepresentation rep = RRepresentation::for_modulus(code.modulus());
    const std::size_t m = code.length();
    const std::size_t t = (w.size() + m - 1) / m;

    const EncodingMatrix matrix = EncodingMatrix::from_reduced(reduced);

    AccessPlan plan;
    plan.stamp = stamp_of(matrix, code.modulus());
    plan.data_length = w.size();
    plan.batches.resize(t);

    std::vector<std::uint8_t> target(m);
    std::vector<double> coeffs(m);
    for (std::size_t batch = 0; batch < t; ++batch) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t src = batch * m + j;
            coeffs[j] = src < w.size() ? w[src] : 0.0;  // padded coefficients forced to 0
            target[j] = rep.residue_of(coeffs[j]);
        }
        const FpVector wbar(code.modulus(), target);

        std::size_t systematic_cost = 0;
        for (std::size_t j = 0; j < m; ++j) systematic_cost += (coeffs[j] != 0.0);

        // Nearest stored combination over kept and negated-kept words,
        // ties resolved toward the lexicographically smallest codeword.
        std::optional<CodedTerm> best;
        std::size_t best_distance = 0;
        FpVector best_word = wbar;  // placeholder until a candidate is seen
        for (std::size_t c = 0; c < reduced.kept().size(); ++c) {
            for (int sign : {+1, -1}) {
                const FpVector candidate =
                    sign > 0 ? reduced.kept()[c] : reduced.kept()[c].negated();
                const std::size_t d = hamming_distance(candidate, wbar);
                if (!best || d < best_distance ||
                    (d == best_distance && candidate < best_word)) {
                    best = CodedTerm{c, sign};
                    best_distance = d;
                    best_word = candidate;
                }
            }
        }

        BatchPlan& out = plan.batches[batch];
        if (best && 1 + best_distance < systematic_cost) {
            out.coded = *best;
            for (std::size_t j = 0; j < m; ++j) {
                const double stored = best->sign * matrix.columns[best->column][j];
                const double delta = coeffs[j] - stored;
                if (delta != 0.0) out.corrections.push_back({j, delta});
            }
        } else {
            for (std::size_t j = 0; j < m; ++j) {
                if (coeffs[j] != 0.0) out.corrections.push_back({j, coeffs[j]});
            }
        }
    }
    return plan;
}

QueryOutcome execute_plan(const AccessPlan& plan, const StorageSystem& storage) {
    if (plan.stamp != storage.stamp()) {
        throw IntegrityError("plan was produced for a different encoding");
    }
    if (plan.data_length != storage.data_length() ||
        plan.batches.size() != storage.batch_count()) {
        throw IntegrityError("plan and storage disagree on data length");
    }

    QueryOutcome outcome;
    for (std::size_t batch = 0; batch < plan.batches.size(); ++batch) {
        const BatchPlan& b = plan.batches[batch];
        if (b.coded) {
            const std::size_t idx = storage.coded_node(batch, b.coded->column);
            outcome.value += b.coded->sign * storage.node(idx);
            outcome.accessed_nodes.push_back(idx);
        }
        for (const Correction& c : b.corrections) {
            const std::size_t idx = storage.systematic_node(batch, c.coordinate);
            outcome.value += c.coefficient * storage.node(idx);
            outcome.accessed_nodes.push_back(idx);
        }
    }
    std::sort(outcome.accessed_nodes.begin(), outcome.accessed_nodes.end());
    outcome.accessed_nodes.erase(
        std::unique(outcome.accessed_nodes.begin(), outcome.accessed_nodes.end()),
        outcome.accessed_nodes.end());
    return outcome;
}

}  // namespace lowaccess
