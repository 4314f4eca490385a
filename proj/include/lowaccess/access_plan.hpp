#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lowaccess/storage.hpp"

namespace lowaccess {

/// One stored combination, possibly negated before use.
struct CodedTerm {
    std::size_t column;
    int sign;  // +1 or -1
};

/// One systematic node j entering the result with the given coefficient.
struct Correction {
    std::size_t coordinate;
    double coefficient;
};

/// Per-batch recipe: either a coded node plus at most r corrections, or
/// corrections only (the low-weight case, at most r+1 of them). Terms
/// with zero coefficient are never emitted.
struct BatchPlan {
    std::optional<CodedTerm> coded;
    std::vector<Correction> corrections;

    std::size_t access_count() const { return (coded ? 1 : 0) + corrections.size(); }
};

struct AccessPlan {
    StorageStamp stamp;
    std::size_t data_length = 0;
    std::vector<BatchPlan> batches;

    std::size_t access_count() const;
};

struct QueryOutcome {
    double value = 0.0;
    std::vector<std::size_t> accessed_nodes;  // sorted, distinct

    std::size_t access_count() const { return accessed_nodes.size(); }
};

/// Chooses, per batch, the cheapest of: one coded node for the nearest
/// kept (or negated kept) codeword plus its corrections, or systematic
/// nodes only. Ties prefer the systematic-only plan, then the
/// lexicographically smallest codeword. Entries of w must be integers
/// in {0,..,+-(p-1)/2}.
AccessPlan plan_access(std::span<const double> w, const ReducedCode& reduced);

/// Applies a plan to matching storage, returning the combination value
/// and the distinct nodes touched. Throws IntegrityError when the plan
/// was built for a different encoding or data length.
QueryOutcome execute_plan(const AccessPlan& plan, const StorageSystem& storage);

}  // namespace lowaccess
