#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lowaccess/rational.hpp"

namespace lowaccess {

/// A finite set of exact rationals, sorted ascending, distinct.
class CoefficientSet {
  public:
    explicit CoefficientSet(std::vector<Rational> elements);

    /// Accepts "lo..hi" integer ranges and comma-separated rational
    /// literals, e.g. "0..8", "-1,0,1", "1/2,3/4".
    static CoefficientSet parse(std::string_view text);
    /// The centered set {0, +-1, ..., +-(p-1)/2} for odd p.
    static CoefficientSet centered(unsigned p);

    const std::vector<Rational>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const Rational& min() const { return elements_.front(); }
    const Rational& max() const { return elements_.back(); }
    bool contains(const Rational& value) const;

    /// The common difference when the elements form an arithmetic
    /// progression of length >= 2; nullopt otherwise.
    std::optional<Rational> common_step() const;

    std::string to_string() const;

  private:
    std::vector<Rational> elements_;
};

/// A size-p arithmetic progression {start, start+step, ...,
/// start+(p-1)step} with step > 0.
struct ProgressionSet {
    Rational start;
    Rational step;
};

/// theta progressions whose sumset is claimed to contain a coefficient
/// set.
struct APDecomposition {
    unsigned p = 0;
    std::vector<ProgressionSet> sets;

    std::size_t theta() const { return sets.size(); }
};

/// Exact check that every element of the set is a sum picking one term
/// from each progression. Throws CapacityError when p^theta exceeds the
/// enumeration bound.
bool verify_decomposition(const CoefficientSet& set, const APDecomposition& dec);

/// All p^theta sums in odometer order (first progression slowest),
/// duplicates kept out, insertion order preserved for the first
/// occurrence of each value.
std::vector<Rational> sumset_values(const APDecomposition& dec);

/// The constructive theta = M-1 decomposition: S_i anchored at
/// a_i - a_M with step a_M - a_i for i < M-1, and S_{M-1} anchored at
/// a_{M-1} with step a_M - a_{M-1}. Always verifies.
APDecomposition lemma1_construction(const CoefficientSet& set, unsigned p);

/// ceil(log_p M): no decomposition with fewer progressions can cover M
/// values.
std::size_t complexity_lower_bound(std::size_t set_size, unsigned p);

enum class SearchStatus {
    optimal_in_space,  // smaller theta exhaustively ruled out over the candidate space
    upper_bound,       // search budget ran out; theta is only an upper bound
};

struct ComplexityResult {
    std::size_t theta = 0;
    APDecomposition witness;
    SearchStatus status = SearchStatus::upper_bound;
    std::uint64_t nodes_explored = 0;
};

struct SearchOptions {
    std::uint64_t budget = 4'000'000;  // DFS nodes before giving up
    unsigned max_step_divisor = 1;     // steps (a-b)/q for q up to this
    /// When set, candidate steps/starts come from this set instead of
    /// the query set (used to search supersets' spaces).
    const CoefficientSet* candidate_source = nullptr;
};

/// The searched progressions: steps are positive pairwise differences of
/// the source set (divided by small integers), starts are source
/// elements shifted down by whole steps. Sorted by (start, step).
std::vector<ProgressionSet> candidate_progressions(const CoefficientSet& set, unsigned p,
                                                   unsigned max_step_divisor = 1);

/// Smallest theta admitting a verified decomposition over the candidate
/// space, searched depth-first in increasing theta with sumset pruning.
/// Falls back to the constructive decomposition when the budget runs
/// out. p may be any integer >= 2.
ComplexityResult p_complexity(const CoefficientSet& set, unsigned p,
                              const SearchOptions& options = {});

std::string witness_json(const ComplexityResult& result, unsigned p);

}  // namespace lowaccess
