#include "lowaccess/complexity.hpp"

#include <algorithm>

#include <json.hpp>

#include "lowaccess/config.hpp"
#include "lowaccess/errors.hpp"

namespace lowaccess {

CoefficientSet::CoefficientSet(std::vector<Rational> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw DimensionError("coefficient set must be nonempty");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

CoefficientSet CoefficientSet::parse(std::string_view text) {
    const std::string s(text);
    const auto range = s.find("..");
    if (range != std::string::npos && s.find(',') == std::string::npos) {
        const Rational lo = Rational::parse(s.substr(0, range));
        const Rational hi = Rational::parse(s.substr(range + 2));
        if (!lo.is_integer() || !hi.is_integer() || hi < lo) {
            throw ParseError("range literal needs integers lo..hi: " + s);
        }
        std::vector<Rational> values;
        for (long long v = lo.num(); v <= hi.num(); ++v) values.emplace_back(v);
        return CoefficientSet(std::move(values));
    }
    std::vector<Rational> values;
    std::size_t begin = 0;
    while (begin <= s.size()) {
        std::size_t end = s.find(',', begin);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(begin, end - begin);
        item.erase(std::remove_if(item.begin(), item.end(),
                                  [](unsigned char c) { return c == ' ' || c == '\t'; }),
                   item.end());
        if (!item.empty()) values.push_back(Rational::parse(item));
        if (end == s.size()) break;
        begin = end + 1;
    }
    if (values.empty()) throw ParseError("empty coefficient set literal: " + s);
    return CoefficientSet(std::move(values));
}

CoefficientSet CoefficientSet::centered(unsigned p) {
    if (p < 3 || p % 2 == 0) {
        throw DimensionError("centered coefficient set needs an odd p >= 3");
    }
    const long long half = (p - 1) / 2;
    std::vector<Rational> values;
    for (long long v = -half; v <= half; ++v) values.emplace_back(v);
    return CoefficientSet(std::move(values));
}

bool CoefficientSet::contains(const Rational& value) const {
    return std::binary_search(elements_.begin(), elements_.end(), value);
}

std::optional<Rational> CoefficientSet::common_step() const {
    if (elements_.size() < 2) return std::nullopt;
    const Rational step = elements_[1] - elements_[0];
    for (std::size_t i = 2; i < elements_.size(); ++i) {
        if (elements_[i] - elements_[i - 1] != step) return std::nullopt;
    }
    return step;
}

std::string CoefficientSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) out += ",";
        out += elements_[i].to_string();
    }
    return out + "}";
}

std::vector<Rational> sumset_values(const APDecomposition& dec) {
    if (dec.p < 2) throw DimensionError("progression length must be at least 2");
    checked_pow(dec.p, dec.theta());
    std::vector<Rational> sums{Rational(0)};
    for (const ProgressionSet& s : dec.sets) {
        std::vector<Rational> next;
        next.reserve(sums.size() * dec.p);
        for (const Rational& partial : sums) {
            for (unsigned j = 0; j < dec.p; ++j) {
                next.push_back(partial + s.start + Rational(static_cast<long long>(j)) * s.step);
            }
        }
        sums = std::move(next);
    }
    // keep first occurrences in odometer order
    std::vector<Rational> seen;
    std::vector<Rational> ordered;
    for (const Rational& v : sums) {
        const auto it = std::lower_bound(seen.begin(), seen.end(), v);
        if (it == seen.end() || *it != v) {
            seen.insert(it, v);
            ordered.push_back(v);
        }
    }
    return ordered;
}

bool verify_decomposition(const CoefficientSet& set, const APDecomposition& dec) {
    if (dec.p < 2) throw DimensionError("progression length must be at least 2");
    for (const ProgressionSet& s : dec.sets) {
        if (!(s.step > Rational(0))) return false;
    }
    checked_pow(dec.p, dec.theta());
    std::vector<Rational> sums{Rational(0)};
    for (const ProgressionSet& s : dec.sets) {
        std::vector<Rational> next;
        next.reserve(sums.size() * dec.p);
        for (const Rational& partial : sums) {
            for (unsigned j = 0; j < dec.p; ++j) {
                next.push_back(partial + s.start + Rational(static_cast<long long>(j)) * s.step);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        sums = std::move(next);
    }
    for (const Rational& a : set.elements()) {
        if (!std::binary_search(sums.begin(), sums.end(), a)) return false;
    }
    return true;
}

APDecomposition lemma1_construction(const CoefficientSet& set, unsigned p) {
    if (p < 2) throw DimensionError("progression length must be at least 2");
    const std::vector<Rational>& a = set.elements();
    const std::size_t big = a.size();
    if (big < 2) throw DimensionError("constructive decomposition needs at least two elements");

    APDecomposition dec;
    dec.p = p;
    for (std::size_t i = 0; i + 2 < big; ++i) {
        dec.sets.push_back(ProgressionSet{a[i] - a[big - 1], a[big - 1] - a[i]});
    }
    dec.sets.push_back(ProgressionSet{a[big - 2], a[big - 1] - a[big - 2]});
    return dec;
}

std::size_t complexity_lower_bound(std::size_t set_size, unsigned p) {
    std::size_t theta = 0;
    std::uint64_t reach = 1;
    while (reach < set_size) {
        reach *= p;
        ++theta;
    }
    return std::max<std::size_t>(theta, 1);
}

std::vector<ProgressionSet> candidate_progressions(const CoefficientSet& set, unsigned p,
                                                   unsigned max_step_divisor) {
    if (max_step_divisor == 0) max_step_divisor = 1;
    const std::vector<Rational>& a = set.elements();
    std::vector<Rational> steps;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            for (unsigned q = 1; q <= max_step_divisor; ++q) {
                steps.push_back((a[j] - a[i]) / Rational(static_cast<long long>(q)));
            }
        }
    }
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

    std::vector<ProgressionSet> candidates;
    for (const Rational& step : steps) {
        for (const Rational& anchor : a) {
            for (unsigned j = 0; j < p; ++j) {
                candidates.push_back(
                    ProgressionSet{anchor - Rational(static_cast<long long>(j)) * step, step});
            }
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const ProgressionSet& x, const ProgressionSet& y) {
                  if (x.start != y.start) return x.start < y.start;
                  return x.step < y.step;
              });
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](const ProgressionSet& x, const ProgressionSet& y) {
                                     return x.start == y.start && x.step == y.step;
                                 }),
                     candidates.end());
    return candidates;
}

namespace {

struct SearchState {
    const std::vector<ProgressionSet>& candidates;
    const std::vector<Rational>& targets;
    unsigned p;
    std::size_t theta;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool aborted = false;
    std::vector<std::size_t> chosen;
    // suffix extrema over candidate tails: tightest value any further
    // pick can contribute
    std::vector<Rational> suffix_min;
    std::vector<Rational> suffix_max;
};

bool reachable(const SearchState& st, const std::vector<Rational>& partial_sums,
               std::size_t next_candidate, std::size_t remaining) {
    if (remaining == 0) {
        for (const Rational& a : st.targets) {
            if (!std::binary_search(partial_sums.begin(), partial_sums.end(), a)) return false;
        }
        return true;
    }
    const Rational lo = st.suffix_min[next_candidate] * Rational(static_cast<long long>(remaining));
    const Rational hi = st.suffix_max[next_candidate] * Rational(static_cast<long long>(remaining));
    for (const Rational& a : st.targets) {
        bool ok = false;
        for (const Rational& s : partial_sums) {
            const Rational need = a - s;
            if (need >= lo && need <= hi) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

bool dfs(SearchState& st, std::size_t depth, std::size_t first_candidate,
         const std::vector<Rational>& partial_sums) {
    if (depth == st.theta) {
        for (const Rational& a : st.targets) {
            if (!std::binary_search(partial_sums.begin(), partial_sums.end(), a)) return false;
        }
        return true;
    }
    for (std::size_t c = first_candidate; c < st.candidates.size(); ++c) {
        if (++st.nodes > st.budget) {
            st.aborted = true;
            return false;
        }
        const ProgressionSet& cand = st.candidates[c];
        std::vector<Rational> next;
        next.reserve(partial_sums.size() * st.p);
        for (const Rational& s : partial_sums) {
            for (unsigned j = 0; j < st.p; ++j) {
                next.push_back(s + cand.start + Rational(static_cast<long long>(j)) * cand.step);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());

        if (!reachable(st, next, c, st.theta - depth - 1)) continue;

        st.chosen.push_back(c);
        if (dfs(st, depth + 1, c, next)) return true;
        st.chosen.pop_back();
        if (st.aborted) return false;
    }
    return false;
}

}  // namespace

ComplexityResult p_complexity(const CoefficientSet& set, unsigned p,
                              const SearchOptions& options) {
    if (p < 2) throw DimensionError("p-complexity needs p >= 2");
    if (set.size() < 2) throw DimensionError("p-complexity needs a set of size at least 2");

    const CoefficientSet& source = options.candidate_source ? *options.candidate_source : set;
    const std::vector<ProgressionSet> candidates =
        candidate_progressions(source, p, options.max_step_divisor);

    const std::size_t lower = complexity_lower_bound(set.size(), p);
    const std::size_t upper = set.size() - 1;

    ComplexityResult result;
    std::uint64_t nodes_used = 0;
    for (std::size_t theta = std::min(lower, upper); theta <= upper; ++theta) {
        SearchState st{candidates, set.elements(), p, theta,
                       options.budget > nodes_used ? options.budget - nodes_used : 0};
        st.suffix_min.resize(candidates.size() + 1);
        st.suffix_max.resize(candidates.size() + 1);
        if (!candidates.empty()) {
            st.suffix_min.back() = Rational(0);
            st.suffix_max.back() = Rational(0);
            for (std::size_t c = candidates.size(); c-- > 0;) {
                const Rational lo = candidates[c].start;
                const Rational hi = candidates[c].start +
                                    Rational(static_cast<long long>(p - 1)) * candidates[c].step;
                st.suffix_min[c] = c + 1 < candidates.size()
                                       ? std::min(lo, st.suffix_min[c + 1])
                                       : lo;
                st.suffix_max[c] = c + 1 < candidates.size()
                                       ? std::max(hi, st.suffix_max[c + 1])
                                       : hi;
            }
        }

        const std::vector<Rational> unit{Rational(0)};
        const bool found = dfs(st, 0, 0, unit);
        nodes_used += st.nodes;
        if (found) {
            result.theta = theta;
            result.witness.p = p;
            for (std::size_t c : st.chosen) result.witness.sets.push_back(candidates[c]);
            result.status = SearchStatus::optimal_in_space;
            result.nodes_explored = nodes_used;
            return result;
        }
        if (st.aborted) {
            // Budget exhausted: fall back to the constructive bound,
            // which is optimal only when it meets the counting bound.
            result.theta = upper;
            result.witness = lemma1_construction(set, p);
            result.status =
                upper == lower ? SearchStatus::optimal_in_space : SearchStatus::upper_bound;
            result.nodes_explored = nodes_used;
            return result;
        }
    }
    // No witness below the constructive bound; emit it.
    result.theta = upper;
    result.witness = lemma1_construction(set, p);
    result.status = SearchStatus::optimal_in_space;
    result.nodes_explored = nodes_used;
    return result;
}

std::string witness_json(const ComplexityResult& result, unsigned p) {
    nlohmann::json out;
    out["p"] = p;
    out["theta"] = result.theta;
    out["sets"] = nlohmann::json::array();
    for (const ProgressionSet& s : result.witness.sets) {
        out["sets"].push_back({{"start", s.start.to_string()}, {"step", s.step.to_string()}});
    }
    out["status"] =
        result.status == SearchStatus::optimal_in_space ? "optimal-in-space" : "upper-bound";
    return out.dump();
}

}  // namespace lowaccess
