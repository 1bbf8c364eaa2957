#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "signalling/behavioral.hpp"

namespace signalling {

struct GridSearchOptions {
    /// Largest admissible full grid, counted before symmetry reduction.
    std::uint64_t max_points = 100'000'000;
    /// Evaluate one strategy per signal-relabelling orbit and weight it by
    /// the orbit size. The value is invariant under relabelling signals.
    bool use_symmetry = true;
    /// Called for every grid point in lexicographic order. Setting it turns
    /// the symmetry reduction off.
    std::function<void(const BehavioralStrategy& pi, const Rational& value, const std::string& label)> on_point;
};

struct GridSearchResult {
    int q = 0;
    int denominator = 0;
    std::uint64_t points = 0;     // size of the full grid
    std::uint64_t evaluated = 0;  // strategies actually evaluated
    bool integer_arithmetic = false;

    Rational max_value;
    /// Lexicographically smallest maximizer (rows in source order).
    BehavioralStrategy argmax = BehavioralStrategy({{Rational(1)}});
    std::string argmax_class;
    std::map<std::string, std::uint64_t> class_histogram;

    /// argmax with its 1/N entries moved onto the largest entry of their row.
    BehavioralStrategy limit_point = BehavioralStrategy({{Rational(1)}});
    std::string limit_class;
    Rational limit_value;
    /// The argmax's recovery-set formula evaluated at the limit point.
    Rational sup_estimate;
    bool attained = false;

    std::string verdict() const;
};

/// Number of q x q row-stochastic matrices with entries in (1/N)Z.
/// Throws SizeLimitError if it does not fit 64 bits.
std::uint64_t grid_size(int q, int denominator);

/// Zeroes every entry equal to 1/N and adds the removed mass to the largest
/// entry of its row (first one on ties).
BehavioralStrategy limit_point(const BehavioralStrategy& pi, int denominator);

/// Maximizes min_best_response_utility over every strategy whose entries are
/// multiples of 1/N. Requires q = 3.
GridSearchResult grid_search_sup(const UtilityMatrix& u, const Prior& p, int denominator,
                                 const GridSearchOptions& options = {});

}  // namespace signalling
