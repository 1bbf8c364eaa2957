#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "signalling/core.hpp"

namespace signalling {

/// Row-stochastic signalling kernel. Row x is the distribution pi(. | x)
/// over signals.
class BehavioralStrategy {
public:
    /// Throws DimensionError unless square, DomainError unless every row is a
    /// probability vector.
    explicit BehavioralStrategy(std::vector<std::vector<Rational>> rows);

    /// pi(s(x) | x) = 1.
    static BehavioralStrategy deterministic(const SenderStrategy& s);

    int q() const { return static_cast<int>(rows_.size()); }

    /// pi(y | x).
    const Rational& operator()(Symbol signal, Symbol source) const {
        return rows_[static_cast<std::size_t>(source)][static_cast<std::size_t>(signal)];
    }

    const std::vector<Rational>& row(Symbol source) const { return rows_[static_cast<std::size_t>(source)]; }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

    friend bool operator==(const BehavioralStrategy&, const BehavioralStrategy&) = default;

private:
    std::vector<std::vector<Rational>> rows_;
};

/// Strictly positive source distribution.
class Prior {
public:
    explicit Prior(std::vector<Rational> p);
    static Prior uniform(int q);

    /// Comma-separated rational literals, e.g. "1/2,1/4,1/4".
    static Prior parse(std::string_view text);

    int q() const { return static_cast<int>(p_.size()); }
    const Rational& operator[](Symbol x) const { return p_[static_cast<std::size_t>(x)]; }
    const std::vector<Rational>& values() const { return p_; }

private:
    std::vector<Rational> p_;
};

/// Receiver kernel sigma(xhat | y), one column per signal. A column may be
/// left unspecified (empty) for signals the sender never uses.
class ReceiverKernel {
public:
    /// columns[y][xhat]; every non-empty column must be a probability vector.
    explicit ReceiverKernel(int q, std::vector<std::vector<Rational>> columns);

    /// Deterministic kernel from a partial receiver map.
    static ReceiverKernel from(const ReceiverStrategy& g);

    int q() const { return q_; }
    bool specified(Symbol y) const { return !columns_[static_cast<std::size_t>(y)].empty(); }
    const Rational& operator()(Symbol xhat, Symbol y) const {
        return columns_[static_cast<std::size_t>(y)][static_cast<std::size_t>(xhat)];
    }

private:
    int q_;
    std::vector<std::vector<Rational>> columns_;
};

struct SupportSets {
    std::vector<SymbolSet> per_symbol;  // E_x
    SymbolSet used;                     // Y(pi)
};

SupportSets supports(const BehavioralStrategy& pi);

struct RecoverySets {
    int size = 0;
    std::vector<SymbolSet> sets;  // lexicographic order
};

inline constexpr int kMaxBehavioralQ = 16;

/// Largest sets of sources with pairwise disjoint supports, found by
/// exhaustive subset search.
RecoverySets max_recovery_sets(const BehavioralStrategy& pi);

/// Exact triple sum over sources, used signals and recovered symbols.
/// Throws DimensionError on mismatched sizes and DomainError if sigma is
/// unspecified on a used signal.
Rational expected_utility(const BehavioralStrategy& pi, const ReceiverKernel& sigma, const Prior& p,
                          const UtilityMatrix& u);

struct MinBestResponse {
    Rational value;
    /// Deterministic minimizer, defined exactly on Y(pi).
    ReceiverStrategy witness = ReceiverStrategy({});
    /// Recovery set of the witness.
    SymbolSet recovery_set;
};

/// min of the expected utility over the receiver's best responses.
MinBestResponse min_best_response_utility(const BehavioralStrategy& pi, const Prior& p, const UtilityMatrix& u);

struct RecoveryAnalysis {
    SupportSets supports;
    int max_recovery_size = 0;
    std::vector<SymbolSet> recovery_sets;
    Rational min_br_utility;
    ReceiverStrategy witness_sigma = ReceiverStrategy({});
};

RecoveryAnalysis analyze_recovery(const BehavioralStrategy& pi, const Prior& p, const UtilityMatrix& u);

/// Class label of a 3-symbol strategy by its support pattern: "A", "B",
/// "C.a-i", "C.a-ii", "C.a-iii-1", "C.a-iii-2", "C.b-i", "C.b-ii-1",
/// "C.b-ii-2-alpha", "C.b-ii-2-beta". Throws UnsupportedError for q != 3.
std::string classify_pi(const BehavioralStrategy& pi);

/// Leading part of a label: "A", "B", "C.a" or "C.b".
std::string class_family(std::string_view label);

/// U(x,y) = -U(y,x) for all x, y and U(x,y) = -U(x,z) for distinct x, y, z.
bool has_skew_structure(const UtilityMatrix& u);

}  // namespace signalling
