#pragma once

#include <string>
#include <utility>
#include <vector>

#include "signalling/combinatorics.hpp"
#include "signalling/core.hpp"

namespace signalling {

/// Receiver best responses to a fixed sender strategy. Every best response
/// maps signal i to some element of candidates[i]; all of them recover
/// exactly `recovered_count` symbols.
struct BestResponse {
    std::vector<std::pair<Symbol, SymbolSet>> candidates;  // (signal, P_i(s)) for i in range(s)
    std::size_t recovered_count = 0;
};

BestResponse best_response_set(const SenderStrategy& s);

/// x -> min over best responses g of U(g(s(x)), x), i.e. the minimum of
/// column x over the dilemma block containing x.
std::vector<Rational> worst_case_utility(const SenderStrategy& s, const UtilityMatrix& u);

/// Equilibrium test via the block condition U(x,x) <= U(xhat,x) for x, xhat in
/// the same dilemma block. Never enumerates the strategy space.
bool is_equilibrium(const SenderStrategy& s, const UtilityMatrix& u);

inline constexpr int kBruteForceMaxQ = 5;

/// Equilibrium test straight from the definition: best-response sets are
/// found by enumerating every receiver map and the sender's worst case is
/// compared against every alternative sender map. Exponential; q <= max_q.
bool is_equilibrium_bruteforce(const SenderStrategy& s, const UtilityMatrix& u, int max_q = kBruteForceMaxQ);

/// Same oracle for every sender strategy at once, indexed as in
/// SenderStrategy::from_index.
std::vector<bool> bruteforce_equilibrium_table(const UtilityMatrix& u, int max_q = kBruteForceMaxQ);

/// Every partition of the alphabet whose blocks are cliques of the strong
/// sender graph, canonical order.
std::vector<PartitionCover> enumerate_equilibrium_partitions(const UtilityMatrix& u, const SolverLimits& limits = {});

/// Minimum number of symbols recovered over all equilibria (= clique cover
/// number of the strong sender graph).
int informativeness(const UtilityMatrix& u, const SolverLimits& limits = {});

enum class EquilibriumClass { Separating, Pooling, SemiSeparating };

std::string to_string(EquilibriumClass c);

/// Separating if injective, pooling if constant, semi-separating otherwise.
/// For q = 1 the unique strategy is labelled separating.
EquilibriumClass classify(const SenderStrategy& s);

struct ClassExistence {
    bool separating_exists = true;
    bool only_separating = false;
    bool pooling_exists = false;
    bool semi_separating_exists = false;
    /// Set when the flags were re-derived from partition enumeration and agreed.
    bool cross_validated = false;

    friend bool operator==(const ClassExistence& a, const ClassExistence& b) {
        return a.separating_exists == b.separating_exists && a.only_separating == b.only_separating &&
               a.pooling_exists == b.pooling_exists && a.semi_separating_exists == b.semi_separating_exists;
    }
};

/// Flags from the informativeness alone.
ClassExistence class_existence_from_informativeness(int informativeness, int q);

/// Flags read off an explicit list of equilibrium partitions.
ClassExistence class_existence_from_partitions(const std::vector<PartitionCover>& partitions, int q);

inline constexpr int kCrossValidateMaxQ = 5;

/// Flags from the informativeness; for q <= cross_validate_max_q they are
/// recomputed from enumeration and a disagreement throws Error.
ClassExistence class_existence(const UtilityMatrix& u, const SolverLimits& limits = {},
                               int cross_validate_max_q = kCrossValidateMaxQ);

struct EquilibriumReport {
    int informativeness = 0;
    int max_recovered = 0;
    std::vector<PartitionCover> equilibrium_partitions;
    ClassExistence class_existence;
};

/// Partitions are enumerated only when q fits limits.max_partition_vertices.
EquilibriumReport equilibrium_report(const UtilityMatrix& u, const SolverLimits& limits = {});

}  // namespace signalling
