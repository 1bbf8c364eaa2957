#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "signalling/core.hpp"
#include "signalling/graphs.hpp"

namespace signalling {

/// Vertex-count ceilings for the exact exponential solvers.
struct SolverLimits {
    int max_vertices = 20;            // cliques, independence number
    int max_cover_vertices = 16;      // subset DP for the clique cover number
    int max_partition_vertices = 12;  // exhaustive partition enumeration
};

/// Each entry is a clique (singletons included), sorted ascending.
struct CliqueSet {
    std::vector<SymbolSet> cliques;
};

struct IndependenceResult {
    int size = 0;
    SymbolSet witness;
};

struct CliqueCoverResult {
    int size = 0;
    PartitionCover witness;
};

/// All inclusion-maximal cliques (Bron-Kerbosch with pivoting), lexicographic order.
CliqueSet enumerate_maximal_cliques(const SenderGraph& g, const SolverLimits& limits = {});

/// Every nonempty clique, lexicographic order.
CliqueSet enumerate_all_cliques(const SenderGraph& g, const SolverLimits& limits = {});

/// alpha(G) by branch and bound; the witness is the lexicographically smallest
/// maximum independent set.
IndependenceResult independence_number(const SenderGraph& g, const SolverLimits& limits = {});

/// theta_v(G) by dynamic programming over vertex subsets; the witness is the
/// lexicographically smallest canonical minimum cover.
CliqueCoverResult clique_cover_number(const SenderGraph& g, const SolverLimits& limits = {});

/// Calls `visit` for every partition of the vertex set into cliques, optionally
/// restricted to at most `max_blocks` blocks. Order is unspecified.
void for_each_clique_partition(const SenderGraph& g, std::optional<std::size_t> max_blocks,
                               const std::function<void(const std::vector<VertexMask>&)>& visit,
                               const SolverLimits& limits = {});

/// Every partition into cliques, canonical (sorted) order.
std::vector<PartitionCover> enumerate_clique_partitions(const SenderGraph& g, const SolverLimits& limits = {});

/// Every partition into exactly theta_v(G) cliques, canonical order.
std::vector<PartitionCover> all_minimum_covers(const SenderGraph& g, const SolverLimits& limits = {});

}  // namespace signalling
