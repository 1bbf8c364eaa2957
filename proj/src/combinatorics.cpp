#include "signalling/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "signalling/errors.hpp"

namespace signalling {

namespace {

void check_limit(const SenderGraph& g, int limit, const char* what) {
    if (g.q() > limit)
        throw SizeLimitError(std::string(what) + ": graph has " + std::to_string(g.q()) +
                             " vertices, limit is " + std::to_string(limit));
}

VertexMask bit(int v) { return VertexMask{1} << v; }

// Vertices strictly above v.
VertexMask above(int v) { return v + 1 >= kMaxGraphVertices ? 0 : ~((VertexMask{1} << (v + 1)) - 1); }

int lowest(VertexMask m) { return std::countr_zero(m); }

int popcount(VertexMask m) { return std::popcount(m); }

PartitionCover to_partition(int q, const std::vector<VertexMask>& blocks) {
    std::vector<SymbolSet> sets;
    sets.reserve(blocks.size());
    for (auto b : blocks) sets.push_back(to_set(b));
    return PartitionCover(q, std::move(sets));
}

void bron_kerbosch(const SenderGraph& g, VertexMask r, VertexMask p, VertexMask x, std::vector<SymbolSet>& out) {
    if (!p && !x) {
        out.push_back(to_set(r));
        return;
    }
    int pivot = -1;
    int best = -1;
    for (VertexMask cand = p | x; cand; cand &= cand - 1) {
        int u = lowest(cand);
        int score = popcount(p & g.neighbours(u));
        if (score > best) {
            best = score;
            pivot = u;
        }
    }
    for (VertexMask rest = p & ~g.neighbours(pivot); rest; rest &= rest - 1) {
        int v = lowest(rest);
        bron_kerbosch(g, r | bit(v), p & g.neighbours(v), x & g.neighbours(v), out);
        p &= ~bit(v);
        x |= bit(v);
    }
}

void extend_cliques(const SenderGraph& g, VertexMask clique, VertexMask candidates, std::vector<SymbolSet>& out) {
    out.push_back(to_set(clique));
    for (VertexMask rest = candidates; rest; rest &= rest - 1) {
        int u = lowest(rest);
        // only vertices above u keep the lexicographic preorder
        extend_cliques(g, clique | bit(u), rest & above(u) & g.neighbours(u), out);
    }
}

// Greedy partition of `p` into cliques; an independent set meets each part at most once.
int clique_cover_bound(const SenderGraph& g, VertexMask p) {
    int parts = 0;
    while (p) {
        int v = lowest(p);
        VertexMask clique = bit(v);
        VertexMask cand = p & g.neighbours(v);
        while (cand) {
            int u = lowest(cand);
            clique |= bit(u);
            cand &= g.neighbours(u);
        }
        p &= ~clique;
        ++parts;
    }
    return parts;
}

int greedy_independent(const SenderGraph& g, VertexMask p) {
    int size = 0;
    while (p) {
        int pick = -1;
        int fewest = std::numeric_limits<int>::max();
        for (VertexMask rest = p; rest; rest &= rest - 1) {
            int v = lowest(rest);
            int d = popcount(g.neighbours(v) & p);
            if (d < fewest) {
                fewest = d;
                pick = v;
            }
        }
        ++size;
        p &= ~(g.neighbours(pick) | bit(pick));
    }
    return size;
}

class IndependenceSearch {
public:
    explicit IndependenceSearch(const SenderGraph& g) : g_(g) {}

    int solve(VertexMask p) {
        best_ = greedy_independent(g_, p);
        expand(0, p);
        return best_;
    }

private:
    void expand(int size, VertexMask p) {
        if (!p) {
            best_ = std::max(best_, size);
            return;
        }
        if (size + clique_cover_bound(g_, p) <= best_) return;
        // branch on a vertex of maximum degree inside p
        int v = -1;
        int deg = -1;
        for (VertexMask rest = p; rest; rest &= rest - 1) {
            int u = lowest(rest);
            int d = popcount(g_.neighbours(u) & p);
            if (d > deg) {
                deg = d;
                v = u;
            }
        }
        if (deg == 0) {
            best_ = std::max(best_, size + popcount(p));
            return;
        }
        expand(size + 1, p & ~(g_.neighbours(v) | bit(v)));
        expand(size, p & ~bit(v));
    }

    const SenderGraph& g_;
    int best_ = 0;
};

bool lex_less(VertexMask a, VertexMask b) { return to_set(a) < to_set(b); }

void partition_search(const SenderGraph& g, VertexMask remaining, std::vector<VertexMask>& blocks,
                      std::optional<std::size_t> max_blocks,
                      const std::function<void(const std::vector<VertexMask>&)>& visit) {
    if (!remaining) {
        visit(blocks);
        return;
    }
    if (max_blocks && blocks.size() >= *max_blocks) return;
    int v = lowest(remaining);
    VertexMask cand = remaining & g.neighbours(v);
    // every clique inside cand, joined with v, is a candidate block
    std::vector<VertexMask> stack{0};
    std::vector<VertexMask> frontier{cand};
    while (!stack.empty()) {
        VertexMask clique = stack.back();
        VertexMask options = frontier.back();
        stack.pop_back();
        frontier.pop_back();
        VertexMask block = clique | bit(v);
        blocks.push_back(block);
        partition_search(g, remaining & ~block, blocks, max_blocks, visit);
        blocks.pop_back();
        for (VertexMask rest = options; rest; rest &= rest - 1) {
            int u = lowest(rest);
            stack.push_back(clique | bit(u));
            frontier.push_back(rest & above(u) & g.neighbours(u));
        }
    }
}

}  // namespace

CliqueSet enumerate_maximal_cliques(const SenderGraph& g, const SolverLimits& limits) {
    check_limit(g, limits.max_vertices, "maximal clique enumeration");
    CliqueSet out;
    bron_kerbosch(g, 0, g.all_vertices(), 0, out.cliques);
    std::sort(out.cliques.begin(), out.cliques.end());
    return out;
}

CliqueSet enumerate_all_cliques(const SenderGraph& g, const SolverLimits& limits) {
    check_limit(g, limits.max_vertices, "clique enumeration");
    CliqueSet out;
    for (int v = 0; v < g.q(); ++v) {
        extend_cliques(g, bit(v), g.all_vertices() & above(v) & g.neighbours(v), out.cliques);
    }
    return out;
}

IndependenceResult independence_number(const SenderGraph& g, const SolverLimits& limits) {
    check_limit(g, limits.max_vertices, "independence number");
    IndependenceSearch search(g);
    IndependenceResult result;
    result.size = search.solve(g.all_vertices());

    // Lexicographically smallest witness: take each vertex in order whenever
    // the remaining candidates can still complete a maximum set.
    VertexMask chosen = 0;
    VertexMask p = g.all_vertices();
    int needed = result.size;
    for (int v = 0; v < g.q() && needed > 0; ++v) {
        if (!(p & bit(v))) continue;
        VertexMask after = p & ~g.neighbours(v) & above(v);
        if (1 + IndependenceSearch(g).solve(after) >= needed) {
            chosen |= bit(v);
            p = after;
            --needed;
        } else {
            p &= ~bit(v);
        }
    }
    result.witness = to_set(chosen);
    return result;
}

CliqueCoverResult clique_cover_number(const SenderGraph& g, const SolverLimits& limits) {
    check_limit(g, limits.max_cover_vertices, "clique cover number");
    const int q = g.q();
    const std::size_t n = std::size_t{1} << q;

    std::vector<std::uint8_t> clique(n, 0);
    clique[0] = 1;
    for (std::size_t m = 1; m < n; ++m) {
        int v = lowest(m);
        VertexMask rest = m & (m - 1);
        clique[m] = clique[rest] && (g.neighbours(v) & rest) == rest;
    }

    constexpr std::uint8_t kInf = std::numeric_limits<std::uint8_t>::max();
    std::vector<std::uint8_t> dp(n, kInf);
    dp[0] = 0;
    for (std::size_t m = 1; m < n; ++m) {
        VertexMask low = m & (~m + 1);
        VertexMask rest = m ^ low;
        std::uint8_t best = kInf;
        for (VertexMask sub = rest;; sub = (sub - 1) & rest) {
            VertexMask block = sub | low;
            if (clique[block] && dp[m ^ block] != kInf)
                best = std::min<std::uint8_t>(best, static_cast<std::uint8_t>(dp[m ^ block] + 1));
            if (!sub) break;
        }
        dp[m] = best;
    }

    std::vector<VertexMask> blocks;
    VertexMask m = g.all_vertices();
    while (m) {
        VertexMask low = m & (~m + 1);
        VertexMask rest = m ^ low;
        std::optional<VertexMask> pick;
        for (VertexMask sub = rest;; sub = (sub - 1) & rest) {
            VertexMask block = sub | low;
            if (clique[block] && dp[m ^ block] + 1 == dp[m] && (!pick || lex_less(block, *pick))) pick = block;
            if (!sub) break;
        }
        blocks.push_back(*pick);
        m ^= *pick;
    }
    return {static_cast<int>(dp[g.all_vertices()]), to_partition(q, blocks)};
}

void for_each_clique_partition(const SenderGraph& g, std::optional<std::size_t> max_blocks,
                               const std::function<void(const std::vector<VertexMask>&)>& visit,
                               const SolverLimits& limits) {
    check_limit(g, limits.max_partition_vertices, "clique partition enumeration");
    std::vector<VertexMask> blocks;
    partition_search(g, g.all_vertices(), blocks, max_blocks, visit);
}

std::vector<PartitionCover> enumerate_clique_partitions(const SenderGraph& g, const SolverLimits& limits) {
    std::vector<PartitionCover> out;
    for_each_clique_partition(
        g, std::nullopt, [&](const std::vector<VertexMask>& blocks) { out.push_back(to_partition(g.q(), blocks)); },
        limits);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PartitionCover> all_minimum_covers(const SenderGraph& g, const SolverLimits& limits) {
    check_limit(g, limits.max_partition_vertices, "minimum cover enumeration");
    const auto theta = static_cast<std::size_t>(clique_cover_number(g, limits).size);
    std::vector<PartitionCover> out;
    for_each_clique_partition(
        g, theta,
        [&](const std::vector<VertexMask>& blocks) {
            if (blocks.size() == theta) out.push_back(to_partition(g.q(), blocks));
        },
        limits);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace signalling
