#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "signalling/core.hpp"

namespace signalling {

/// Bitset over vertices; bit v set iff vertex v is a member.
using VertexMask = std::uint64_t;

inline constexpr int kMaxGraphVertices = 64;

VertexMask to_mask(const SymbolSet& s);
SymbolSet to_set(VertexMask m);

/// Which edge rule produced a sender graph.
enum class Flavor { Strong, Weak };

std::string to_string(Flavor f);

using Edge = std::pair<Symbol, Symbol>;

/// Simple undirected graph on {0..q-1}, stored as one adjacency bitset per vertex.
class SenderGraph {
public:
    /// Self-loops are rejected; duplicate and reversed edges collapse.
    SenderGraph(int q, Flavor flavor, const std::vector<Edge>& edges);

    int q() const { return q_; }
    Flavor flavor() const { return flavor_; }

    bool has_edge(Symbol x, Symbol y) const { return x != y && ((adj_[static_cast<std::size_t>(x)] >> y) & 1U); }
    VertexMask neighbours(Symbol x) const { return adj_[static_cast<std::size_t>(x)]; }
    SymbolSet adjacency(Symbol x) const { return to_set(neighbours(x)); }

    /// Edges as (x, y) with x < y, sorted lexicographically.
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;

    VertexMask all_vertices() const;
    bool is_clique(VertexMask members) const;
    bool is_clique(const SymbolSet& members) const { return is_clique(to_mask(members)); }
    bool is_independent(VertexMask members) const;

    /// Same flavor tag, complementary edge set.
    SenderGraph complement() const;

    friend bool operator==(const SenderGraph&, const SenderGraph&) = default;

private:
    int q_;
    Flavor flavor_;
    std::vector<VertexMask> adj_;
};

/// Edge {x,y} iff U(x,x) <= U(y,x) and U(y,y) <= U(x,y).
SenderGraph strong_sender_graph(const UtilityMatrix& u);

/// Edge {x,y} iff U(x,x) <= U(y,x) or U(y,y) <= U(x,y).
SenderGraph weak_sender_graph(const UtilityMatrix& u);

}  // namespace signalling
