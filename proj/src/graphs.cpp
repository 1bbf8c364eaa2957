#include "signalling/graphs.hpp"

#include <bit>

#include "signalling/errors.hpp"

namespace signalling {

VertexMask to_mask(const SymbolSet& s) {
    VertexMask m = 0;
    for (Symbol x : s) {
        if (x < 0 || x >= kMaxGraphVertices) throw SizeLimitError("symbol " + std::to_string(x) + " does not fit a vertex mask");
        m |= VertexMask{1} << x;
    }
    return m;
}

SymbolSet to_set(VertexMask m) {
    SymbolSet s;
    while (m) {
        s.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

std::string to_string(Flavor f) { return f == Flavor::Strong ? "strong" : "weak"; }

SenderGraph::SenderGraph(int q, Flavor flavor, const std::vector<Edge>& edges)
    : q_(q), flavor_(flavor), adj_(static_cast<std::size_t>(q), 0) {
    if (q < 1) throw DomainError("graph needs at least one vertex");
    if (q > kMaxGraphVertices)
        throw SizeLimitError("graph on " + std::to_string(q) + " vertices exceeds the limit of " +
                             std::to_string(kMaxGraphVertices));
    for (auto [x, y] : edges) {
        if (x < 0 || y < 0 || x >= q || y >= q)
            throw DomainError("edge (" + std::to_string(x) + ", " + std::to_string(y) + ") outside the vertex set");
        if (x == y) throw DomainError("self-loop at vertex " + std::to_string(x));
        adj_[static_cast<std::size_t>(x)] |= VertexMask{1} << y;
        adj_[static_cast<std::size_t>(y)] |= VertexMask{1} << x;
    }
}

std::vector<Edge> SenderGraph::edges() const {
    std::vector<Edge> out;
    for (Symbol x = 0; x < q_; ++x)
        for (Symbol y : to_set(adj_[static_cast<std::size_t>(x)]))
            if (x < y) out.emplace_back(x, y);
    return out;
}

std::size_t SenderGraph::edge_count() const {
    std::size_t twice = 0;
    for (auto m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
}

VertexMask SenderGraph::all_vertices() const {
    return q_ == kMaxGraphVertices ? ~VertexMask{0} : (VertexMask{1} << q_) - 1;
}

bool SenderGraph::is_clique(VertexMask members) const {
    for (VertexMask rest = members; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        VertexMask others = members & ~(VertexMask{1} << v);
        if ((adj_[static_cast<std::size_t>(v)] & others) != others) return false;
    }
    return true;
}

bool SenderGraph::is_independent(VertexMask members) const {
    for (VertexMask rest = members; rest; rest &= rest - 1)
        if (adj_[static_cast<std::size_t>(std::countr_zero(rest))] & members) return false;
    return true;
}

SenderGraph SenderGraph::complement() const {
    std::vector<Edge> comp;
    for (Symbol x = 0; x < q_; ++x)
        for (Symbol y = x + 1; y < q_; ++y)
            if (!has_edge(x, y)) comp.emplace_back(x, y);
    return SenderGraph(q_, flavor_, comp);
}

namespace {

// x prefers (weakly) being recovered as y over being recovered correctly.
bool prefers_confusion(const UtilityMatrix& u, Symbol x, Symbol y) { return u(x, x) <= u(y, x); }

template <typename Rule>
SenderGraph build(const UtilityMatrix& u, Flavor flavor, Rule rule) {
    std::vector<Edge> edges;
    for (Symbol x = 0; x < u.q(); ++x)
        for (Symbol y = x + 1; y < u.q(); ++y)
            if (rule(prefers_confusion(u, x, y), prefers_confusion(u, y, x))) edges.emplace_back(x, y);
    return SenderGraph(u.q(), flavor, edges);
}

}  // namespace

SenderGraph strong_sender_graph(const UtilityMatrix& u) {
    return build(u, Flavor::Strong, [](bool a, bool b) { return a && b; });
}

SenderGraph weak_sender_graph(const UtilityMatrix& u) {
    return build(u, Flavor::Weak, [](bool a, bool b) { return a || b; });
}

}  // namespace signalling
