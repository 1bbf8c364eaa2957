#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "signalling/errors.hpp"
#include "signalling/graphs.hpp"

using namespace signalling;

namespace {

std::vector<Edge> complete_edges(int q) {
    std::vector<Edge> e;
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y) e.emplace_back(x, y);
    return e;
}

bool subset(const SenderGraph& a, const SenderGraph& b) {
    for (auto [x, y] : a.edges())
        if (!b.has_edge(x, y)) return false;
    return true;
}

}  // namespace

TEST_CASE("strong sender graphs of the reference matrices") {
    CHECK(strong_sender_graph(oracle::u1()).edges() == complete_edges(3));
    CHECK(strong_sender_graph(oracle::u2()).edges() == std::vector<Edge>{{0, 1}});
    CHECK(strong_sender_graph(oracle::u3()).edges().empty());
    CHECK(strong_sender_graph(oracle::u3()).flavor() == Flavor::Strong);
}

TEST_CASE("weak sender graphs of the reference matrices") {
    CHECK(weak_sender_graph(oracle::u3()).edges() == complete_edges(3));
    CHECK(weak_sender_graph(oracle::u2()).edges() == complete_edges(3));
    CHECK(weak_sender_graph(oracle::u1()).edges() == complete_edges(3));
    auto identity = UtilityMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(weak_sender_graph(identity).edges().empty());
    CHECK(weak_sender_graph(identity).flavor() == Flavor::Weak);
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(SenderGraph(3, Flavor::Strong, {{1, 1}}), DomainError);
    CHECK_THROWS_AS(SenderGraph(3, Flavor::Strong, {{0, 3}}), DomainError);
    CHECK_THROWS_AS(SenderGraph(0, Flavor::Strong, {}), DomainError);
    CHECK_THROWS_AS(SenderGraph(65, Flavor::Strong, {}), SizeLimitError);
    SenderGraph g(3, Flavor::Weak, {{1, 0}, {0, 1}, {2, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacency(1) == SymbolSet{0, 2});
    CHECK(g.complement().edges() == std::vector<Edge>{{0, 2}});
    CHECK(g.is_clique(SymbolSet{0, 1}));
    CHECK_FALSE(g.is_clique(SymbolSet{0, 1, 2}));
    CHECK(g.is_independent(to_mask({0, 2})));
}

TEST_CASE("symmetric matrices with unequal diagonals can have different graphs") {
    auto u = UtilityMatrix::from_rows({{0, 1}, {1, 5}});
    CHECK(u.is_symmetric());
    CHECK(strong_sender_graph(u).edges().empty());
    CHECK(weak_sender_graph(u).edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("edge rules, inclusion and invariances on random matrices") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const int q = 2 + trial % 6;
        auto u = oracle::random_matrix(rng, q, -3, 3);
        auto strong = strong_sender_graph(u);
        auto weak = weak_sender_graph(u);
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y) {
                if (x == y) continue;
                CHECK(strong.has_edge(x, y) == oracle::strong_edge(u, x, y));
                CHECK(weak.has_edge(x, y) == oracle::weak_edge(u, x, y));
            }
        CHECK(subset(strong, weak));

        // shifting one column leaves both graphs unchanged
        auto rows = u.rows();
        const int column = trial % q;
        for (auto& r : rows) r[static_cast<std::size_t>(column)] += Rational(7, 3);
        auto shifted = UtilityMatrix::from_rows(rows);
        CHECK(strong_sender_graph(shifted) == strong);
        CHECK(weak_sender_graph(shifted) == weak);

        auto sym = oracle::random_symmetric_constant_diagonal(rng, q, -3, 3, trial % 3 - 1);
        CHECK(strong_sender_graph(sym).edges() == weak_sender_graph(sym).edges());
    }
}
