#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "signalling/duality.hpp"
#include "signalling/equilibrium.hpp"
#include "signalling/errors.hpp"

using namespace signalling;

namespace {

SenderGraph complete(int q) {
    std::vector<Edge> e;
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y) e.emplace_back(x, y);
    return SenderGraph(q, Flavor::Strong, e);
}

SenderGraph edgeless(int q) { return SenderGraph(q, Flavor::Strong, {}); }
SenderGraph single_edge() { return SenderGraph(3, Flavor::Strong, {{0, 1}}); }
SenderGraph five_cycle() { return SenderGraph(5, Flavor::Strong, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

// Plain scan over every assignment; keeps the lexicographically greatest optimum.
BinarySolution scan(const BinaryProgram& prog) {
    const std::size_t n = prog.variable_count();
    BinarySolution best;
    bool found = false;
    for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
        std::vector<bool> a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = (m >> (n - 1 - i)) & 1U;
        if (!is_feasible(prog, a)) continue;
        const int value = static_cast<int>(std::count(a.begin(), a.end(), true));
        const bool better = !found || (prog.sense == Sense::Maximize ? value > best.optimum : value < best.optimum) ||
                            (value == best.optimum && a > best.assignment);
        if (better) {
            best = {value, a};
            found = true;
        }
    }
    return best;
}

BinaryProgram random_program(std::mt19937_64& rng, std::size_t n, Sense sense) {
    BinaryProgram prog;
    prog.sense = sense;
    for (std::size_t i = 0; i < n; ++i) {
        prog.names.push_back("v" + std::to_string(i));
        prog.supports.push_back({static_cast<Symbol>(i)});
    }
    std::uniform_int_distribution<std::size_t> rows(1, n + 2);
    std::bernoulli_distribution coin(0.3);
    const std::size_t m = rows(rng);
    for (std::size_t r = 0; r < m; ++r) {
        Constraint c;
        c.relation = sense == Sense::Maximize ? Relation::AtMost : Relation::AtLeast;
        for (std::size_t i = 0; i < n; ++i)
            if (coin(rng)) c.variables.push_back(i);
        if (c.variables.empty()) c.variables.push_back(r % n);
        prog.constraints.push_back(std::move(c));
    }
    return prog;
}

}  // namespace

TEST_CASE("primal programs") {
    auto k3 = build_primal(complete(3));
    CHECK(k3.variable_count() == 3);
    CHECK(k3.constraints.size() == 1);
    CHECK(solve_binary(k3).optimum == 1);
    CHECK(solve_binary(k3).assignment == std::vector<bool>{true, false, false});

    auto e3 = build_primal(edgeless(3));
    CHECK(e3.constraints.size() == 3);
    CHECK(solve_binary(e3).optimum == 3);

    CHECK(solve_binary(build_primal(single_edge())).optimum == 2);
    CHECK(solve_binary(build_primal(five_cycle())).optimum == 2);
    CHECK(k3.names == std::vector<std::string>{"x0", "x1", "x2"});
}

TEST_CASE("dual programs") {
    auto k3 = build_dual(complete(3));
    CHECK(k3.variable_count() == 7);
    CHECK(k3.constraints.size() == 3);
    CHECK(solve_binary(k3).optimum == 1);

    auto e3 = build_dual(edgeless(3));
    auto sol = solve_binary(e3);
    CHECK(sol.optimum == 3);
    CHECK(sol.assignment == std::vector<bool>{true, true, true});

    auto edge = build_dual(single_edge());
    auto es = solve_binary(edge);
    CHECK(es.optimum == 2);
    CHECK(cover_from_assignment(3, edge, es.assignment) == PartitionCover(3, {{0, 1}, {2}}));
    CHECK(solve_binary(build_dual(five_cycle())).optimum == 3);
}

TEST_CASE("overlapping selections become disjoint covers") {
    auto dual = build_dual(complete(3));
    std::vector<bool> pick(dual.variable_count(), false);
    for (std::size_t i = 0; i < dual.variable_count(); ++i)
        if (dual.supports[i] == SymbolSet{0, 1} || dual.supports[i] == SymbolSet{1, 2}) pick[i] = true;
    CHECK(cover_from_assignment(3, dual, pick) == PartitionCover(3, {{0, 1}, {2}}));
}

TEST_CASE("program validation and limits") {
    BinaryProgram bad;
    bad.names = {"a"};
    bad.supports = {{0}};
    bad.constraints.push_back({{3}, Relation::AtMost, 1});
    CHECK_THROWS_AS(validate(bad), DomainError);
    CHECK_THROWS_AS(solve_binary(bad), DomainError);

    BinaryProgram infeasible;
    infeasible.sense = Sense::Minimize;
    infeasible.names = {"a"};
    infeasible.supports = {{0}};
    infeasible.constraints.push_back({{0}, Relation::AtLeast, 2});
    CHECK_THROWS_AS(solve_binary(infeasible), DomainError);

    std::mt19937_64 rng(1);
    auto wide = random_program(rng, 40, Sense::Maximize);
    BinarySolverOptions tight;
    tight.max_variables = 30;
    CHECK_THROWS_AS(solve_binary(wide, tight), SizeLimitError);
    CHECK_THROWS_AS(solve_binary(wide, SolveMethod::Exhaustive), SizeLimitError);
}

TEST_CASE("LP listing") {
    auto text = to_lp_string(build_primal(single_edge()));
    CHECK(text.find("maximize") != std::string::npos);
    CHECK(text.find("x0 + x1 <= 1") != std::string::npos);
    auto dual = to_lp_string(build_dual(single_edge()));
    CHECK(dual.find("minimize") != std::string::npos);
    CHECK(dual.find(">= 1") != std::string::npos);
}

TEST_CASE("both solver paths agree with a plain scan") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 14);
        const Sense sense = trial % 2 == 0 ? Sense::Maximize : Sense::Minimize;
        auto prog = random_program(rng, n, sense);
        auto expected = scan(prog);
        auto ex = solve_binary(prog, SolveMethod::Exhaustive);
        auto bb = solve_binary(prog, SolveMethod::BranchAndBound);
        CHECK(ex.optimum == expected.optimum);
        CHECK(bb.optimum == expected.optimum);
        CHECK(ex.assignment == expected.assignment);
        CHECK(bb.assignment == expected.assignment);
    }
}

TEST_CASE("optima equal alpha and theta on random graphs") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 250; ++trial) {
        const int q = 1 + trial % 8;
        auto g = oracle::random_graph(rng, q, 0.2 + 0.1 * (trial % 7));
        auto primal = build_primal(g);
        auto dual = build_dual(g);
        auto p = solve_binary(primal);
        auto d = solve_binary(dual);
        CHECK(p.optimum == oracle::alpha(g));
        CHECK(d.optimum == oracle::theta(g));
        CHECK(p.optimum <= d.optimum);
        CHECK(is_feasible(primal, p.assignment));
        CHECK(is_feasible(dual, d.assignment));
        CHECK(solve_binary(dual, SolveMethod::BranchAndBound).optimum == d.optimum);
        auto cover = cover_from_assignment(q, dual, d.assignment);
        CHECK(cover.size() == static_cast<std::size_t>(d.optimum));
        for (const auto& b : cover.blocks()) CHECK(g.is_clique(b));
    }
}

TEST_CASE("duality reports") {
    auto r3 = duality_report(oracle::u3());
    CHECK(r3.extraction_capacity == 1);
    CHECK(r3.informativeness == 3);
    CHECK(r3.leader_follower_gap == 2);
    CHECK_FALSE(r3.symmetric);

    auto r2 = duality_report(oracle::u2());
    CHECK(r2.extraction_capacity == 1);
    CHECK(r2.informativeness == 2);

    auto r1 = duality_report(oracle::u1());
    CHECK(r1.symmetric);
    CHECK(r1.primal_optimum == 1);
    CHECK(r1.dual_optimum == 1);
    CHECK(r1.extraction_capacity == 1);
    CHECK(r1.informativeness == 1);
    CHECK(r1.dual_witness == PartitionCover::whole(3));

    // symmetric, but the diagonal breaks the coincidence of the two graphs
    auto split = duality_report(UtilityMatrix::from_rows({{0, 1}, {1, 5}}));
    CHECK(split.symmetric);
    CHECK_FALSE(split.graphs_coincide);
    CHECK(split.extraction_capacity == 1);
    CHECK(split.primal_optimum == 2);
    CHECK(split.dual_optimum == 2);

    auto identity = UtilityMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(extraction_capacity(identity) == 3);
    CHECK(extraction_capacity(oracle::u1()) == 1);
}

TEST_CASE("leader never extracts more than the follower reveals") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const int q = 2 + trial % 5;
        auto u = oracle::random_matrix(rng, q, -3, 3);
        auto r = duality_report(u);
        CHECK(r.extraction_capacity == oracle::alpha(weak_sender_graph(u)));
        CHECK(r.informativeness == oracle::theta(strong_sender_graph(u)));
        CHECK(r.extraction_capacity <= r.informativeness);
        CHECK(r.leader_follower_gap == r.informativeness - r.extraction_capacity);

        auto sym = oracle::random_symmetric_constant_diagonal(rng, q, -3, 3, 0);
        auto s = duality_report(sym);
        CHECK(s.symmetric);
        CHECK(s.graphs_coincide);
        CHECK(s.primal_optimum == s.extraction_capacity);
        CHECK(s.dual_optimum == s.informativeness);

        auto general = duality_report(oracle::random_symmetric_matrix(rng, q, -3, 3));
        CHECK(general.primal_optimum >= general.extraction_capacity);
        CHECK(general.dual_optimum == general.informativeness);
    }
}
