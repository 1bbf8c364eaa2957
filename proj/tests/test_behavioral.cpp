#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "signalling/behavioral.hpp"
#include "signalling/equilibrium.hpp"
#include "signalling/errors.hpp"

using namespace signalling;

namespace {

using Rows = std::vector<std::vector<Rational>>;

Rational r(long n, long d = 1) { return Rational(n, d); }

// E_0 = {0}, E_1 = E_2 = {1}
BehavioralStrategy fig3() { return BehavioralStrategy(Rows{{1, 0, 0}, {0, 1, 0}, {0, 1, 0}}); }

// E_0 = {0}, E_2 = {1}, E_1 = {0, 1} with weights 9/10 and 1/10
BehavioralStrategy cbi() { return BehavioralStrategy(Rows{{1, 0, 0}, {r(9, 10), r(1, 10), 0}, {0, 1, 0}}); }

BehavioralStrategy from_supports(const std::vector<SymbolSet>& supports) {
    Rows rows;
    for (const auto& e : supports) {
        std::vector<Rational> row(supports.size());
        for (auto y : e) row[static_cast<std::size_t>(y)] = Rational(1, static_cast<long>(e.size()));
        rows.push_back(row);
    }
    return BehavioralStrategy(rows);
}

bool disjoint_supports(const SupportSets& s, const SymbolSet& set) {
    std::set<Symbol> seen;
    for (auto x : set)
        for (auto y : s.per_symbol[static_cast<std::size_t>(x)])
            if (!seen.insert(y).second) return false;
    return true;
}

// A random best response: pins the signals of a random maximum recovery set
// and draws every other column from a random distribution.
ReceiverKernel random_best_response(std::mt19937_64& rng, const BehavioralStrategy& pi) {
    const int q = pi.q();
    auto sets = max_recovery_sets(pi);
    auto s = supports(pi);
    std::uniform_int_distribution<std::size_t> which(0, sets.sets.size() - 1);
    const auto& d = sets.sets[which(rng)];
    std::uniform_int_distribution<int> weight(0, 5);
    std::vector<std::vector<Rational>> columns(static_cast<std::size_t>(q));
    for (int y = 0; y < q; ++y) {
        std::vector<int> w(static_cast<std::size_t>(q));
        int total = 0;
        while (total == 0) {
            total = 0;
            for (auto& v : w) total += (v = weight(rng));
        }
        auto& col = columns[static_cast<std::size_t>(y)];
        for (int v : w) col.emplace_back(v, total);
    }
    for (auto x : d)
        for (auto y : s.per_symbol[static_cast<std::size_t>(x)]) {
            auto& col = columns[static_cast<std::size_t>(y)];
            for (int xhat = 0; xhat < q; ++xhat) col[static_cast<std::size_t>(xhat)] = Rational(xhat == x ? 1 : 0);
        }
    return ReceiverKernel(q, columns);
}

}  // namespace

TEST_CASE("strategies, priors and kernels validate their input") {
    CHECK_THROWS_AS(BehavioralStrategy(Rows{{1, 0}, {r(1, 2), r(1, 3)}}), DomainError);
    CHECK_THROWS_AS(BehavioralStrategy(Rows{{2, -1}, {0, 1}}), DomainError);
    CHECK_THROWS_AS(BehavioralStrategy(Rows{{1, 0, 0}, {0, 1, 0}}), DimensionError);
    CHECK_THROWS_AS(Prior({r(1, 2), r(1, 2), 0}), DomainError);
    CHECK_THROWS_AS(Prior({r(1, 2), r(1, 3)}), DomainError);
    CHECK(Prior::parse("1/2, 1/4,0.25").values() == std::vector<Rational>{r(1, 2), r(1, 4), r(1, 4)});
    CHECK_THROWS_AS(Prior::parse("1/2,x"), ParseError);
    CHECK(Prior::uniform(4)[3] == r(1, 4));
    CHECK_THROWS_AS(ReceiverKernel(2, {{1, 1}, {}}), DomainError);
    auto k = ReceiverKernel::from(ReceiverStrategy({1, std::nullopt}));
    CHECK(k.specified(0));
    CHECK_FALSE(k.specified(1));
    CHECK(k(1, 0) == r(1));
    CHECK(BehavioralStrategy::deterministic(SenderStrategy({1, 1, 0}))(1, 0) == r(1));
}

TEST_CASE("supports") {
    auto id = supports(BehavioralStrategy::deterministic(SenderStrategy::identity(3)));
    CHECK(id.per_symbol == std::vector<SymbolSet>{{0}, {1}, {2}});
    CHECK(id.used == SymbolSet{0, 1, 2});
    auto uniform = supports(from_supports({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}));
    for (const auto& e : uniform.per_symbol) CHECK(e == SymbolSet{0, 1, 2});
    auto f = supports(fig3());
    CHECK(f.per_symbol == std::vector<SymbolSet>{{0}, {1}, {1}});
    CHECK(f.used == SymbolSet{0, 1});
}

TEST_CASE("maximum recovery sets") {
    auto id = max_recovery_sets(BehavioralStrategy::deterministic(SenderStrategy::identity(3)));
    CHECK(id.size == 3);
    CHECK(id.sets == std::vector<SymbolSet>{{0, 1, 2}});
    auto f = max_recovery_sets(fig3());
    CHECK(f.size == 2);
    CHECK(f.sets == std::vector<SymbolSet>{{0, 1}, {0, 2}});
    auto b = max_recovery_sets(cbi());
    CHECK(b.size == 2);
    CHECK(b.sets == std::vector<SymbolSet>{{0, 2}});
    auto pooled = max_recovery_sets(BehavioralStrategy::deterministic(SenderStrategy::constant(3, 1)));
    CHECK(pooled.size == 1);
    CHECK(pooled.sets.size() == 3);
}

TEST_CASE("expected utility on the skew matrix") {
    const auto u = oracle::u3();
    const auto p = Prior::uniform(3);
    auto id = BehavioralStrategy::deterministic(SenderStrategy::identity(3));
    CHECK(expected_utility(id, ReceiverKernel::from(ReceiverStrategy::total({0, 1, 2})), p, u) == r(0));
    for (int k = 0; k < 3; ++k)
        CHECK(expected_utility(cbi(), ReceiverKernel::from(ReceiverStrategy::total({k, k, k})), p, u) == r(0));
    // signal 1 decoded as 1 recovers {0, 1}; decoded as 2 recovers {0, 2}
    CHECK(expected_utility(fig3(), ReceiverKernel::from(ReceiverStrategy({0, 1, std::nullopt})), p, u) == r(1, 3));
    CHECK(expected_utility(fig3(), ReceiverKernel::from(ReceiverStrategy({0, 2, std::nullopt})), p, u) == r(-1, 3));
    CHECK_THROWS_AS(expected_utility(fig3(), ReceiverKernel::from(ReceiverStrategy({0, std::nullopt, 2})), p, u),
                    DomainError);
    CHECK_THROWS_AS(expected_utility(fig3(), ReceiverKernel::from(ReceiverStrategy({0, 1})), p, u), DimensionError);
}

TEST_CASE("minimum over best responses on the skew matrix") {
    const auto u = oracle::u3();
    const auto p = Prior::uniform(3);
    auto id = min_best_response_utility(BehavioralStrategy::deterministic(SenderStrategy({2, 0, 1})), p, u);
    CHECK(id.value == r(0));

    auto f = min_best_response_utility(fig3(), p, u);
    CHECK(f.value == r(-1, 3));
    CHECK(f.recovery_set == SymbolSet{0, 2});
    CHECK(f.witness.map()[1] == std::optional<Symbol>(2));
    CHECK_FALSE(f.witness.map()[2].has_value());

    auto b = min_best_response_utility(cbi(), p, u);
    CHECK(b.value == r(4, 15));
    CHECK(b.recovery_set == SymbolSet{0, 2});

    // every other C.a shape also sits at -1/3
    for (const auto& shape : std::vector<std::vector<SymbolSet>>{{{0, 2}, {1}, {1}}, {{0}, {1}, {1, 2}}, {{0}, {1, 2}, {1, 2}}})
        CHECK(min_best_response_utility(from_supports(shape), p, u).value == r(-1, 3));
}

TEST_CASE("class labels") {
    CHECK(classify_pi(BehavioralStrategy::deterministic(SenderStrategy({1, 2, 0}))) == "A");
    CHECK(classify_pi(BehavioralStrategy::deterministic(SenderStrategy::constant(3, 0))) == "B");
    CHECK(classify_pi(from_supports({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}})) == "B");
    CHECK(classify_pi(fig3()) == "C.a-i");
    CHECK(classify_pi(from_supports({{0, 2}, {1}, {1}})) == "C.a-ii");
    CHECK(classify_pi(from_supports({{0}, {1}, {1, 2}})) == "C.a-iii-1");
    CHECK(classify_pi(from_supports({{0}, {1, 2}, {1, 2}})) == "C.a-iii-2");
    CHECK(classify_pi(cbi()) == "C.b-i");
    CHECK(classify_pi(from_supports({{0}, {1}, {0, 1, 2}})) == "C.b-ii-1");
    CHECK(classify_pi(from_supports({{0}, {1, 2}, {0, 1}})) == "C.b-ii-2-alpha");
    CHECK(classify_pi(from_supports({{0}, {1, 2}, {0, 1, 2}})) == "C.b-ii-2-beta");
    CHECK_THROWS_AS(classify_pi(BehavioralStrategy::deterministic(SenderStrategy::identity(4))), UnsupportedError);
    CHECK(class_family("C.b-ii-2-beta") == "C.b");
    CHECK(class_family("C.a-i") == "C.a");
    CHECK(class_family("A") == "A");
}

TEST_CASE("skew structure") {
    CHECK(has_skew_structure(oracle::u3()));
    CHECK_FALSE(has_skew_structure(oracle::u2()));
    CHECK_FALSE(has_skew_structure(oracle::u1()));
}

TEST_CASE("recovery analysis") {
    auto a = analyze_recovery(cbi(), Prior::uniform(3), oracle::u3());
    CHECK(a.max_recovery_size == 2);
    CHECK(a.recovery_sets == std::vector<SymbolSet>{{0, 2}});
    CHECK(a.min_br_utility == r(4, 15));
    CHECK(a.supports.used == SymbolSet{0, 1});
}

TEST_CASE("minimum matches deterministic receivers and bounds random best responses") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 400; ++trial) {
        const int q = 2 + trial % 3;
        auto pi = oracle::random_behavioral(rng, q, 2 + trial % 11);
        auto u = oracle::random_matrix(rng, q, -3, 3);
        std::vector<Rational> weights;
        Rational total;
        for (int x = 0; x < q; ++x) {
            weights.emplace_back(1 + (trial + x) % 4);
            total += weights.back();
        }
        for (auto& w : weights) w /= total;
        Prior p(weights);

        auto best = min_best_response_utility(pi, p, u);
        auto expected = oracle::min_over_deterministic_receivers(pi, p, u);
        auto sets = max_recovery_sets(pi);
        CHECK(sets.size == expected.max_recovered);
        CHECK(best.value == expected.min_utility);
        CHECK(expected_utility(pi, ReceiverKernel::from(best.witness), p, u) == best.value);

        auto s = supports(pi);
        CHECK(sets.size >= 1);
        for (const auto& d : sets.sets) {
            CHECK(static_cast<int>(d.size()) == sets.size);
            CHECK(disjoint_supports(s, d));
        }
        for (int k = 0; k < 5; ++k) CHECK(expected_utility(pi, random_best_response(rng, pi), p, u) >= best.value);
    }
}

TEST_CASE("deterministic embedding agrees with the pure analysis") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int q = 2 + trial % 3;
        auto u = oracle::random_matrix(rng, q, -2, 2);
        auto p = Prior::uniform(q);
        for (std::uint64_t i = 0; i < SenderStrategy::count(q); ++i) {
            auto s = SenderStrategy::from_index(q, i);
            auto pi = BehavioralStrategy::deterministic(s);
            CHECK(static_cast<std::size_t>(max_recovery_sets(pi).size) == receiver_dilemma_set(s).size());
            // the receiver decodes each block to one member, so the value is a
            // per-block minimum, never below the diagonal at an equilibrium
            Rational per_block;
            const auto partition = receiver_dilemma_set(s);
            for (const auto& block : partition.blocks()) {
                std::optional<Rational> m;
                for (auto xhat : block) {
                    Rational v;
                    for (auto x : block) v += p[x] * u(xhat, x);
                    if (!m || v < *m) m = v;
                }
                per_block += *m;
            }
            const auto value = min_best_response_utility(pi, p, u).value;
            CHECK(value == per_block);
            Rational diag;
            for (int x = 0; x < q; ++x) diag += p[x] * u(x, x);
            if (is_equilibrium(s, u)) CHECK(value >= diag);
            if (s.is_injective()) CHECK(value == diag);
        }
    }
}
