#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "signalling/errors.hpp"
#include "signalling/grid_search.hpp"

using namespace signalling;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

std::uint64_t histogram_total(const GridSearchResult& g) {
    std::uint64_t total = 0;
    for (const auto& [label, count] : g.class_histogram) total += count;
    return total;
}

UtilityMatrix scaled(const UtilityMatrix& u, const Rational& factor) {
    auto rows = u.rows();
    for (auto& row : rows)
        for (auto& e : row) e *= factor;
    return UtilityMatrix::from_rows(rows);
}

}  // namespace

TEST_CASE("grid sizes") {
    CHECK(grid_size(3, 1) == 27);
    CHECK(grid_size(3, 4) == 3375);
    CHECK(grid_size(3, 10) == 287496);
    CHECK(grid_size(3, 20) == 12326391);
    CHECK_THROWS_AS(grid_size(3, 0), DomainError);
    CHECK_THROWS_AS(grid_size(16, 1000), SizeLimitError);
}

TEST_CASE("limit points") {
    BehavioralStrategy pi({{1, 0, 0}, {r(9, 10), r(1, 10), 0}, {0, 1, 0}});
    auto lim = limit_point(pi, 10);
    CHECK(lim == BehavioralStrategy({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
    BehavioralStrategy halves({{r(1, 2), r(1, 2), 0}, {r(1, 4), r(1, 2), r(1, 4)}, {0, 0, 1}});
    CHECK(limit_point(halves, 4) == BehavioralStrategy({{r(1, 2), r(1, 2), 0}, {0, 1, 0}, {0, 0, 1}}));
    // on ties the first largest entry absorbs the mass
    CHECK(limit_point(halves, 2) == BehavioralStrategy({{1, 0, 0}, {r(1, 4), r(1, 2), r(1, 4)}, {0, 0, 1}}));
}

TEST_CASE("skew matrix grid maxima stay below one third") {
    const auto u = oracle::u3();
    const auto p = Prior::uniform(3);

    auto g4 = grid_search_sup(u, p, 4);
    CHECK(g4.max_value == r(1, 6));
    CHECK(g4.points == 3375);
    CHECK(histogram_total(g4) == 3375);

    auto g10 = grid_search_sup(u, p, 10);
    CHECK(g10.max_value == r(4, 15));
    CHECK(g10.points == 287496);
    CHECK(histogram_total(g10) == 287496);
    CHECK(g10.evaluated < g10.points);
    CHECK(g10.integer_arithmetic);
    CHECK(g10.argmax_class == "C.b-i");
    CHECK(class_family(g10.argmax_class) == "C.b");
    CHECK(min_best_response_utility(g10.argmax, p, u).value == g10.max_value);
    CHECK(class_family(g10.limit_class) == "C.a");
    CHECK(g10.limit_value == r(-1, 3));
    CHECK(g10.sup_estimate == r(1, 3));
    CHECK_FALSE(g10.attained);
    CHECK(g10.verdict() == "supremum not attained on grid; max = 4/15");

    auto g20 = grid_search_sup(u, p, 20);
    CHECK(g20.max_value == r(3, 10));
    CHECK(g20.argmax_class == "C.b-i");
    CHECK(g20.limit_value == r(-1, 3));
    CHECK_FALSE(g20.attained);
}

TEST_CASE("grid maxima increase with the denominator" * doctest::timeout(300)) {
    const auto u = oracle::u3();
    const auto p = Prior::uniform(3);
    GridSearchOptions wide;
    wide.max_points = 3'000'000'000ULL;
    std::vector<Rational> maxima;
    for (int n : {4, 10, 20, 50}) {
        auto g = grid_search_sup(u, p, n, wide);
        CHECK(g.max_value == r(1, 3) * (r(1) - r(2, n)));
        CHECK(g.max_value < r(1, 3));
        maxima.push_back(g.max_value);
    }
    for (std::size_t i = 1; i < maxima.size(); ++i) CHECK(maxima[i - 1] < maxima[i]);
}

TEST_CASE("the all-ones matrix attains its maximum by pooling") {
    const auto u = oracle::u1();
    const auto p = Prior::uniform(3);

    Rational brute;
    bool first = true;
    oracle::for_each_grid_strategy(3, 4, [&](const BehavioralStrategy& pi) {
        auto v = oracle::min_over_deterministic_receivers(pi, p, u).min_utility;
        if (first || v > brute) brute = v;
        first = false;
    });
    CHECK(brute == r(2, 3));

    for (int n : {4, 10, 20}) {
        auto g = grid_search_sup(u, p, n);
        CHECK(g.max_value == r(2, 3));
        CHECK(g.attained);
        CHECK(g.argmax_class == "B");
        CHECK(g.argmax == BehavioralStrategy({{0, 0, 1}, {0, 0, 1}, {0, 0, 1}}));
        CHECK(g.verdict() == "maximum attained on grid; max = 2/3");
    }
}

TEST_CASE("skew matrix grid agrees with the deterministic-receiver oracle") {
    const auto u = oracle::u3();
    const auto p = Prior::uniform(3);
    Rational brute;
    bool first = true;
    std::uint64_t points = 0;
    oracle::for_each_grid_strategy(3, 4, [&](const BehavioralStrategy& pi) {
        auto v = oracle::min_over_deterministic_receivers(pi, p, u).min_utility;
        if (first || v > brute) brute = v;
        first = false;
        ++points;
    });
    CHECK(points == 3375);
    CHECK(brute == grid_search_sup(u, p, 4).max_value);
}

TEST_CASE("symmetry reduction and streaming see the same grid") {
    const auto p = Prior::parse("1/2,1/3,1/6");
    for (const auto& u : {oracle::u1(), oracle::u2(), oracle::u3()}) {
        GridSearchOptions full;
        full.use_symmetry = false;
        auto a = grid_search_sup(u, p, 6);
        auto b = grid_search_sup(u, p, 6, full);
        CHECK(a.max_value == b.max_value);
        CHECK(a.argmax == b.argmax);
        CHECK(a.class_histogram == b.class_histogram);
        CHECK(a.limit_value == b.limit_value);
        CHECK(b.evaluated == b.points);

        std::uint64_t seen = 0;
        Rational best;
        GridSearchOptions stream;
        stream.on_point = [&](const BehavioralStrategy& pi, const Rational& value, const std::string& label) {
            if (seen % 37 == 0) {
                CHECK(value == min_best_response_utility(pi, p, u).value);
                CHECK(label == classify_pi(pi));
            }
            if (seen == 0 || value > best) best = value;
            ++seen;
        };
        auto c = grid_search_sup(u, p, 3, stream);
        CHECK(seen == grid_size(3, 3));
        CHECK(best == c.max_value);
    }
}

TEST_CASE("rational fallback matches the integer path") {
    const auto p = Prior::uniform(3);
    const Rational huge{mpq_class(mpz_class(1) << 61)};
    auto small = grid_search_sup(oracle::u3(), p, 5);
    auto big = grid_search_sup(scaled(oracle::u3(), huge), p, 5);
    CHECK(small.integer_arithmetic);
    CHECK_FALSE(big.integer_arithmetic);
    CHECK(big.max_value == small.max_value * huge);
    CHECK(big.argmax == small.argmax);
    CHECK(big.class_histogram == small.class_histogram);

    auto fractional = grid_search_sup(scaled(oracle::u2(), r(1, 7)), p, 5);
    CHECK(fractional.max_value == grid_search_sup(oracle::u2(), p, 5).max_value * r(1, 7));
}

TEST_CASE("grid search rejects bad input") {
    const auto p = Prior::uniform(3);
    GridSearchOptions tight;
    tight.max_points = 1000;
    CHECK_THROWS_AS(grid_search_sup(oracle::u3(), p, 10, tight), SizeLimitError);
    CHECK_THROWS_AS(grid_search_sup(oracle::u3(), p, 0), DomainError);
    CHECK_THROWS_AS(grid_search_sup(oracle::u3(), Prior::uniform(2), 4), DimensionError);
    CHECK_THROWS_AS(grid_search_sup(UtilityMatrix(2, std::vector<Rational>(4)), Prior::uniform(2), 4),
                    UnsupportedError);
}
