#include "signalling/equilibrium.hpp"

#include <algorithm>

#include "signalling/errors.hpp"
#include "signalling/graphs.hpp"

namespace signalling {

namespace {

void check_dims(const SenderStrategy& s, const UtilityMatrix& u) {
    if (s.q() != u.q())
        throw DimensionError("strategy over " + std::to_string(s.q()) + " symbols, matrix of side " +
                             std::to_string(u.q()));
}

// Worst case over best responses, with the best-response set found by
// trying every receiver map.
std::vector<Rational> brute_worst_case(const std::vector<Symbol>& s, const UtilityMatrix& u,
                                       std::vector<Symbol>& g) {
    const int q = u.q();
    const std::uint64_t receivers = SenderStrategy::count(q);
    int best = -1;
    std::vector<const Rational*> worst(static_cast<std::size_t>(q), nullptr);
    for (std::uint64_t index = 0; index < receivers; ++index) {
        std::uint64_t code = index;
        for (auto& v : g) {
            v = static_cast<Symbol>(code % static_cast<std::uint64_t>(q));
            code /= static_cast<std::uint64_t>(q);
        }
        int recovered = 0;
        for (Symbol x = 0; x < q; ++x)
            if (g[static_cast<std::size_t>(s[static_cast<std::size_t>(x)])] == x) ++recovered;
        if (recovered < best) continue;
        if (recovered > best) {
            best = recovered;
            std::fill(worst.begin(), worst.end(), nullptr);
        }
        for (Symbol x = 0; x < q; ++x) {
            const Rational& value = u(g[static_cast<std::size_t>(s[static_cast<std::size_t>(x)])], x);
            auto& w = worst[static_cast<std::size_t>(x)];
            if (!w || value < *w) w = &value;
        }
    }
    std::vector<Rational> out;
    out.reserve(worst.size());
    for (auto* w : worst) out.push_back(*w);
    return out;
}

}  // namespace

BestResponse best_response_set(const SenderStrategy& s) {
    BestResponse br;
    std::vector<SymbolSet> pre(static_cast<std::size_t>(s.q()));
    for (Symbol x = 0; x < s.q(); ++x) pre[static_cast<std::size_t>(s(x))].push_back(x);
    for (Symbol i = 0; i < s.q(); ++i)
        if (!pre[static_cast<std::size_t>(i)].empty())
            br.candidates.emplace_back(i, std::move(pre[static_cast<std::size_t>(i)]));
    br.recovered_count = br.candidates.size();
    return br;
}

std::vector<Rational> worst_case_utility(const SenderStrategy& s, const UtilityMatrix& u) {
    check_dims(s, u);
    const auto dilemma = receiver_dilemma_set(s);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(u.q()));
    for (Symbol x = 0; x < u.q(); ++x) {
        const auto& block = dilemma.blocks()[dilemma.block_of(x)];
        Rational worst = u(block.front(), x);
        for (Symbol xhat : block) worst = std::min(worst, u(xhat, x));
        out.push_back(std::move(worst));
    }
    return out;
}

bool is_equilibrium(const SenderStrategy& s, const UtilityMatrix& u) {
    check_dims(s, u);
    const auto partition = receiver_dilemma_set(s);
    for (const auto& block : partition.blocks())
        for (Symbol x : block)
            for (Symbol xhat : block)
                if (!(u(x, x) <= u(xhat, x))) return false;
    return true;
}

std::vector<bool> bruteforce_equilibrium_table(const UtilityMatrix& u, int max_q) {
    const int q = u.q();
    if (q > max_q)
        throw SizeLimitError("brute-force equilibrium check enumerates q^q strategies; q = " + std::to_string(q) +
                             " exceeds the limit " + std::to_string(max_q));
    const std::uint64_t senders = SenderStrategy::count(q);
    std::vector<Symbol> g(static_cast<std::size_t>(q));
    std::vector<std::vector<Rational>> worst;
    worst.reserve(senders);
    for (std::uint64_t index = 0; index < senders; ++index)
        worst.push_back(brute_worst_case(SenderStrategy::from_index(q, index).map(), u, g));

    std::vector<Rational> best = worst.front();
    for (const auto& w : worst)
        for (std::size_t x = 0; x < best.size(); ++x) best[x] = std::max(best[x], w[x]);

    std::vector<bool> table(senders);
    for (std::uint64_t index = 0; index < senders; ++index)
        table[index] = std::equal(worst[index].begin(), worst[index].end(), best.begin(),
                                  [](const Rational& a, const Rational& b) { return a >= b; });
    return table;
}

bool is_equilibrium_bruteforce(const SenderStrategy& s, const UtilityMatrix& u, int max_q) {
    check_dims(s, u);
    std::uint64_t index = 0;
    for (Symbol x = s.q() - 1; x >= 0; --x) index = index * static_cast<std::uint64_t>(s.q()) + static_cast<std::uint64_t>(s(x));
    return bruteforce_equilibrium_table(u, max_q)[index];
}

std::vector<PartitionCover> enumerate_equilibrium_partitions(const UtilityMatrix& u, const SolverLimits& limits) {
    return enumerate_clique_partitions(strong_sender_graph(u), limits);
}

int informativeness(const UtilityMatrix& u, const SolverLimits& limits) {
    return clique_cover_number(strong_sender_graph(u), limits).size;
}

std::string to_string(EquilibriumClass c) {
    switch (c) {
        case EquilibriumClass::Separating: return "separating";
        case EquilibriumClass::Pooling: return "pooling";
        case EquilibriumClass::SemiSeparating: return "semi-separating";
    }
    return "unknown";
}

EquilibriumClass classify(const SenderStrategy& s) {
    if (s.is_injective()) return EquilibriumClass::Separating;
    if (s.is_constant()) return EquilibriumClass::Pooling;
    return EquilibriumClass::SemiSeparating;
}

ClassExistence class_existence_from_informativeness(int informativeness, int q) {
    ClassExistence flags;
    flags.only_separating = informativeness == q;
    flags.pooling_exists = informativeness == 1;
    // With q = 2 the only non-singleton partition is the pooling one, so a
    // small informativeness gives no semi-separating equilibrium there.
    flags.semi_separating_exists = informativeness < q && q >= 3;
    return flags;
}

ClassExistence class_existence_from_partitions(const std::vector<PartitionCover>& partitions, int q) {
    ClassExistence flags;
    flags.only_separating = true;
    for (const auto& p : partitions) {
        const auto blocks = p.size();
        if (blocks != static_cast<std::size_t>(q)) flags.only_separating = false;
        if (blocks == 1) flags.pooling_exists = true;
        if (blocks > 1 && blocks < static_cast<std::size_t>(q)) flags.semi_separating_exists = true;
    }
    return flags;
}

ClassExistence class_existence(const UtilityMatrix& u, const SolverLimits& limits, int cross_validate_max_q) {
    auto flags = class_existence_from_informativeness(informativeness(u, limits), u.q());
    if (u.q() <= cross_validate_max_q) {
        auto enumerated = class_existence_from_partitions(enumerate_equilibrium_partitions(u, limits), u.q());
        if (!(enumerated == flags))
            throw Error("equilibrium class flags from informativeness disagree with enumeration");
        flags.cross_validated = true;
    }
    return flags;
}

EquilibriumReport equilibrium_report(const UtilityMatrix& u, const SolverLimits& limits) {
    EquilibriumReport report;
    report.informativeness = informativeness(u, limits);
    report.max_recovered = u.q();
    if (u.q() <= limits.max_partition_vertices) report.equilibrium_partitions = enumerate_equilibrium_partitions(u, limits);
    report.class_existence = class_existence(u, limits);
    return report;
}

}  // namespace signalling
