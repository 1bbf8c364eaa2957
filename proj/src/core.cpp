#include "signalling/core.hpp"

#include <algorithm>
#include <utility>

#include "signalling/errors.hpp"

namespace signalling {

namespace {

void check_symbol(Symbol x, int q, const char* what) {
    if (x < 0 || x >= q)
        throw DomainError(std::string(what) + " " + std::to_string(x) + " outside alphabet of size " +
                          std::to_string(q));
}

}  // namespace

UtilityMatrix::UtilityMatrix(int q, std::vector<Rational> entries) : q_(q), entries_(std::move(entries)) {
    if (q_ < 1) throw DimensionError("utility matrix needs q >= 1");
    if (entries_.size() != static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_))
        throw DimensionError("utility matrix of side " + std::to_string(q_) + " needs " +
                             std::to_string(q_ * q_) + " entries, got " + std::to_string(entries_.size()));
}

UtilityMatrix UtilityMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) throw DimensionError("utility matrix has no rows");
    const auto q = rows.size();
    std::vector<Rational> entries;
    entries.reserve(q * q);
    for (std::size_t i = 0; i < q; ++i) {
        if (rows[i].size() != q)
            throw DimensionError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                 " entries; expected " + std::to_string(q) + " for a square matrix");
        entries.insert(entries.end(), rows[i].begin(), rows[i].end());
    }
    return UtilityMatrix(static_cast<int>(q), std::move(entries));
}

std::vector<std::vector<Rational>> UtilityMatrix::rows() const {
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(q_));
    for (Symbol i = 0; i < q_; ++i)
        for (Symbol j = 0; j < q_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
    return out;
}

bool UtilityMatrix::is_symmetric() const {
    for (Symbol i = 0; i < q_; ++i)
        for (Symbol j = i + 1; j < q_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

SenderStrategy::SenderStrategy(std::vector<Symbol> map) : map_(std::move(map)) {
    if (map_.empty()) throw DomainError("sender strategy over an empty alphabet");
    for (Symbol y : map_) check_symbol(y, q(), "signal");
}

SenderStrategy SenderStrategy::identity(int q) {
    std::vector<Symbol> map(static_cast<std::size_t>(q));
    for (Symbol x = 0; x < q; ++x) map[static_cast<std::size_t>(x)] = x;
    return SenderStrategy(std::move(map));
}

SenderStrategy SenderStrategy::constant(int q, Symbol signal) {
    return SenderStrategy(std::vector<Symbol>(static_cast<std::size_t>(q), signal));
}

std::uint64_t SenderStrategy::count(int q) {
    std::uint64_t n = 1;
    for (int i = 0; i < q; ++i) n *= static_cast<std::uint64_t>(q);
    return n;
}

SenderStrategy SenderStrategy::from_index(int q, std::uint64_t index) {
    std::vector<Symbol> map(static_cast<std::size_t>(q));
    for (auto& y : map) {
        y = static_cast<Symbol>(index % static_cast<std::uint64_t>(q));
        index /= static_cast<std::uint64_t>(q);
    }
    return SenderStrategy(std::move(map));
}

SymbolSet SenderStrategy::range() const {
    SymbolSet r(map_.begin(), map_.end());
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

bool SenderStrategy::is_injective() const { return range().size() == map_.size(); }

bool SenderStrategy::is_constant() const { return range().size() == 1; }

ReceiverStrategy::ReceiverStrategy(std::vector<std::optional<Symbol>> map) : map_(std::move(map)) {
    for (const auto& v : map_)
        if (v) check_symbol(*v, q(), "recovered symbol");
}

ReceiverStrategy ReceiverStrategy::total(const std::vector<Symbol>& map) {
    return ReceiverStrategy(std::vector<std::optional<Symbol>>(map.begin(), map.end()));
}

PartitionCover::PartitionCover(int q, std::vector<SymbolSet> blocks) : q_(q), blocks_(std::move(blocks)) {
    if (q_ < 1) throw DomainError("partition of an empty alphabet");
    owner_.assign(static_cast<std::size_t>(q_), blocks_.size());
    for (auto& b : blocks_) {
        if (b.empty()) throw DomainError("partition has an empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const SymbolSet& a, const SymbolSet& b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        for (Symbol x : blocks_[i]) {
            check_symbol(x, q_, "partition element");
            if (owner_[static_cast<std::size_t>(x)] != blocks_.size())
                throw DomainError("symbol " + std::to_string(x) + " appears in two blocks");
            owner_[static_cast<std::size_t>(x)] = i;
        }
    }
    for (Symbol x = 0; x < q_; ++x)
        if (owner_[static_cast<std::size_t>(x)] == blocks_.size())
            throw DomainError("symbol " + std::to_string(x) + " is not covered by the partition");
}

PartitionCover PartitionCover::singletons(int q) {
    std::vector<SymbolSet> blocks;
    for (Symbol x = 0; x < q; ++x) blocks.push_back({x});
    return PartitionCover(q, std::move(blocks));
}

PartitionCover PartitionCover::whole(int q) {
    SymbolSet all;
    for (Symbol x = 0; x < q; ++x) all.push_back(x);
    return PartitionCover(q, {all});
}

UtilityMatrix parse_utility(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Rational>> parsed;
    parsed.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto& row = parsed.emplace_back();
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            try {
                row.push_back(Rational::parse(rows[i][j]));
            } catch (const ParseError& e) {
                throw ParseError("entry (" + std::to_string(i) + ", " + std::to_string(j) + "): " + e.what());
            }
        }
    }
    return UtilityMatrix::from_rows(parsed);
}

PartitionCover receiver_dilemma_set(const SenderStrategy& s) {
    std::vector<SymbolSet> preimages(static_cast<std::size_t>(s.q()));
    for (Symbol x = 0; x < s.q(); ++x) preimages[static_cast<std::size_t>(s(x))].push_back(x);
    std::erase_if(preimages, [](const SymbolSet& b) { return b.empty(); });
    return PartitionCover(s.q(), std::move(preimages));
}

SymbolSet recovered_set(const ReceiverStrategy& g, const SenderStrategy& s) {
    if (g.q() != s.q()) throw DimensionError("sender and receiver strategies use different alphabets");
    SymbolSet out;
    for (Symbol x = 0; x < s.q(); ++x) {
        auto xhat = g(s(x));
        if (!xhat) throw DomainError("receiver strategy undefined on signal " + std::to_string(s(x)));
        if (*xhat == x) out.push_back(x);
    }
    return out;
}

std::vector<Rational> diag_utility(const UtilityMatrix& u) {
    std::vector<Rational> d;
    d.reserve(static_cast<std::size_t>(u.q()));
    for (Symbol x = 0; x < u.q(); ++x) d.push_back(u(x, x));
    return d;
}

SenderStrategy witness_strategy(const PartitionCover& partition) {
    std::vector<Symbol> map(static_cast<std::size_t>(partition.q()));
    for (const auto& block : partition.blocks())
        for (Symbol x : block) map[static_cast<std::size_t>(x)] = block.front();
    return SenderStrategy(std::move(map));
}

}  // namespace signalling
